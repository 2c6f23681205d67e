#pragma once

#include <memory>
#include <optional>
#include <span>

#include "ttd/graph.hpp"
#include "ttd/sepsys.hpp"

namespace ttd {

// The universe of all separations (A,B) of a finite graph: A ∪ B = V and no
// edge joins A∖B to B∖A.  The poset is (A,B) ≤ (C,D) ⟺ A ⊆ C ∧ B ⊇ D, the
// involution swaps sides, join/meet are (A∪C, B∩D)/(A∩C, B∪D), and the order
// is |A∩B|.  Every separation is materialized up front (one per separator X
// and component side-assignment of G−X), so the guard n ≤ 10 keeps the table
// small; ids are assigned in lexicographic (A,B) order.
class GraphUniverse final : public Universe {
 public:
  static constexpr int kMaxVertices = 10;

  static std::shared_ptr<const GraphUniverse> build(const Graph& g);

  int size() const override { return static_cast<int>(a_.size()); }
  Sep inverse(Sep x) const override;
  bool leq(Sep x, Sep y) const override;
  Sep join(Sep x, Sep y) const override;
  Sep meet(Sep x, Sep y) const override;
  Order order_of(Sep x) const override;
  std::string label(Sep x) const override;

  const Graph& graph() const { return g_; }
  VSet a_side(Sep x) const;
  VSet b_side(Sep x) const;
  std::optional<Sep> find(VSet a, VSet b) const;  // absent if not a separation
  Sep at(VSet a, VSet b) const;                   // DomainError if absent
  Sep degenerate() const { return degenerate_; }  // the unique (V,V)

 private:
  Graph g_;
  std::vector<VSet> a_, b_;
  std::vector<Sep> inv_;
  std::vector<Order> order_;
  Sep degenerate_ = -1;
  // Open-addressed map from (A,B) to id, sized to a power of two.
  std::vector<std::pair<std::pair<VSet, VSet>, Sep>> table_;
  std::uint64_t mask_ = 0;
  void index_sides();
};

// True iff (A,B) is a separation of G.
bool is_separation(const Graph& g, VSet a, VSet b);

// All oriented separations of order < k, as a system over the graph universe.
SepSystem enumerate_sk(std::shared_ptr<const GraphUniverse> u, int k);
SepSystem enumerate_sk(const Graph& g, int k);

// Intersection of the B-sides of a star (V for the empty star).
VSet interior(const GraphUniverse& u, std::span<const Sep> sigma);

}  // namespace ttd
