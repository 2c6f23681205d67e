#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ttd/common.hpp"

namespace ttd {

// An oriented separation is identified by an integer id within its universe.
using Sep = std::int32_t;

// Orders are exact integers (rational order functions must be scaled to a
// common denominator by the caller); no floating point is used anywhere.
using Order = std::int64_t;

// A universe of oriented separations: a finite poset with an order-reversing
// involution, partial lattice operations (join/meet of two elements may be
// undefined in abstract universes), and a symmetric order function.
class Universe {
 public:
  virtual ~Universe() = default;

  virtual int size() const = 0;
  virtual Sep inverse(Sep x) const = 0;
  virtual bool leq(Sep x, Sep y) const = 0;
  virtual Sep join(Sep x, Sep y) const = 0;  // throws DomainError if undefined
  virtual Sep meet(Sep x, Sep y) const = 0;  // throws DomainError if undefined
  virtual Order order_of(Sep x) const = 0;
  virtual std::string label(Sep x) const = 0;

  bool lt(Sep x, Sep y) const { return x != y && leq(x, y); }
  bool is_small(Sep x) const { return leq(x, inverse(x)); }
  bool is_degenerate(Sep x) const { return inverse(x) == x; }

  // Two separations are nested iff they have leq-comparable orientations;
  // otherwise they cross.
  bool nested(Sep x, Sep y) const;

  void check(Sep x) const;  // throws DomainError when x is out of range
};

// Explicitly tabulated universe for abstract/synthetic instances.  The
// declared relation is closed reflexively and transitively at build time;
// join and meet are derived as unique least upper / greatest lower bounds
// and are partial (DomainError when no unique bound exists).
class TableUniverse final : public Universe {
 public:
  class Builder {
   public:
    Sep add(std::string label, Order order);
    // Declare a*, b* to be each other's inverses; a == b marks a degenerate
    // element.
    Builder& set_inverse(Sep a, Sep b);
    Builder& add_leq(Sep lo, Sep hi);
    std::shared_ptr<const TableUniverse> build() const;

   private:
    std::vector<std::string> labels_;
    std::vector<Order> orders_;
    std::vector<Sep> inv_;
    std::vector<std::pair<Sep, Sep>> leq_;
    friend class TableUniverse;
  };

  int size() const override { return static_cast<int>(labels_.size()); }
  Sep inverse(Sep x) const override;
  bool leq(Sep x, Sep y) const override;
  Sep join(Sep x, Sep y) const override;
  Sep meet(Sep x, Sep y) const override;
  Order order_of(Sep x) const override;
  std::string label(Sep x) const override;

 private:
  std::vector<std::string> labels_;
  std::vector<Order> orders_;
  std::vector<Sep> inv_;
  std::vector<std::vector<char>> leq_;  // leq_[x][y] == x ≤ y
  std::optional<Sep> bound(Sep x, Sep y, bool upper) const;
};

// Classification of an element relative to a separation system S.
struct Classification {
  bool small = false;         // x ≤ x*
  bool trivial_in_s = false;  // some other separation in S dominates both ways
  bool degenerate = false;    // x == x*
  bool cotrivial_in_s = false;
};

// A separation system: a subset of a universe closed under the involution.
// Construction closes the given element set under inverses and sorts it.
class SepSystem {
 public:
  SepSystem(std::shared_ptr<const Universe> universe, std::vector<Sep> elements);

  const Universe& universe() const { return *universe_; }
  const std::shared_ptr<const Universe>& universe_ptr() const { return universe_; }

  const std::vector<Sep>& elements() const { return elems_; }
  int count() const { return static_cast<int>(elems_.size()); }
  bool contains(Sep x) const;

  // One entry per underlying separation: (x, x*) with x the smaller id;
  // degenerate elements appear as (x, x).
  std::vector<std::pair<Sep, Sep>> separation_pairs() const;

  // True iff for every two elements of the system at least one of their
  // join/meet (computed in the universe) lies in the system again.
  bool is_submodular() const;

  Classification classify(Sep x) const;  // DomainError when x not in system

 private:
  std::shared_ptr<const Universe> universe_;
  std::vector<Sep> elems_;
  std::vector<char> member_;  // indexed by universe id
};

// True iff some orientation of x is ≤ some orientation of y.
bool is_nested(const Universe& u, Sep x, Sep y);

// A star: no degenerate elements, no {x, x*} pairs, and every two distinct
// elements point towards each other (x ≤ y* for all distinct x, y).
bool is_star(const Universe& u, std::span<const Sep> sigma);

enum class CornerKind { join, meet };

// Supremum/infimum of two oriented separations in the universe order.
Sep corner(const Universe& u, Sep x, Sep y, CornerKind which);

// One violated-axiom report from validate_universe.
struct Violation {
  std::string axiom;
  std::vector<Sep> elements;
  std::string detail;
};

// Checks all universe axioms wholesale: involution, reflexivity,
// antisymmetry, transitivity, order reversal under the involution,
// De Morgan for corners, symmetry and submodularity of the order function,
// and that join/meet really are least upper / greatest lower bounds.
std::vector<Violation> validate_universe(const Universe& u);

}  // namespace ttd
