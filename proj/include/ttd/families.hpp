#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ttd/graphsep.hpp"
#include "ttd/sepsys.hpp"

namespace ttd {

// An orientation of a separation system: exactly one orientation per
// underlying separation; a degenerate element is chosen as itself.
class Orientation {
 public:
  Orientation(std::shared_ptr<const SepSystem> system, std::vector<Sep> chosen);

  const SepSystem& system() const { return *system_; }
  const std::shared_ptr<const SepSystem>& system_ptr() const { return system_; }
  const std::vector<Sep>& chosen() const { return chosen_; }
  bool contains(Sep x) const;

  bool operator==(const Orientation& other) const {
    return chosen_ == other.chosen_;
  }

 private:
  std::shared_ptr<const SepSystem> system_;
  std::vector<Sep> chosen_;  // sorted ids
  std::vector<char> has_;    // indexed by universe id
};

struct OrientationFlags {
  bool consistent = false;
  bool strongly_consistent = false;
  bool regular = false;
};

// Computes all three flags independently from their definitions and raises
// InternalError if strongly_consistent fails to equal consistent ∧ regular.
OrientationFlags orientation_flags(const Orientation& o);

// A family of forbidden subsets of oriented separations, defined by a
// membership predicate.  Minimal members relative to a system can be
// enumerated for uncrossing and for incremental avoidance in searches.
class ForbiddenFamily {
 public:
  enum class Kind {
    cover,           // ≤3 elements whose A-side subgraphs cover the graph
    cover_stars,     // the stars among cover members
    core,            // sets whose B-sides share fewer than k vertices
    corners,         // corner triples {x, y, x*∧y*}, repetitions collapsed
    interior_stars,  // stars whose interior has fewer than n vertices
    explicit_stars,  // a fixed star list
  };

  static ForbiddenFamily cover(std::shared_ptr<const GraphUniverse> u);
  static ForbiddenFamily cover_stars(std::shared_ptr<const GraphUniverse> u);
  static ForbiddenFamily core(std::shared_ptr<const GraphUniverse> u, int k);
  static ForbiddenFamily corners(std::shared_ptr<const Universe> u);
  static ForbiddenFamily interior_stars(std::shared_ptr<const GraphUniverse> u,
                                        int n);
  static ForbiddenFamily explicit_stars(std::shared_ptr<const Universe> u,
                                        std::vector<std::vector<Sep>> stars);

  Kind kind() const { return kind_; }
  int parameter() const { return param_; }
  const Universe& universe() const { return *universe_; }
  const std::shared_ptr<const Universe>& universe_ptr() const {
    return universe_;
  }
  // Non-null for the graph-backed kinds.
  const GraphUniverse* graph_universe() const { return graph_universe_.get(); }
  const std::vector<std::vector<Sep>>& star_list() const { return stars_; }

  // Membership of one finite subset (order and repetition irrelevant).
  bool member(std::span<const Sep> subset) const;

  // True iff no member of the family is a subset of the chosen set.
  bool avoided_by(const Orientation& o) const;

  // All inclusion-minimal members whose elements lie in the given system;
  // these generate the same avoidance relation as the full family there.
  std::vector<std::vector<Sep>> minimal_members_in(const SepSystem& s) const;

 private:
  ForbiddenFamily() = default;
  Kind kind_ = Kind::explicit_stars;
  int param_ = 0;
  std::shared_ptr<const Universe> universe_;
  std::shared_ptr<const GraphUniverse> graph_universe_;
  std::vector<std::vector<Sep>> stars_;
  // Per-id covering masks for the cover kinds.
  std::vector<VSet> vcover_;
  std::vector<std::uint64_t> ecover_;
  VSet all_vertices_ = 0;
  std::uint64_t all_edges_ = 0;
  void build_cover_masks();
};

inline bool avoids(const Orientation& o, const ForbiddenFamily& f) {
  return f.avoided_by(o);
}

// Exhaustive backtracking search for consistent F-avoiding orientations
// (containing every small element when require_regular is set).
std::optional<Orientation> find_f_tangle(std::shared_ptr<const SepSystem> s,
                                         const ForbiddenFamily& f,
                                         bool require_regular);
std::vector<Orientation> all_f_tangles(std::shared_ptr<const SepSystem> s,
                                       const ForbiddenFamily& f,
                                       bool require_regular);

enum class OrientationClass { consistent, consistent_regular, strongly_consistent };

// All orientations of the given class, with no forbidden family.
std::vector<Orientation> all_orientations(std::shared_ptr<const SepSystem> s,
                                          OrientationClass cls);

// The regular 2-profile construction: orients every separation of order < 2
// towards a fixed non-cutvertex x, excluding the co-small orientation whose
// B-side is {x} (the degenerate separation, when present, stays chosen).
// Requires a nonempty connected graph.
Orientation two_profile(const Graph& g);

}  // namespace ttd
