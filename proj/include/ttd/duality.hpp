#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ttd/families.hpp"
#include "ttd/graph.hpp"
#include "ttd/graphsep.hpp"
#include "ttd/sepsys.hpp"

namespace ttd {

// A finite family of stars over one universe, optionally "standard" (holding
// the singleton {x} for every x whose inverse the system makes trivial, which
// the closure stage guarantees by adding every co-small singleton).  Shift
// provenance is retained so tests can replay closure steps.
class StarFamily {
 public:
  struct Shift {
    std::vector<Sep> source;  // sorted star the shift was applied to
    std::vector<Sep> image;   // sorted resulting star
    Sep r = -1;               // pivot
    Sep s = -1;               // emulating separation
  };

  StarFamily(std::shared_ptr<const Universe> universe,
             std::vector<std::vector<Sep>> stars, bool standard = false);

  const std::shared_ptr<const Universe>& universe_ptr() const {
    return universe_;
  }
  const std::vector<std::vector<Sep>>& stars() const { return stars_; }
  bool standard() const { return standard_; }
  bool contains(std::span<const Sep> sigma) const;

  const std::vector<Shift>& shifts() const { return shifts_; }
  int dropped_images() const { return dropped_images_; }

  // View as a forbidden family for orientation searches.
  ForbiddenFamily as_forbidden() const;

 private:
  std::shared_ptr<const Universe> universe_;
  std::vector<std::vector<Sep>> stars_;  // each sorted; list sorted
  bool standard_ = false;
  std::vector<Shift> shifts_;
  int dropped_images_ = 0;

  friend StarFamily close_and_standardize(const StarFamily&,
                                          const SepSystem&, bool);
};

// Replacements for a violating pair: of {x1 ∧ inverse(x2), x2} and
// {x1, x2 ∧ inverse(x1)}, those whose corner lies in the system and which
// form genuine stars.  Submodular systems always admit at least one corner;
// both collapse to one option when x1 == x2.
std::vector<std::vector<Sep>> uncross_pair(Sep x1, Sep x2, const SepSystem& s);

enum class UncrossMode {
  canonical_all,  // every star reachable by uncrossing in any order/choice
  lean,           // one star per member: first violating pair, first option
};

// Uncross the family's inclusion-minimal members within the system into a
// family of stars.  Members that are already stars are kept.  Degenerate
// elements are dropped from members, and members holding two separations
// oriented towards each other (which no consistent orientation can contain)
// are discarded before uncrossing; both steps preserve which consistent
// orientations avoid the family.
StarFamily uncross_family(const ForbiddenFamily& f, const SepSystem& s,
                          UncrossMode mode);

struct ShiftResult {
  Sep image = -1;
  bool in_system = false;
};

// The image of x under the shift towards s with pivot r:  x ∨ s when x lies
// above r, and the inverse image (x ∧ inverse(s)) when only inverse(x) does.
// The image can leave the system, hence the flag.
ShiftResult shift_sep(Sep x, Sep r, Sep s, const SepSystem& sys);

// Plain emulation: every shift image with pivot r stays inside the system.
// With a family: additionally every family star inside the pivot's up-domain
// that contains an element above r must shift back into the family.
bool emulates(Sep s, Sep r, const SepSystem& sys,
              const StarFamily* for_family = nullptr);

// Every eligible nested pair r ≤ r' of nontrivial nondegenerate separations
// has a witness s between them with s emulating r and inverse(s) emulating
// inverse(r') (for the family when one is given).
bool is_separable(const SepSystem& sys,
                  const StarFamily* for_family = nullptr);

// Least fixpoint of the shift step starting from the given stars, then all
// singletons {x} with inverse(x) small added; the result is standard and
// closed under shifting.  When exclude_forced is set, pivots r whose inverse
// forms a singleton member of the *initial* family are skipped during
// closure (an experimental strictness toggle; the default follows the plain
// fixpoint).
StarFamily close_and_standardize(const StarFamily& fstar, const SepSystem& s,
                                 bool exclude_forced = false);

// A tree whose directed edges carry oriented separations, inverse pairs on
// the two directions of each edge.
struct STree {
  struct Edge {
    int a = -1;
    int b = -1;
    Sep ab = -1;  // label of the directed edge a -> b
    Sep ba = -1;  // label of the directed edge b -> a
  };
  int node_count = 0;
  std::vector<Edge> edges;
  std::shared_ptr<const SepSystem> system;
};

// Decide whether an S-tree over the star family exists, and build one if so:
// a tree each of whose nodes' incoming labels form a member of the family.
// Decision is by least fixpoint over "completable fragments"; extraction
// replays the fixpoint derivation greedily (smallest star first).
std::optional<STree> stree_exists(std::shared_ptr<const SepSystem> s,
                                  const StarFamily& fbar);

// Check a tree shape (connected, acyclic, labels mutually inverse and inside
// the system — violations are domain errors) and return whether every node's
// incoming star belongs to the family.
bool verify_stree(const STree& t, const SepSystem& s, const StarFamily& f);
bool verify_stree(const STree& t, const SepSystem& s,
                  const ForbiddenFamily& f);

struct TreeDecomposition {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<VSet> bags;

  // max bag size - 1; -1 for an empty decomposition.
  int width() const;
};

// Bags are the intersections of the right sides of each node's incoming
// labels (the whole vertex set at an isolated node).  The decomposition
// axioms are verified before returning; a failure is an internal error
// because the construction is supposed to guarantee them.
TreeDecomposition stree_to_treedec(const STree& t, const Graph& g);

// The separation each decomposition edge induces, oriented with the first
// node's side left: (union of bags on the a-side, union of bags on the
// b-side) for edges[i] = (a, b).  Used to round-trip S-trees.
std::vector<std::pair<VSet, VSet>> induced_separations(
    const TreeDecomposition& dec);

enum class DualityFamily { block, profile, tangle };

struct DualityReport {
  int k = 0;
  DualityFamily family = DualityFamily::block;
  UncrossMode mode = UncrossMode::lean;
  bool structure_exists = false;  // regular tangle-side witness found
  std::optional<Orientation> orientation;
  std::optional<STree> tree;
  std::optional<TreeDecomposition> decomposition;
  int closure_size = 0;
  int dropped_shift_images = 0;
};

// Run both sides for the chosen family (low-order cores for blocks, corner
// closures for profiles, covers for tangles) over the order-k system:
// search for a regular tangle of the family, and independently build the
// uncrossed-closed-standardized star family and search for an S-tree over
// it.  Exactly one side must succeed; both-or-neither is an internal error.
// Witnesses are re-verified before the report is returned.
DualityReport verify_duality(const Graph& g, int k, DualityFamily family,
                             UncrossMode mode);

}  // namespace ttd
