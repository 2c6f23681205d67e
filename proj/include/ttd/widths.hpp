#pragma once

#include <map>

#include "ttd/graph.hpp"

namespace ttd {

// Presence of each order-k structure and of the tree that replaces it.  For
// every family exactly one of the pair holds; compute_widths checks this.
struct KWitness {
  bool block = false;
  bool block_tree = false;
  bool profile = false;
  bool profile_tree = false;
  bool tangle = false;
  bool tangle_tree = false;
};

struct WidthReport {
  int tw = 0;   // tree-width
  int brw = 0;  // adjusted branch-width: largest k with a k-tangle
  int pw = 0;   // profile-width: largest k with a regular k-profile
  int bw = 0;   // block-width: largest k with a k-block
  std::map<int, KWitness> per_k;
};

// Exact tree-width by the elimination-ordering dynamic program over vertex
// subsets.  Exponential in the vertex count; refuses more than 25 vertices.
int tree_width(const Graph& g);

// Largest k such that some consistent orientation of the order-<k separations
// avoids the cover family (a k-tangle).  Limited to 10 vertices.
int adjusted_branch_width(const Graph& g);

// Largest k with a regular k-profile, i.e. a regular consistent orientation
// avoiding the corner triples.  For k >= 3 every k-profile is regular, so the
// regularity requirement only bites at k <= 2, where it rules out orientations
// that point away from a single vertex.  Limited to 10 vertices.
int profile_width(const Graph& g);

// Largest k with a k-block, computed from the orientation side and checked
// against the direct block search; disagreement raises InternalError.
// Limited to 10 vertices.
int block_width(const Graph& g);

// All four parameters plus, for every k up to one past the largest structure,
// which structures exist and which dual trees replace them.  Each (k, family)
// cell runs the full two-sided duality check, so beyond the scalar values
// this also re-verifies that structure and tree presence complement each
// other and that structure existence is monotone decreasing in k.
WidthReport compute_widths(const Graph& g);

// Recomputes the four widths and checks the exact integer forms of
//   pw <= tw+1,   2(tw+1) <= 3*pw,
//   brw <= tw+1,  2(tw+1) <= 3*brw,
//   brw <= pw,    2*pw <= 3*brw,
// together with bw <= pw; any violation raises InternalError.  The returned
// report carries the values and leaves per_k empty.
WidthReport verify_inequalities(const Graph& g);

}  // namespace ttd
