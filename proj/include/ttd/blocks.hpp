#pragma once

#include <memory>
#include <vector>

#include "ttd/families.hpp"
#include "ttd/graph.hpp"
#include "ttd/graphsep.hpp"

namespace ttd {

// A maximal set of vertices that no separation of order below k can split,
// together with that k; always at least k vertices.
struct Block {
  VSet vertices = 0;
  int k = 0;

  friend bool operator==(const Block&, const Block&) = default;
};

// True iff every two vertices of the set are adjacent or joined by k or more
// internally disjoint paths (equivalently: no vertex set of size below k
// separates them).
bool is_inseparable(const Graph& g, VSet set, int k);

// All blocks for the given k, sorted by vertex set.  Inseparability is a
// pairwise property, so these are the maximal cliques of size >= k in the
// auxiliary graph joining u,v when they are adjacent or (>=k)-connected;
// cliques are enumerated by pivoted branch and bound.
std::vector<Block> find_k_blocks(const Graph& g, int k);

// The orientation O(b) of a system: every element whose right side contains
// the block.  For systems of all separations of order below b.k this is a
// total orientation and a regular tangle of the low-order-core family.
Orientation orientation_from_block(const Block& b,
                                   std::shared_ptr<const SepSystem> s);

// The largest k for which the graph has a block (>= 1 on nonempty graphs).
int block_number(const Graph& g);

}  // namespace ttd
