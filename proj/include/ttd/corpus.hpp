#pragma once

#include <cstdint>
#include <vector>

#include "ttd/graph.hpp"

namespace ttd {

// Relabeling-invariant canonical key: the lexicographically greatest packing
// of the upper-triangular adjacency bits over all vertex orders, found by
// branch and bound (positions are filled one at a time, keeping only the
// locally maximal candidates and collapsing interchangeable twins).  Two
// graphs on the same number of vertices are isomorphic iff their keys are
// equal.  Needs n(n-1)/2 <= 64 bits, i.e. at most 11 vertices.
std::uint64_t canonical_key(const Graph& g);

// Rebuild the graph a key encodes (the canonical representative when the key
// came from canonical_key).
Graph graph_from_key(int n, std::uint64_t key);

// One representative per isomorphism class of graphs on exactly n vertices,
// grown level by level from the one-vertex graph by attaching a new vertex
// with every possible neighbourhood and deduplicating via canonical keys.
// Output is ordered by ascending key, so it is deterministic.
std::vector<Graph> all_graphs(int n, bool connected_only);

}  // namespace ttd
