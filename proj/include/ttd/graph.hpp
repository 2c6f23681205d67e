#pragma once

#include <string>
#include <vector>

#include "ttd/common.hpp"

namespace ttd {

// Finite simple undirected graph on vertices 0..n-1, n <= 63.
// Adjacency is stored as one bitmask per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return n_; }
  int m() const;                       // number of edges
  VSet vertices() const { return full_set(n_); }
  VSet adj(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);

  // Neighbourhood of a vertex set (excluding the set itself).
  VSet neighbors(VSet s) const;

  // Connected components of the subgraph induced by `within`.
  std::vector<VSet> components(VSet within) const;
  std::vector<VSet> components() const { return components(vertices()); }
  bool connected() const;

  // Size of a smallest vertex set separating u from v, for non-adjacent
  // distinct u, v (computed by unit-capacity max-flow on the split graph).
  int min_vertex_cut(int u, int v) const;

  std::vector<std::pair<int, int>> edges() const;

  // Sorted edge list plus n gives a canonical equality key.
  bool operator==(const Graph& other) const;

 private:
  int n_ = 0;
  std::vector<VSet> adj_;
  void check_vertex(int v) const;
};

// Parsing.  JSON form: {"n": <int>, "edges": [[u,v], ...]}.
// Edge-list form: first line "n", then one "u v" pair per line;
// blank lines and lines starting with '#' are skipped.
Graph graph_from_json(const std::string& text);
Graph graph_from_edge_list(const std::string& text);
std::string graph_to_json(const Graph& g);

// Generators.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph grid_graph(int rows, int cols);

}  // namespace ttd
