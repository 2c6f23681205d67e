#include "ttd/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

#include <json.hpp>

namespace ttd {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > 63)
    throw DomainError("graph order must be between 0 and 63, got " +
                      std::to_string(n));
  adj_.assign(static_cast<size_t>(n), 0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw DomainError("vertex " + std::to_string(v) +
                      " out of range for graph on " + std::to_string(n_) +
                      " vertices");
}

int Graph::m() const {
  int total = 0;
  for (VSet a : adj_) total += popcount(a);
  return total / 2;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("self-loops are not allowed");
  adj_[u] |= 1ull << v;
  adj_[v] |= 1ull << u;
}

VSet Graph::neighbors(VSet s) const {
  VSet out = 0;
  VSet rest = s;
  while (rest) {
    int v = lowest_bit(rest);
    rest &= rest - 1;
    out |= adj_[v];
  }
  return out & ~s;
}

std::vector<VSet> Graph::components(VSet within) const {
  std::vector<VSet> comps;
  VSet remaining = within & vertices();
  while (remaining) {
    VSet comp = 1ull << lowest_bit(remaining);
    for (;;) {
      VSet grown = comp;
      VSet frontier = comp;
      while (frontier) {
        int v = lowest_bit(frontier);
        frontier &= frontier - 1;
        grown |= adj_[v] & within;
      }
      if (grown == comp) break;
      comp = grown;
    }
    comps.push_back(comp);
    remaining &= ~comp;
  }
  return comps;
}

bool Graph::connected() const {
  if (n_ == 0) return true;
  return components().size() == 1;
}

int Graph::min_vertex_cut(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("min_vertex_cut requires distinct vertices");
  if (has_edge(u, v))
    throw DomainError("min_vertex_cut requires non-adjacent vertices");

  // Split each vertex w into w_in (2w) and w_out (2w+1) with a unit arc
  // between them; each edge {a,b} gives arcs a_out->b_in and b_out->a_in
  // of effectively unbounded capacity.  Max-flow from u_out to v_in equals
  // the minimum vertex cut by Menger's theorem.
  const int kInf = 1 << 20;
  struct Arc {
    int to, cap, rev;
  };
  int nodes = 2 * n_;
  std::vector<std::vector<Arc>> arcs(static_cast<size_t>(nodes));
  auto add_arc = [&](int a, int b, int cap) {
    arcs[a].push_back({b, cap, static_cast<int>(arcs[b].size())});
    arcs[b].push_back({a, 0, static_cast<int>(arcs[a].size()) - 1});
  };
  for (int w = 0; w < n_; ++w) add_arc(2 * w, 2 * w + 1, 1);
  for (int a = 0; a < n_; ++a) {
    VSet nb = adj_[a];
    while (nb) {
      int b = lowest_bit(nb);
      nb &= nb - 1;
      add_arc(2 * a + 1, 2 * b, kInf);
    }
  }
  int source = 2 * u + 1, sink = 2 * v;

  // Dinic's algorithm.
  std::vector<int> level(static_cast<size_t>(nodes));
  std::vector<size_t> iter(static_cast<size_t>(nodes));
  auto bfs = [&]() {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> q;
    level[source] = 0;
    q.push(source);
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      for (const Arc& e : arcs[a])
        if (e.cap > 0 && level[e.to] < 0) {
          level[e.to] = level[a] + 1;
          q.push(e.to);
        }
    }
    return level[sink] >= 0;
  };
  std::function<int(int, int)> dfs = [&](int a, int f) -> int {
    if (a == sink) return f;
    for (size_t& i = iter[a]; i < arcs[a].size(); ++i) {
      Arc& e = arcs[a][i];
      if (e.cap > 0 && level[a] < level[e.to]) {
        int d = dfs(e.to, std::min(f, e.cap));
        if (d > 0) {
          e.cap -= d;
          arcs[e.to][e.rev].cap += d;
          return d;
        }
      }
    }
    return 0;
  };
  int flow = 0;
  while (bfs()) {
    std::fill(iter.begin(), iter.end(), 0);
    while (int f = dfs(source, kInf)) flow += f;
  }
  return flow;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    VSet nb = adj_[u] & ~full_set(u + 1);
    while (nb) {
      int v = lowest_bit(nb);
      nb &= nb - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && adj_ == other.adj_;
}

Graph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("expected a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("missing or non-integer field", 0, "n");
  long long n = j["n"].get<long long>();
  if (n < 0 || n > 63)
    throw ParseError("graph order must be between 0 and 63", 0, "n");
  Graph g(static_cast<int>(n));
  if (j.contains("edges")) {
    if (!j["edges"].is_array())
      throw ParseError("expected an array", 0, "edges");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        throw ParseError("each edge must be a pair of integers", 0, "edges");
      long long a = e[0].get<long long>(), b = e[1].get<long long>();
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw ParseError("edge endpoint out of range", 0, "edges");
      if (a == b) throw ParseError("self-loops are not allowed", 0, "edges");
      g.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return g;
}

Graph graph_from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_n = false;
  Graph g;
  while (std::getline(in, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    if (!have_n) {
      long long n;
      if (!(ls >> n)) throw ParseError("expected vertex count", lineno);
      std::string extra;
      if (ls >> extra)
        throw ParseError("unexpected token after vertex count", lineno);
      if (n < 0 || n > 63)
        throw ParseError("graph order must be between 0 and 63", lineno);
      g = Graph(static_cast<int>(n));
      have_n = true;
      continue;
    }
    long long a, b;
    if (!(ls >> a >> b)) throw ParseError("expected edge 'u v'", lineno);
    std::string extra;
    if (ls >> extra) throw ParseError("unexpected token after edge", lineno);
    if (a < 0 || a >= g.n() || b < 0 || b >= g.n())
      throw ParseError("edge endpoint out of range", lineno);
    if (a == b) throw ParseError("self-loops are not allowed", lineno);
    g.add_edge(static_cast<int>(a), static_cast<int>(b));
  }
  if (!have_n) throw ParseError("empty input: expected vertex count", lineno);
  return g;
}

std::string graph_to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j.dump();
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle requires at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) throw DomainError("grid requires positive sides");
  Graph g(rows * cols);
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
    }
  return g;
}

}  // namespace ttd
