#include "ttd/blocks.hpp"

#include <algorithm>

#include "ttd/common.hpp"

namespace ttd {

namespace {

// Adjacency masks of the auxiliary inseparability graph: u ~ v iff they are
// adjacent in g or no fewer-than-k vertices separate them.
std::vector<VSet> inseparability_graph(const Graph& g, int k) {
  std::vector<VSet> adj(static_cast<std::size_t>(g.n()), 0);
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      bool joined =
          g.has_edge(u, v) || g.min_vertex_cut(u, v) >= static_cast<Order>(k);
      if (joined) {
        adj[static_cast<std::size_t>(u)] |= VSet{1} << v;
        adj[static_cast<std::size_t>(v)] |= VSet{1} << u;
      }
    }
  return adj;
}

void maximal_cliques(VSet r, VSet p, VSet x, const std::vector<VSet>& adj,
                     std::vector<VSet>& out) {
  if (p == 0 && x == 0) {
    if (r != 0) out.push_back(r);
    return;
  }
  // Pivot on the candidate dominating the most of P.
  int pivot = -1, best = -1;
  for (VSet px = p | x; px;) {
    int u = lowest_bit(px);
    px &= px - 1;
    int deg = popcount(p & adj[static_cast<std::size_t>(u)]);
    if (deg > best) best = deg, pivot = u;
  }
  VSet cands = p & ~adj[static_cast<std::size_t>(pivot)];
  while (cands) {
    int v = lowest_bit(cands);
    cands &= cands - 1;
    VSet vb = VSet{1} << v;
    maximal_cliques(r | vb, p & adj[static_cast<std::size_t>(v)],
                    x & adj[static_cast<std::size_t>(v)], adj, out);
    p &= ~vb;
    x |= vb;
  }
}

bool maximal_inseparable(const Graph& g, VSet set, int k) {
  if (!is_inseparable(g, set, k)) return false;
  for (int v = 0; v < g.n(); ++v)
    if (!(set >> v & 1) && is_inseparable(g, set | VSet{1} << v, k))
      return false;
  return true;
}

}  // namespace

bool is_inseparable(const Graph& g, VSet set, int k) {
  if (set & ~g.vertices()) throw DomainError("vertex set outside the graph");
  if (k < 0) throw DomainError("inseparability needs k >= 0");
  for (VSet us = set; us;) {
    int u = lowest_bit(us);
    us &= us - 1;
    for (VSet rest = us; rest;) {
      int v = lowest_bit(rest);
      rest &= rest - 1;
      if (g.has_edge(u, v)) continue;
      if (g.min_vertex_cut(u, v) < static_cast<Order>(k)) return false;
    }
  }
  return true;
}

std::vector<Block> find_k_blocks(const Graph& g, int k) {
  if (k < 1) throw DomainError("blocks need k >= 1");
  if (g.n() == 0) return {};
  std::vector<VSet> cliques;
  maximal_cliques(0, g.vertices(), 0, inseparability_graph(g, k), cliques);
  std::vector<Block> blocks;
  for (VSet c : cliques)
    if (popcount(c) >= k) blocks.push_back({c, k});
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) {
              return a.vertices < b.vertices;
            });
  return blocks;
}

Orientation orientation_from_block(const Block& b,
                                   std::shared_ptr<const SepSystem> s) {
  if (!s) throw DomainError("orientation requires a system");
  const auto* u = dynamic_cast<const GraphUniverse*>(&s->universe());
  if (u == nullptr)
    throw DomainError("block orientations need a graph universe");
  if (popcount(b.vertices) < b.k || !maximal_inseparable(u->graph(),
                                                         b.vertices, b.k))
    throw DomainError("not a block of the underlying graph");
  std::vector<Sep> chosen;
  for (Sep x : s->elements())
    if (subset(b.vertices, u->b_side(x))) chosen.push_back(x);
  return Orientation(std::move(s), std::move(chosen));
}

int block_number(const Graph& g) {
  if (g.n() == 0) throw DomainError("block number needs a nonempty graph");
  for (int k = g.n(); k >= 1; --k)
    if (!find_k_blocks(g, k).empty()) return k;
  throw InternalError("every nonempty graph has a 1-block");
}

}  // namespace ttd
