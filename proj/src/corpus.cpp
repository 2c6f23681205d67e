#include "ttd/corpus.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "ttd/common.hpp"

namespace ttd {

namespace {

// Depth-first fill of positions.  At each position only the candidates whose
// adjacency bits toward the placed prefix are maximal can extend a
// lexicographically greatest string, and among those, vertices that differ
// by a transposition-automorphism lead to identical subtrees, so one
// representative per twin class suffices.
void extend(const Graph& g, std::vector<int>& perm, VSet used,
            std::uint64_t prefix, std::uint64_t& best, bool& have_best) {
  int n = g.n();
  int p = static_cast<int>(perm.size());
  if (p == n) {
    if (!have_best || prefix > best) {
      best = prefix;
      have_best = true;
    }
    return;
  }
  std::uint64_t max_mask = 0;
  std::vector<std::pair<std::uint64_t, int>> candidates;
  for (int v = 0; v < n; ++v) {
    if ((used >> v) & 1) continue;
    std::uint64_t mask = 0;
    for (int q = 0; q < p; ++q)
      mask = (mask << 1) | (g.has_edge(v, perm[q]) ? 1 : 0);
    candidates.emplace_back(mask, v);
    max_mask = std::max(max_mask, mask);
  }
  std::vector<int> picked;
  for (auto [mask, v] : candidates) {
    if (mask != max_mask) continue;
    bool twin = false;
    for (int w : picked) {
      VSet pair = (VSet{1} << v) | (VSet{1} << w);
      if ((g.adj(v) & ~pair) == (g.adj(w) & ~pair)) {
        twin = true;
        break;
      }
    }
    if (twin) continue;
    picked.push_back(v);
    perm.push_back(v);
    extend(g, perm, used | (VSet{1} << v), (prefix << p) | mask, best,
           have_best);
    perm.pop_back();
  }
}

}  // namespace

std::uint64_t canonical_key(const Graph& g) {
  int n = g.n();
  if (n < 1) throw DomainError("canonical key needs vertices");
  if (n > 11) throw DomainError("canonical key supports at most 11 vertices");
  std::uint64_t best = 0;
  bool have_best = false;
  std::vector<int> perm;
  perm.reserve(n);
  extend(g, perm, 0, 0, best, have_best);
  return best;
}

Graph graph_from_key(int n, std::uint64_t key) {
  if (n < 1) throw DomainError("graph key needs vertices");
  if (n > 11) throw DomainError("graph key supports at most 11 vertices");
  Graph g(n);
  int bit = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      --bit;
      if ((key >> bit) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::vector<Graph> all_graphs(int n, bool connected_only) {
  if (n < 1) throw DomainError("graph enumeration needs vertices");
  if (n > 11)
    throw DomainError("graph enumeration supports at most 11 vertices");
  std::set<std::uint64_t> level = {0};  // the one-vertex graph
  for (int m = 2; m <= n; ++m) {
    std::set<std::uint64_t> next;
    for (std::uint64_t key : level) {
      Graph parent = graph_from_key(m - 1, key);
      for (VSet mask = 0; mask < (VSet{1} << (m - 1)); ++mask) {
        Graph h(m);
        for (auto [u, v] : parent.edges()) h.add_edge(u, v);
        VSet rest = mask;
        while (rest != 0) {
          int v = lowest_bit(rest);
          rest &= rest - 1;
          h.add_edge(v, m - 1);
        }
        next.insert(canonical_key(h));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (std::uint64_t key : level) {
    Graph g = graph_from_key(n, key);
    if (!connected_only || g.connected()) out.push_back(g);
  }
  return out;
}

}  // namespace ttd
