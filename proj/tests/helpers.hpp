#pragma once

#include <algorithm>
#include <memory>
#include <set>
#include <utility>
#include <vector>

#include "ttd/families.hpp"
#include "ttd/graph.hpp"
#include "ttd/graphsep.hpp"
#include "ttd/sepsys.hpp"

namespace ttd::testing {

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline VSet vs(std::initializer_list<int> vertices) {
  VSet s = 0;
  for (int v : vertices) s |= VSet{1} << v;
  return s;
}

// Brute-force oracle: all oriented separations of order < k, found by
// scanning every pair of vertex subsets.
inline std::set<std::pair<VSet, VSet>> brute_sk(const Graph& g, int k) {
  std::set<std::pair<VSet, VSet>> out;
  VSet full = g.vertices();
  for (VSet a = 0;; a = (a - full) & full) {
    for (VSet b = 0;; b = (b - full) & full) {
      if (is_separation(g, a, b) && popcount(a & b) < k) out.insert({a, b});
      if (b == full) break;
    }
    if (a == full) break;
  }
  return out;
}

// Brute-force enumeration of every total orientation of a system.
inline std::vector<Orientation> brute_orientations(
    const std::shared_ptr<const SepSystem>& s) {
  std::vector<std::pair<Sep, Sep>> pairs;
  std::vector<Sep> fixed;
  for (auto [x, xi] : s->separation_pairs()) {
    if (x == xi) fixed.push_back(x);
    else pairs.push_back({x, xi});
  }
  std::vector<Orientation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size());
       ++mask) {
    std::vector<Sep> chosen = fixed;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      chosen.push_back((mask >> i) & 1 ? pairs[i].second : pairs[i].first);
    out.emplace_back(s, std::move(chosen));
  }
  return out;
}

inline std::vector<std::vector<Sep>> chosen_sets(
    const std::vector<Orientation>& os) {
  std::vector<std::vector<Sep>> out;
  for (const auto& o : os) out.push_back(o.chosen());
  std::sort(out.begin(), out.end());
  return out;
}

// Every connected graph on up to five vertices would be too slow to list by
// hand; tests that need a corpus use this augmentation generator instead.
// It returns one representative per isomorphism class (connected only when
// connected_only is set), ordered deterministically.
std::vector<Graph> small_graphs(int max_n, bool connected_only);

}  // namespace ttd::testing
