#include "helpers.hpp"

#include <numeric>

#include "ttd/common.hpp"

namespace ttd::testing {

namespace {

std::vector<std::pair<int, int>> vertex_pairs(int n) {
  std::vector<std::pair<int, int>> ps;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) ps.push_back({i, j});
  return ps;
}

// Canonical form by explicit minimization over all vertex permutations;
// deliberately naive so it can serve as an oracle for the faster generator.
std::uint64_t canon_mask(int n, std::uint64_t mask,
                         const std::vector<std::pair<int, int>>& ps) {
  int idx[6][6];
  for (std::size_t e = 0; e < ps.size(); ++e)
    idx[ps[e].first][ps[e].second] = idx[ps[e].second][ps[e].first] =
        static_cast<int>(e);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t m = 0;
    for (std::size_t e = 0; e < ps.size(); ++e)
      if ((mask >> e) & 1)
        m |= std::uint64_t{1} << idx[perm[ps[e].first]][perm[ps[e].second]];
    best = std::min(best, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<Graph> small_graphs(int max_n, bool connected_only) {
  if (max_n > 6)
    throw DomainError("the naive isomorphism filter is for n <= 6 only");
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto ps = vertex_pairs(n);
    std::set<std::uint64_t> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ps.size());
         ++mask) {
      if (!seen.insert(canon_mask(n, mask, ps)).second) continue;
      Graph g(n);
      for (std::size_t e = 0; e < ps.size(); ++e)
        if ((mask >> e) & 1) g.add_edge(ps[e].first, ps[e].second);
      if (connected_only && !g.connected()) continue;
      out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace ttd::testing
