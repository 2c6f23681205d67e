#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <memory>
#include <vector>

#include "helpers.hpp"
#include "ttd/blocks.hpp"
#include "ttd/common.hpp"
#include "ttd/families.hpp"
#include "ttd/graph.hpp"
#include "ttd/graphsep.hpp"

using namespace ttd;
using ttd::testing::make_graph;
using ttd::testing::small_graphs;
using ttd::testing::vs;

namespace {

// Subset brute force: inseparability is closed under taking subsets, so a
// set is maximal iff no one-vertex extension stays inseparable.
std::vector<VSet> brute_blocks(const Graph& g, int k) {
  std::vector<VSet> out;
  VSet full = g.vertices();
  for (VSet set = 0;; set = (set - full) & full) {
    if (set != 0 && popcount(set) >= k && is_inseparable(g, set, k)) {
      bool maximal = true;
      for (int v = 0; v < g.n() && maximal; ++v)
        if (!(set >> v & 1) && is_inseparable(g, set | VSet{1} << v, k))
          maximal = false;
      if (maximal) out.push_back(set);
    }
    if (set == full) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VSet> vertex_sets(const std::vector<Block>& blocks) {
  std::vector<VSet> out;
  for (const Block& b : blocks) out.push_back(b.vertices);
  return out;
}

}  // namespace

TEST_CASE("inseparability") {
  Graph p3 = path_graph(3);
  CHECK(is_inseparable(p3, vs({}), 2));
  CHECK(is_inseparable(p3, vs({1}), 5));
  CHECK(!is_inseparable(p3, vs({0, 1, 2}), 2));  // {1} separates the ends
  CHECK(is_inseparable(p3, vs({0, 1, 2}), 1));
  CHECK(is_inseparable(complete_graph(5), vs({0, 1, 2, 3, 4}), 4));
  CHECK(is_inseparable(cycle_graph(4), vs({0, 1, 2, 3}), 2));
  CHECK(!is_inseparable(cycle_graph(4), vs({0, 1, 2, 3}), 3));
  CHECK_THROWS_AS(is_inseparable(p3, vs({3}), 2), DomainError);
}

TEST_CASE("block lists on named graphs") {
  for (int n = 1; n <= 5; ++n) {
    auto blocks = find_k_blocks(complete_graph(n), n);
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0].vertices == complete_graph(n).vertices());
    CHECK(blocks[0].k == n);
  }

  CHECK(vertex_sets(find_k_blocks(path_graph(5), 2)) ==
        std::vector<VSet>{vs({0, 1}), vs({1, 2}), vs({2, 3}), vs({3, 4})});
  CHECK(vertex_sets(find_k_blocks(cycle_graph(4), 2)) ==
        std::vector<VSet>{vs({0, 1, 2, 3})});
  CHECK(find_k_blocks(cycle_graph(4), 3).empty());

  // 1-blocks are the connected components.
  Graph two = make_graph(5, {{0, 1}, {2, 3}, {3, 4}});
  CHECK(vertex_sets(find_k_blocks(two, 1)) ==
        std::vector<VSet>{vs({0, 1}), vs({2, 3, 4})});

  CHECK_THROWS_AS(find_k_blocks(path_graph(3), 0), DomainError);
}

TEST_CASE("blocks match the subset brute force") {
  for (const Graph& g : small_graphs(5, false))
    for (int k = 1; k <= 5; ++k)
      CHECK(vertex_sets(find_k_blocks(g, k)) == brute_blocks(g, k));

  // One larger spot check: the 3x3 grid.
  Graph h3 = grid_graph(3, 3);
  for (int k = 2; k <= 4; ++k)
    CHECK(vertex_sets(find_k_blocks(h3, k)) == brute_blocks(h3, k));
}

TEST_CASE("block orientations") {
  Graph k3 = complete_graph(3);
  auto u3 = GraphUniverse::build(k3);
  auto s3 = std::make_shared<const SepSystem>(enumerate_sk(u3, 3));
  Orientation o = orientation_from_block({k3.vertices(), 3}, s3);
  for (Sep x : o.chosen()) CHECK(u3->b_side(x) == k3.vertices());
  CHECK(2 * o.chosen().size() == static_cast<std::size_t>(s3->count()));

  Graph p3 = path_graph(3);
  auto up = GraphUniverse::build(p3);
  auto sp = std::make_shared<const SepSystem>(enumerate_sk(up, 2));
  Orientation ob = orientation_from_block({vs({1, 2}), 2}, sp);
  CHECK(ob.contains(up->at(vs({0, 1}), vs({1, 2}))));

  CHECK_THROWS_AS(orientation_from_block({vs({0, 2}), 2}, sp), DomainError);
  CHECK_THROWS_AS(orientation_from_block({vs({1}), 2}, sp), DomainError);
  CHECK_THROWS_AS(orientation_from_block({vs({0, 1}), 2}, nullptr),
                  DomainError);
}

TEST_CASE("block numbers") {
  for (int n = 1; n <= 5; ++n) CHECK(block_number(complete_graph(n)) == n);
  CHECK(block_number(cycle_graph(4)) == 2);
  CHECK(block_number(path_graph(5)) == 2);
  CHECK(block_number(Graph(1)) == 1);
  CHECK(block_number(make_graph(2, {})) == 1);
  CHECK_THROWS_AS(block_number(Graph(0)), DomainError);
}

TEST_CASE("block orientations are exactly the core tangles") {
  for (const Graph& g : small_graphs(5, true)) {
    auto u = GraphUniverse::build(g);
    for (int k = 1; k <= 4; ++k) {
      auto s = std::make_shared<const SepSystem>(enumerate_sk(u, k));
      auto fam = ForbiddenFamily::core(u, k);

      std::vector<std::vector<Sep>> from_blocks;
      for (const Block& b : find_k_blocks(g, k)) {
        Orientation o = orientation_from_block(b, s);
        // The block is recoverable as the intersection of the right sides.
        VSet rebuilt = g.vertices();
        for (Sep x : o.chosen()) rebuilt &= u->b_side(x);
        CHECK(rebuilt == b.vertices);
        // Block orientations behave like profiles: consistent, regular,
        // and closed under corners.
        auto flags = orientation_flags(o);
        CHECK(flags.consistent);
        CHECK(flags.regular);
        CHECK(ForbiddenFamily::corners(u).avoided_by(o));
        from_blocks.push_back(o.chosen());
      }
      std::sort(from_blocks.begin(), from_blocks.end());

      auto tangles = ttd::testing::chosen_sets(all_f_tangles(s, fam, false));
      CHECK(tangles == from_blocks);
      // Every core tangle is regular, so the regular search finds the same.
      CHECK(ttd::testing::chosen_sets(all_f_tangles(s, fam, true)) ==
            tangles);
    }
  }
}
