#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <set>

#include "helpers.hpp"
#include "ttd/common.hpp"
#include "ttd/graph.hpp"
#include "ttd/graphsep.hpp"

using namespace ttd;
using ttd::testing::brute_sk;
using ttd::testing::make_graph;
using ttd::testing::small_graphs;
using ttd::testing::vs;

TEST_CASE("separation predicate") {
  Graph p4 = path_graph(4);
  CHECK(is_separation(p4, vs({0, 1}), vs({1, 2, 3})));
  CHECK(is_separation(p4, vs({0, 1, 2, 3}), vs({0, 1, 2, 3})));
  CHECK(!is_separation(p4, vs({0}), vs({2, 3})));     // union misses V
  CHECK(!is_separation(p4, vs({0, 1}), vs({2, 3})));  // edge 1-2 crosses
  CHECK(is_separation(p4, vs({}), vs({0, 1, 2, 3})));

  Graph two = make_graph(4, {{0, 1}, {2, 3}});
  CHECK(is_separation(two, vs({0, 1}), vs({2, 3})));
}

TEST_CASE("universe lookup and sides") {
  auto u = GraphUniverse::build(path_graph(3));
  Sep x = u->at(vs({0, 1}), vs({1, 2}));
  CHECK(u->a_side(x) == vs({0, 1}));
  CHECK(u->b_side(x) == vs({1, 2}));
  CHECK(u->a_side(u->inverse(x)) == vs({1, 2}));
  CHECK(u->order_of(x) == 1);
  CHECK(u->find(vs({0}), vs({2})) == std::nullopt);
  CHECK_THROWS_AS(u->at(vs({0}), vs({2})), DomainError);
  CHECK(u->degenerate() == u->at(vs({0, 1, 2}), vs({0, 1, 2})));
  CHECK(u->order_of(u->degenerate()) == 3);
  CHECK_THROWS_AS(GraphUniverse::build(Graph(11)), DomainError);
}

TEST_CASE("poset and lattice operations") {
  auto u = GraphUniverse::build(path_graph(3));
  Sep x = u->at(vs({0, 1}), vs({1, 2}));
  Sep y = u->at(vs({1, 2}), vs({0, 1}));
  CHECK(u->join(x, y) == u->at(vs({0, 1, 2}), vs({1})));
  CHECK(u->meet(x, y) == u->at(vs({1}), vs({0, 1, 2})));
  CHECK(u->order_of(u->join(x, y)) == 1);
  CHECK(u->leq(u->meet(x, y), x));
  CHECK(u->leq(x, u->join(x, y)));
  CHECK(!u->leq(x, y));
  CHECK(u->inverse(u->join(x, y)) == u->meet(u->inverse(x), u->inverse(y)));
}

TEST_CASE("s_k counts on small graphs") {
  Graph k3 = complete_graph(3);
  CHECK(enumerate_sk(k3, 2).count() == 8);
  CHECK(enumerate_sk(k3, 1).count() == 2);
  CHECK(enumerate_sk(k3, 3).count() == 14);

  // K1: S_1 holds only the two trivial orientations of ({}, {0}); the
  // degenerate (V, V) has order 1 so it first appears in S_2.
  Graph k1(1);
  CHECK(enumerate_sk(k1, 1).count() == 2);
  CHECK(enumerate_sk(k1, 2).count() == 3);
}

TEST_CASE("s_k matches the subset-pair oracle") {
  for (bool connected : {true, false}) {
    for (const Graph& g : small_graphs(connected ? 5 : 4, connected)) {
      auto u = GraphUniverse::build(g);
      for (int k = 1; k <= 4; ++k) {
        SepSystem s = enumerate_sk(u, k);
        std::set<std::pair<VSet, VSet>> got;
        for (Sep x : s.elements())
          got.emplace(u->a_side(x), u->b_side(x));
        CHECK(got == brute_sk(g, k));
      }
    }
  }
}

TEST_CASE("small separations are exactly those with full right side") {
  for (const Graph& g : small_graphs(4, false)) {
    auto u = GraphUniverse::build(g);
    for (Sep x = 0; x < u->size(); ++x)
      CHECK(u->is_small(x) == (u->b_side(x) == g.vertices()));
  }
}

TEST_CASE("systems of all separations are submodular") {
  for (const Graph& g : small_graphs(4, false))
    CHECK(enumerate_sk(g, g.n() + 1).is_submodular());
}

TEST_CASE("interior of stars") {
  auto u = GraphUniverse::build(path_graph(4));
  Sep a = u->at(vs({0, 1}), vs({1, 2, 3}));
  Sep b = u->at(vs({2, 3}), vs({0, 1, 2}));
  CHECK(interior(*u, std::array{a, b}) == vs({1, 2}));
  CHECK(interior(*u, std::span<const Sep>{}) == u->graph().vertices());
  CHECK(interior(*u, std::array{a}) == vs({1, 2, 3}));

  // Claw with hub 3: the three leaf separations form a star whose interior
  // is exactly the hub.
  auto claw = GraphUniverse::build(make_graph(4, {{0, 3}, {1, 3}, {2, 3}}));
  Sep x0 = claw->at(vs({0, 3}), vs({1, 2, 3}));
  Sep x1 = claw->at(vs({1, 3}), vs({0, 2, 3}));
  Sep x2 = claw->at(vs({2, 3}), vs({0, 1, 3}));
  CHECK(interior(*claw, std::array{x0, x1, x2}) == vs({3}));
}

TEST_CASE("graph universes satisfy every axiom") {
  for (const Graph& g : small_graphs(4, false))
    CHECK(validate_universe(*GraphUniverse::build(g)).empty());
}
