#include "ttd/graphsep.hpp"

#include <algorithm>

namespace ttd {

namespace {

std::string side_string(VSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : set_to_vertices(s)) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::uint64_t hash_sides(VSet a, VSet b) {
  std::uint64_t h = a * 0x9e3779b97f4a7c15ull;
  h ^= (b + 0x9e3779b97f4a7c15ull) + (h << 6) + (h >> 2);
  h *= 0xbf58476d1ce4e5b9ull;
  return h ^ (h >> 31);
}

}  // namespace

bool is_separation(const Graph& g, VSet a, VSet b) {
  VSet v = g.vertices();
  if ((a | b) != v || (a & ~v) || (b & ~v)) return false;
  VSet only_a = a & ~b, only_b = b & ~a;
  VSet rest = only_a;
  while (rest) {
    int x = lowest_bit(rest);
    rest &= rest - 1;
    if (g.adj(x) & only_b) return false;
  }
  return true;
}

std::shared_ptr<const GraphUniverse> GraphUniverse::build(const Graph& g) {
  if (g.n() > kMaxVertices)
    throw DomainError("separation universes are materialized only for graphs "
                      "with at most " +
                      std::to_string(kMaxVertices) + " vertices, got " +
                      std::to_string(g.n()));
  auto u = std::make_shared<GraphUniverse>();
  u->g_ = g;
  VSet v = g.vertices();

  // Every separation (A,B) arises once from its separator X = A∩B together
  // with a side assignment of the components of G−X.
  std::vector<std::pair<VSet, VSet>> sides;
  for (VSet x = 0;; x = (x - v) & v) {
    auto comps = g.components(v & ~x);
    int c = static_cast<int>(comps.size());
    for (std::uint32_t pick = 0; pick < (1u << c); ++pick) {
      VSet a = x, b = x;
      for (int i = 0; i < c; ++i)
        ((pick >> i) & 1 ? a : b) |= comps[i];
      sides.emplace_back(a, b);
    }
    if (x == v) break;
  }
  std::sort(sides.begin(), sides.end());
  u->a_.reserve(sides.size());
  for (auto [a, b] : sides) {
    u->a_.push_back(a);
    u->b_.push_back(b);
    u->order_.push_back(popcount(a & b));
  }
  u->index_sides();
  u->inv_.resize(sides.size());
  for (Sep i = 0; i < static_cast<Sep>(sides.size()); ++i) {
    auto j = u->find(u->b_[i], u->a_[i]);
    if (!j) throw InternalError("separation table misses an inverse");
    u->inv_[i] = *j;
  }
  u->degenerate_ = *u->find(v, v);
  return u;
}

void GraphUniverse::index_sides() {
  size_t cap = 1;
  while (cap < a_.size() * 2) cap <<= 1;
  table_.assign(cap, {{~0ull, ~0ull}, -1});
  mask_ = cap - 1;
  for (Sep i = 0; i < static_cast<Sep>(a_.size()); ++i) {
    std::uint64_t h = hash_sides(a_[i], b_[i]) & mask_;
    while (table_[h].second >= 0) h = (h + 1) & mask_;
    table_[h] = {{a_[i], b_[i]}, i};
  }
}

std::optional<Sep> GraphUniverse::find(VSet a, VSet b) const {
  std::uint64_t h = hash_sides(a, b) & mask_;
  while (table_[h].second >= 0) {
    if (table_[h].first == std::make_pair(a, b)) return table_[h].second;
    h = (h + 1) & mask_;
  }
  return std::nullopt;
}

Sep GraphUniverse::at(VSet a, VSet b) const {
  if (auto s = find(a, b)) return *s;
  throw DomainError("(" + side_string(a) + "," + side_string(b) +
                    ") is not a separation of this graph");
}

Sep GraphUniverse::inverse(Sep x) const {
  check(x);
  return inv_[x];
}

bool GraphUniverse::leq(Sep x, Sep y) const {
  check(x);
  check(y);
  return subset(a_[x], a_[y]) && subset(b_[y], b_[x]);
}

Sep GraphUniverse::join(Sep x, Sep y) const {
  check(x);
  check(y);
  auto s = find(a_[x] | a_[y], b_[x] & b_[y]);
  if (!s) throw InternalError("join left the graph universe");
  return *s;
}

Sep GraphUniverse::meet(Sep x, Sep y) const {
  check(x);
  check(y);
  auto s = find(a_[x] & a_[y], b_[x] | b_[y]);
  if (!s) throw InternalError("meet left the graph universe");
  return *s;
}

Order GraphUniverse::order_of(Sep x) const {
  check(x);
  return order_[x];
}

std::string GraphUniverse::label(Sep x) const {
  check(x);
  return "(" + side_string(a_[x]) + "," + side_string(b_[x]) + ")";
}

VSet GraphUniverse::a_side(Sep x) const {
  check(x);
  return a_[x];
}

VSet GraphUniverse::b_side(Sep x) const {
  check(x);
  return b_[x];
}

SepSystem enumerate_sk(std::shared_ptr<const GraphUniverse> u, int k) {
  if (k < 1) throw DomainError("separation systems S_k require k ≥ 1");
  std::vector<Sep> elems;
  for (Sep x = 0; x < u->size(); ++x)
    if (u->order_of(x) < k) elems.push_back(x);
  return SepSystem(std::move(u), std::move(elems));
}

SepSystem enumerate_sk(const Graph& g, int k) {
  return enumerate_sk(GraphUniverse::build(g), k);
}

VSet interior(const GraphUniverse& u, std::span<const Sep> sigma) {
  VSet b = u.graph().vertices();
  for (Sep x : sigma) b &= u.b_side(x);
  return b;
}

}  // namespace ttd
