#include "ttd/widths.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ttd/blocks.hpp"
#include "ttd/common.hpp"
#include "ttd/duality.hpp"
#include "ttd/families.hpp"
#include "ttd/graphsep.hpp"
#include "ttd/sepsys.hpp"

namespace ttd {

namespace {

constexpr int kMaxDpVertices = 25;

// Vertices outside `removed` ∪ {v} that see the component of v inside
// `removed` ∪ {v}: the neighbourhood v has accumulated once `removed` has
// been eliminated before it.
int elimination_cost(const Graph& g, VSet removed, int v) {
  VSet comp = VSet{1} << v;
  VSet allowed = removed | comp;
  for (;;) {
    VSet grown = comp | (g.neighbors(comp) & allowed);
    if (grown == comp) break;
    comp = grown;
  }
  return popcount(g.neighbors(comp));
}

void check_scan_domain(const Graph& g, const char* what) {
  if (g.n() == 0) throw DomainError(std::string(what) + " needs vertices");
  if (g.n() > GraphUniverse::kMaxVertices)
    throw DomainError(std::string(what) + " supports at most 10 vertices");
}

ForbiddenFamily family_for(DualityFamily fam,
                           const std::shared_ptr<const GraphUniverse>& u,
                           int k) {
  switch (fam) {
    case DualityFamily::block:
      return ForbiddenFamily::core(u, k);
    case DualityFamily::profile:
      return ForbiddenFamily::corners(u);
    case DualityFamily::tangle:
      return ForbiddenFamily::cover(u);
  }
  throw DomainError("unknown duality family");
}

bool has_structure(const std::shared_ptr<const GraphUniverse>& u, int k,
                   DualityFamily fam) {
  auto sys = std::make_shared<const SepSystem>(enumerate_sk(u, k));
  return find_f_tangle(sys, family_for(fam, u, k), true).has_value();
}

// Largest k with an order-k structure of the family.  Existence is monotone
// decreasing in k (tests exercise this separately; compute_widths asserts
// it), so the scan stops at the first absent order.  Every nonempty graph
// has all three structures at k = 1, and none survives k = n + 1, where the
// degenerate separation joins the system and by itself forms a forbidden
// set of each family.
int scan_structure(const Graph& g, DualityFamily fam, const char* what) {
  check_scan_domain(g, what);
  auto u = GraphUniverse::build(g);
  int best = 0;
  for (int k = 1; k <= g.n() + 1; ++k) {
    if (!has_structure(u, k, fam)) break;
    best = k;
  }
  if (best == 0) throw InternalError(std::string(what) + " found no order-1 structure");
  return best;
}

}  // namespace

int tree_width(const Graph& g) {
  int n = g.n();
  if (n == 0) throw DomainError("tree width needs vertices");
  if (n > kMaxDpVertices)
    throw DomainError("tree width search supports at most 25 vertices");
  // best[t] = least possible maximum elimination cost over orderings of the
  // remaining set t, given that its complement was eliminated first.
  std::vector<std::int8_t> best(std::size_t{1} << n, 0);
  for (VSet t = 1; t < (VSet{1} << n); ++t) {
    int b = kMaxDpVertices + 1;
    VSet rest = t;
    while (rest != 0) {
      int v = lowest_bit(rest);
      rest &= rest - 1;
      int cost = elimination_cost(g, full_set(n) & ~t, v);
      int sub = best[t & ~(VSet{1} << v)];
      b = std::min(b, std::max(cost, sub));
    }
    best[t] = static_cast<std::int8_t>(b);
  }
  return best[full_set(n)];
}

int adjusted_branch_width(const Graph& g) {
  return scan_structure(g, DualityFamily::tangle, "branch width");
}

int profile_width(const Graph& g) {
  return scan_structure(g, DualityFamily::profile, "profile width");
}

int block_width(const Graph& g) {
  int via_orientations = scan_structure(g, DualityFamily::block, "block width");
  int via_search = block_number(g);
  if (via_orientations != via_search)
    throw InternalError("block width routes disagree: orientation scan " +
                        std::to_string(via_orientations) + ", block search " +
                        std::to_string(via_search));
  return via_orientations;
}

WidthReport compute_widths(const Graph& g) {
  WidthReport rep;
  rep.tw = tree_width(g);
  rep.brw = adjusted_branch_width(g);
  rep.pw = profile_width(g);
  rep.bw = block_width(g);

  int top = std::max({rep.brw, rep.pw, rep.bw}) + 1;
  for (int k = 1; k <= top; ++k) {
    KWitness w;
    for (DualityFamily fam : {DualityFamily::block, DualityFamily::profile,
                              DualityFamily::tangle}) {
      DualityReport dr = verify_duality(g, k, fam, UncrossMode::lean);
      bool structure = dr.structure_exists;
      bool tree = dr.tree.has_value();
      switch (fam) {
        case DualityFamily::block:
          w.block = structure;
          w.block_tree = tree;
          break;
        case DualityFamily::profile:
          w.profile = structure;
          w.profile_tree = tree;
          break;
        case DualityFamily::tangle:
          w.tangle = structure;
          w.tangle_tree = tree;
          break;
      }
    }
    rep.per_k[k] = w;
  }

  // The scalar scans assume monotonicity and the witness sweep must agree
  // with them: each structure is present exactly for k up to its width.
  auto check_flip = [&](int width, auto present, const char* what) {
    for (const auto& [k, w] : rep.per_k) {
      if (present(w) != (k <= width))
        throw InternalError(std::string("width witness sweep disagrees with ") +
                            what + " at order " + std::to_string(k));
    }
  };
  check_flip(rep.bw, [](const KWitness& w) { return w.block; }, "block width");
  check_flip(rep.pw, [](const KWitness& w) { return w.profile; },
             "profile width");
  check_flip(rep.brw, [](const KWitness& w) { return w.tangle; },
             "branch width");
  return rep;
}

WidthReport verify_inequalities(const Graph& g) {
  WidthReport rep;
  rep.tw = tree_width(g);
  rep.brw = adjusted_branch_width(g);
  rep.pw = profile_width(g);
  rep.bw = block_width(g);

  auto require = [](bool ok, const char* chain) {
    if (!ok)
      throw InternalError(std::string("width inequality violated: ") + chain);
  };
  int t1 = rep.tw + 1;
  require(rep.pw <= t1, "pw <= tw+1");
  require(2 * t1 <= 3 * rep.pw, "2(tw+1) <= 3*pw");
  require(rep.brw <= t1, "brw <= tw+1");
  require(2 * t1 <= 3 * rep.brw, "2(tw+1) <= 3*brw");
  require(rep.brw <= rep.pw, "brw <= pw");
  require(2 * rep.pw <= 3 * rep.brw, "2*pw <= 3*brw");
  require(rep.bw <= rep.pw, "bw <= pw");
  return rep;
}

}  // namespace ttd
