#include "ttd/families.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <utility>

#include "ttd/common.hpp"

namespace ttd {

namespace {

std::vector<Sep> sorted_distinct(std::span<const Sep> xs) {
  std::vector<Sep> out(xs.begin(), xs.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Orientation::Orientation(std::shared_ptr<const SepSystem> system,
                         std::vector<Sep> chosen)
    : system_(std::move(system)), chosen_(std::move(chosen)) {
  if (!system_) throw DomainError("orientation requires a system");
  std::sort(chosen_.begin(), chosen_.end());
  chosen_.erase(std::unique(chosen_.begin(), chosen_.end()), chosen_.end());
  has_.assign(system_->universe().size(), 0);
  for (Sep x : chosen_) {
    if (!system_->contains(x))
      throw DomainError("orientation element outside its system");
    has_[static_cast<std::size_t>(x)] = 1;
  }
  for (auto [x, xi] : system_->separation_pairs()) {
    int picked = has_[static_cast<std::size_t>(x)] +
                 (x == xi ? 0 : has_[static_cast<std::size_t>(xi)]);
    if (picked != 1)
      throw DomainError("orientation must pick exactly one side of " +
                        system_->universe().label(x));
  }
}

bool Orientation::contains(Sep x) const {
  return x >= 0 && static_cast<std::size_t>(x) < has_.size() &&
         has_[static_cast<std::size_t>(x)] != 0;
}

OrientationFlags orientation_flags(const Orientation& o) {
  const Universe& u = o.system().universe();
  const auto& ch = o.chosen();
  OrientationFlags f;

  f.consistent = true;
  for (Sep a : ch) {
    for (Sep b : ch) {
      if (b == a || b == u.inverse(a)) continue;
      if (u.lt(u.inverse(a), b)) {
        f.consistent = false;
        break;
      }
    }
    if (!f.consistent) break;
  }

  f.strongly_consistent = true;
  for (Sep a : ch) {
    for (Sep b : ch) {
      if (u.lt(u.inverse(a), b)) {
        f.strongly_consistent = false;
        break;
      }
    }
    if (!f.strongly_consistent) break;
  }

  f.regular = true;
  for (Sep x : o.system().elements()) {
    if (u.is_small(x) && !o.contains(x)) {
      f.regular = false;
      break;
    }
  }

  if (f.strongly_consistent != (f.consistent && f.regular))
    throw InternalError(
        "strong consistency must coincide with consistency plus regularity");
  return f;
}

void ForbiddenFamily::build_cover_masks() {
  const Graph& g = graph_universe_->graph();
  auto edges = g.edges();
  all_vertices_ = g.vertices();
  all_edges_ = edges.empty() ? 0 : ((std::uint64_t{1} << edges.size()) - 1);
  vcover_.resize(graph_universe_->size());
  ecover_.resize(graph_universe_->size());
  for (Sep id = 0; id < graph_universe_->size(); ++id) {
    VSet a = graph_universe_->a_side(id);
    vcover_[static_cast<std::size_t>(id)] = a;
    std::uint64_t em = 0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      VSet ends = (VSet{1} << edges[e].first) | (VSet{1} << edges[e].second);
      if (subset(ends, a)) em |= std::uint64_t{1} << e;
    }
    ecover_[static_cast<std::size_t>(id)] = em;
  }
}

ForbiddenFamily ForbiddenFamily::cover(std::shared_ptr<const GraphUniverse> u) {
  ForbiddenFamily f;
  f.kind_ = Kind::cover;
  f.universe_ = u;
  f.graph_universe_ = std::move(u);
  f.build_cover_masks();
  return f;
}

ForbiddenFamily ForbiddenFamily::cover_stars(
    std::shared_ptr<const GraphUniverse> u) {
  ForbiddenFamily f;
  f.kind_ = Kind::cover_stars;
  f.universe_ = u;
  f.graph_universe_ = std::move(u);
  f.build_cover_masks();
  return f;
}

ForbiddenFamily ForbiddenFamily::core(std::shared_ptr<const GraphUniverse> u,
                                      int k) {
  if (k < 1) throw DomainError("core family requires k >= 1");
  ForbiddenFamily f;
  f.kind_ = Kind::core;
  f.param_ = k;
  f.universe_ = u;
  f.graph_universe_ = std::move(u);
  return f;
}

ForbiddenFamily ForbiddenFamily::corners(std::shared_ptr<const Universe> u) {
  ForbiddenFamily f;
  f.kind_ = Kind::corners;
  f.universe_ = std::move(u);
  return f;
}

ForbiddenFamily ForbiddenFamily::interior_stars(
    std::shared_ptr<const GraphUniverse> u, int n) {
  if (n < 0) throw DomainError("interior_stars family requires n >= 0");
  ForbiddenFamily f;
  f.kind_ = Kind::interior_stars;
  f.param_ = n;
  f.universe_ = u;
  f.graph_universe_ = std::move(u);
  return f;
}

ForbiddenFamily ForbiddenFamily::explicit_stars(
    std::shared_ptr<const Universe> u, std::vector<std::vector<Sep>> stars) {
  ForbiddenFamily f;
  f.kind_ = Kind::explicit_stars;
  f.universe_ = std::move(u);
  std::set<std::vector<Sep>> dedup;
  for (auto& s : stars) {
    auto canon = sorted_distinct(s);
    if (!is_star(*f.universe_, canon))
      throw DomainError("explicit_stars entries must be stars");
    dedup.insert(std::move(canon));
  }
  f.stars_.assign(dedup.begin(), dedup.end());
  return f;
}

bool ForbiddenFamily::member(std::span<const Sep> subset) const {
  auto xs = sorted_distinct(subset);
  for (Sep x : xs) {
    if (x < 0 || x >= universe_->size())
      throw DomainError("family membership query outside the universe");
  }
  switch (kind_) {
    case Kind::cover:
    case Kind::cover_stars: {
      if (xs.size() > 3) return false;
      VSet vm = 0;
      std::uint64_t em = 0;
      for (Sep x : xs) {
        vm |= vcover_[static_cast<std::size_t>(x)];
        em |= ecover_[static_cast<std::size_t>(x)];
      }
      if (vm != all_vertices_ || em != all_edges_) return false;
      return kind_ == Kind::cover || is_star(*universe_, xs);
    }
    case Kind::core: {
      VSet i = graph_universe_->graph().vertices();
      for (Sep x : xs) i &= graph_universe_->b_side(x);
      return popcount(i) < param_;
    }
    case Kind::corners: {
      if (xs.empty() || xs.size() > 3) return false;
      for (Sep x : xs) {
        for (Sep y : xs) {
          Sep z;
          try {
            z = universe_->meet(universe_->inverse(x), universe_->inverse(y));
          } catch (const DomainError&) {
            continue;
          }
          std::vector<Sep> got = sorted_distinct(std::array<Sep, 3>{x, y, z});
          if (got == xs) return true;
        }
      }
      return false;
    }
    case Kind::interior_stars: {
      if (!is_star(*universe_, xs)) return false;
      return popcount(interior(*graph_universe_, xs)) < param_;
    }
    case Kind::explicit_stars:
      return std::binary_search(stars_.begin(), stars_.end(), xs);
  }
  throw InternalError("unhandled family kind");
}

bool ForbiddenFamily::avoided_by(const Orientation& o) const {
  const auto& ch = o.chosen();
  switch (kind_) {
    case Kind::cover:
    case Kind::cover_stars: {
      for (std::size_t i = 0; i < ch.size(); ++i) {
        VSet vi = vcover_[static_cast<std::size_t>(ch[i])];
        std::uint64_t ei = ecover_[static_cast<std::size_t>(ch[i])];
        for (std::size_t j = i; j < ch.size(); ++j) {
          VSet vj = vi | vcover_[static_cast<std::size_t>(ch[j])];
          std::uint64_t ej = ei | ecover_[static_cast<std::size_t>(ch[j])];
          for (std::size_t l = j; l < ch.size(); ++l) {
            if ((vj | vcover_[static_cast<std::size_t>(ch[l])]) !=
                all_vertices_)
              continue;
            if ((ej | ecover_[static_cast<std::size_t>(ch[l])]) != all_edges_)
              continue;
            std::array<Sep, 3> sigma{ch[i], ch[j], ch[l]};
            if (kind_ == Kind::cover || member(sigma)) return false;
          }
        }
      }
      return true;
    }
    case Kind::core: {
      VSet i = graph_universe_->graph().vertices();
      for (Sep x : ch) i &= graph_universe_->b_side(x);
      return popcount(i) >= param_;
    }
    case Kind::corners: {
      for (Sep x : ch) {
        for (Sep y : ch) {
          Sep z;
          try {
            z = universe_->meet(universe_->inverse(x), universe_->inverse(y));
          } catch (const DomainError&) {
            continue;
          }
          if (o.contains(z)) return false;
        }
      }
      return true;
    }
    case Kind::interior_stars: {
      // Depth-first search over stars inside the chosen set; every minimal
      // violating star lists its elements in increasing id order with each
      // element strictly shrinking the running interior.
      std::vector<Sep> cand;
      for (Sep x : ch)
        if (!universe_->is_degenerate(x)) cand.push_back(x);
      std::vector<Sep> stack;
      VSet full = graph_universe_->graph().vertices();
      auto dfs = [&](auto&& self, std::size_t from, VSet inter) -> bool {
        if (popcount(inter) < param_) return true;  // violating star found
        for (std::size_t i = from; i < cand.size(); ++i) {
          Sep x = cand[i];
          VSet nx = inter & graph_universe_->b_side(x);
          if (nx == inter) continue;
          bool ok = true;
          for (Sep y : stack) {
            if (!universe_->leq(y, universe_->inverse(x)) ||
                x == universe_->inverse(y)) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          stack.push_back(x);
          if (self(self, i + 1, nx)) return true;
          stack.pop_back();
        }
        return false;
      };
      return !dfs(dfs, 0, full);
    }
    case Kind::explicit_stars: {
      for (const auto& star : stars_) {
        bool all = true;
        for (Sep x : star) {
          if (!o.contains(x)) {
            all = false;
            break;
          }
        }
        if (all) return false;
      }
      return true;
    }
  }
  throw InternalError("unhandled family kind");
}

namespace {

// Keeps only inclusion-minimal sets; members must be sorted element lists.
std::vector<std::vector<Sep>> minimal_filter(
    std::set<std::vector<Sep>> members) {
  std::vector<std::vector<Sep>> out;
  for (const auto& m : members) {
    bool minimal = true;
    if (m.size() <= 8) {
      // Proper subsets via bitmask enumeration.
      unsigned full = (1u << m.size()) - 1;
      for (unsigned mask = 0; mask < full && minimal; ++mask) {
        std::vector<Sep> sub;
        for (std::size_t i = 0; i < m.size(); ++i)
          if (mask & (1u << i)) sub.push_back(m[i]);
        if (members.count(sub)) minimal = false;
      }
    } else {
      for (const auto& other : members) {
        if (other.size() >= m.size()) break;
        if (std::includes(m.begin(), m.end(), other.begin(), other.end())) {
          minimal = false;
          break;
        }
      }
    }
    if (minimal) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace

std::vector<std::vector<Sep>> ForbiddenFamily::minimal_members_in(
    const SepSystem& s) const {
  if (s.universe_ptr().get() != universe_.get())
    throw DomainError("system and family live in different universes");
  const auto& elems = s.elements();
  switch (kind_) {
    case Kind::cover: {
      std::vector<std::vector<Sep>> out;
      std::set<std::vector<Sep>> found;
      std::vector<char> single(elems.size(), 0);
      auto vm = [&](std::size_t i) {
        return vcover_[static_cast<std::size_t>(elems[i])];
      };
      auto em = [&](std::size_t i) {
        return ecover_[static_cast<std::size_t>(elems[i])];
      };
      if (all_vertices_ == 0 && all_edges_ == 0) return {{}};
      for (std::size_t i = 0; i < elems.size(); ++i) {
        if (vm(i) == all_vertices_ && em(i) == all_edges_) {
          single[i] = 1;
          found.insert({elems[i]});
        }
      }
      std::set<std::pair<std::size_t, std::size_t>> pair_members;
      for (std::size_t i = 0; i < elems.size(); ++i) {
        if (single[i]) continue;
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
          if (single[j]) continue;
          if ((vm(i) | vm(j)) == all_vertices_ &&
              (em(i) | em(j)) == all_edges_) {
            pair_members.insert({i, j});
            found.insert({elems[i], elems[j]});
          }
        }
      }
      for (std::size_t i = 0; i < elems.size(); ++i) {
        if (single[i]) continue;
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
          if (single[j] || pair_members.count({i, j})) continue;
          VSet vij = vm(i) | vm(j);
          std::uint64_t eij = em(i) | em(j);
          for (std::size_t l = j + 1; l < elems.size(); ++l) {
            if (single[l]) continue;
            if ((vij | vm(l)) != all_vertices_) continue;
            if ((eij | em(l)) != all_edges_) continue;
            if (pair_members.count({i, l}) || pair_members.count({j, l}))
              continue;
            found.insert({elems[i], elems[j], elems[l]});
          }
        }
      }
      out.assign(found.begin(), found.end());
      std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      });
      return out;
    }
    case Kind::cover_stars: {
      auto base = ForbiddenFamily::cover(graph_universe_).minimal_members_in(s);
      std::vector<std::vector<Sep>> out;
      for (auto& m : base)
        if (is_star(*universe_, m)) out.push_back(std::move(m));
      return out;
    }
    case Kind::core: {
      VSet full = graph_universe_->graph().vertices();
      if (popcount(full) < param_) return {{}};
      // Work over distinct B-side values; every minimal member picks one
      // representative element per B-side in its pattern.
      std::vector<VSet> bvals;
      std::vector<std::vector<Sep>> reps;
      {
        std::map<VSet, std::vector<Sep>> by_b;
        for (Sep x : elems) by_b[graph_universe_->b_side(x)].push_back(x);
        for (auto& [b, ids] : by_b) {
          bvals.push_back(b);
          reps.push_back(std::move(ids));
        }
      }
      std::vector<std::vector<Sep>> out;
      std::vector<std::size_t> pattern;
      auto expand = [&]() {
        std::vector<Sep> combo(pattern.size());
        auto rec = [&](auto&& self, std::size_t depth) -> void {
          if (depth == pattern.size()) {
            out.push_back(combo);
            std::sort(out.back().begin(), out.back().end());
            return;
          }
          for (Sep id : reps[pattern[depth]]) {
            combo[depth] = id;
            self(self, depth + 1);
          }
        };
        rec(rec, 0);
      };
      auto dfs = [&](auto&& self, std::size_t from, VSet inter) -> void {
        if (popcount(inter) < param_) {
          for (std::size_t drop = 0; drop < pattern.size(); ++drop) {
            VSet rest = full;
            for (std::size_t t = 0; t < pattern.size(); ++t)
              if (t != drop) rest &= bvals[pattern[t]];
            if (popcount(rest) < param_) return;  // not minimal
          }
          expand();
          return;
        }
        for (std::size_t i = from; i < bvals.size(); ++i) {
          VSet nx = inter & bvals[i];
          if (nx == inter) continue;
          pattern.push_back(i);
          self(self, i + 1, nx);
          pattern.pop_back();
        }
      };
      dfs(dfs, 0, full);
      std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      });
      return out;
    }
    case Kind::corners: {
      std::set<std::vector<Sep>> found;
      for (Sep x : elems) {
        for (Sep y : elems) {
          Sep z;
          try {
            z = universe_->meet(universe_->inverse(x), universe_->inverse(y));
          } catch (const DomainError&) {
            continue;
          }
          if (!s.contains(z)) continue;
          found.insert(sorted_distinct(std::array<Sep, 3>{x, y, z}));
        }
      }
      return minimal_filter(std::move(found));
    }
    case Kind::interior_stars: {
      VSet full = graph_universe_->graph().vertices();
      std::set<std::vector<Sep>> found;
      std::vector<Sep> cand;
      for (Sep x : elems)
        if (!universe_->is_degenerate(x)) cand.push_back(x);
      if (popcount(full) < param_) return {{}};
      std::vector<Sep> stack;
      auto dfs = [&](auto&& self, std::size_t from, VSet inter) -> void {
        if (popcount(inter) < param_) {
          for (std::size_t drop = 0; drop < stack.size(); ++drop) {
            VSet rest = full;
            for (std::size_t t = 0; t < stack.size(); ++t)
              if (t != drop)
                rest &= graph_universe_->b_side(stack[t]);
            if (popcount(rest) < param_) return;
          }
          found.insert(stack);
          return;
        }
        for (std::size_t i = from; i < cand.size(); ++i) {
          Sep x = cand[i];
          VSet nx = inter & graph_universe_->b_side(x);
          if (nx == inter) continue;
          bool ok = true;
          for (Sep y : stack) {
            if (!universe_->leq(y, universe_->inverse(x)) ||
                x == universe_->inverse(y)) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          stack.push_back(x);
          self(self, i + 1, nx);
          stack.pop_back();
        }
      };
      dfs(dfs, 0, full);
      std::vector<std::vector<Sep>> out(found.begin(), found.end());
      std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      });
      return out;
    }
    case Kind::explicit_stars: {
      std::set<std::vector<Sep>> found;
      for (const auto& star : stars_) {
        bool inside = true;
        for (Sep x : star)
          if (!s.contains(x)) {
            inside = false;
            break;
          }
        if (inside) found.insert(star);
      }
      return minimal_filter(std::move(found));
    }
  }
  throw InternalError("unhandled family kind");
}

Orientation two_profile(const Graph& g) {
  if (g.n() == 0 || !g.connected())
    throw DomainError("the 2-profile construction needs a connected graph");
  int x = -1;
  for (int v = 0; v < g.n(); ++v) {
    VSet rest = g.vertices() & ~(VSet{1} << v);
    if (g.components(rest).size() <= 1) {
      x = v;
      break;
    }
  }
  if (x < 0) throw InternalError("a connected graph has a non-cutvertex");
  auto u = GraphUniverse::build(g);
  auto s = std::make_shared<SepSystem>(enumerate_sk(u, 2));
  VSet xbit = VSet{1} << x;
  std::vector<Sep> chosen;
  for (auto [a, b] : s->separation_pairs()) {
    for (Sep cand : {a, b}) {
      if (u->is_degenerate(cand)) {
        chosen.push_back(cand);
        break;
      }
      bool towards = (u->b_side(cand) & xbit) != 0 &&
                     !(u->a_side(cand) == g.vertices() &&
                       u->b_side(cand) == xbit);
      if (towards) {
        chosen.push_back(cand);
        break;
      }
      if (cand == b)
        throw InternalError("2-profile rule failed to orient a separation");
    }
  }
  return Orientation(std::move(s), std::move(chosen));
}

}  // namespace ttd
