#include "ttd/duality.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <utility>

#include "ttd/common.hpp"

namespace ttd {

namespace {

std::vector<Sep> sorted_set(std::vector<Sep> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// First pair (i, j), i < j, of a sorted set that fails to point away from
// each other, or {-1, -1} when the set is a star of nondegenerate elements.
std::pair<int, int> first_violation(const Universe& u,
                                    const std::vector<Sep>& sigma) {
  for (int i = 0; i < static_cast<int>(sigma.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(sigma.size()); ++j)
      if (!u.leq(sigma[i], u.inverse(sigma[j]))) return {i, j};
  return {-1, -1};
}

// Replace sigma[moved] by its corner with the inverse of sigma[kept]; absent
// when the corner is undefined or outside the system.
std::optional<std::vector<Sep>> uncross_step(const SepSystem& s,
                                             const std::vector<Sep>& sigma,
                                             int moved, int kept) {
  const Universe& u = s.universe();
  Sep c;
  try {
    c = u.meet(sigma[moved], u.inverse(sigma[kept]));
  } catch (const DomainError&) {
    return std::nullopt;
  }
  if (!s.contains(c)) return std::nullopt;
  std::vector<Sep> next = sigma;
  next[moved] = c;
  return sorted_set(std::move(next));
}

// Image of one element under the shift with pivot r towards s, assuming the
// element lies in the pivot's up-domain; absent when the lattice operation
// is undefined in the universe.
std::optional<Sep> shift_image(const Universe& u, Sep x, Sep r, Sep s) {
  try {
    if (u.leq(r, x)) return u.join(x, s);
    return u.meet(x, u.inverse(s));
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

void require_pivot(const SepSystem& sys, Sep r, Sep s) {
  const Universe& u = sys.universe();
  if (!sys.contains(r) || !sys.contains(s))
    throw DomainError("shift arguments must lie in the system");
  if (!u.leq(r, s)) throw DomainError("the pivot must lie below the target");
  Classification cr = sys.classify(r);
  if (cr.degenerate) throw DomainError("the pivot must be nondegenerate");
  if (cr.trivial_in_s)
    throw DomainError("the pivot must be nontrivial in the system");
}

}  // namespace

StarFamily::StarFamily(std::shared_ptr<const Universe> universe,
                       std::vector<std::vector<Sep>> stars, bool standard)
    : universe_(std::move(universe)), standard_(standard) {
  if (!universe_) throw DomainError("a star family needs a universe");
  for (auto& sigma : stars) {
    for (Sep x : sigma) universe_->check(x);
    sigma = sorted_set(std::move(sigma));
    if (!is_star(*universe_, sigma))
      throw DomainError("star family member is not a star");
  }
  std::sort(stars.begin(), stars.end());
  stars.erase(std::unique(stars.begin(), stars.end()), stars.end());
  stars_ = std::move(stars);
}

bool StarFamily::contains(std::span<const Sep> sigma) const {
  std::vector<Sep> key = sorted_set({sigma.begin(), sigma.end()});
  return std::binary_search(stars_.begin(), stars_.end(), key);
}

ForbiddenFamily StarFamily::as_forbidden() const {
  return ForbiddenFamily::explicit_stars(universe_, stars_);
}

std::vector<std::vector<Sep>> uncross_pair(Sep x1, Sep x2, const SepSystem& s) {
  const Universe& u = s.universe();
  if (!s.contains(x1) || !s.contains(x2))
    throw DomainError("uncross_pair arguments must lie in the system");
  if (u.is_degenerate(x1) || u.is_degenerate(x2))
    throw DomainError("cannot uncross a degenerate separation");
  std::vector<std::vector<Sep>> out;
  auto offer = [&](Sep moved, Sep kept) {
    Sep c;
    try {
      c = u.meet(moved, u.inverse(kept));
    } catch (const DomainError&) {
      return;
    }
    if (!s.contains(c)) return;
    std::vector<Sep> sigma = sorted_set({c, kept});
    if (!is_star(u, sigma)) return;
    out.push_back(std::move(sigma));
  };
  offer(x1, x2);
  if (x1 != x2) offer(x2, x1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Inclusion-minimal members with degenerate elements dropped and members
// containing two separations oriented towards each other discarded; both
// reductions leave the set of consistent avoiding orientations unchanged
// (a degenerate element is chosen by every orientation, and no consistent
// orientation contains such an opposed pair).
std::vector<std::vector<Sep>> reduced_members(const ForbiddenFamily& f,
                                              const SepSystem& s) {
  const Universe& u = s.universe();
  std::vector<std::vector<Sep>> kept;
  for (const auto& m : f.minimal_members_in(s)) {
    std::vector<Sep> t;
    for (Sep x : m)
      if (!u.is_degenerate(x)) t.push_back(x);
    bool opposed = false;
    for (Sep x : t) {
      for (Sep y : t)
        if (x != y && u.leq(u.inverse(y), x)) {
          opposed = true;
          break;
        }
      if (opposed) break;
    }
    if (!opposed) kept.push_back(sorted_set(std::move(t)));
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  std::vector<std::vector<Sep>> out;
  for (const auto& a : kept) {
    bool minimal = true;
    for (const auto& b : kept) {
      if (b.size() < a.size() &&
          std::includes(a.begin(), a.end(), b.begin(), b.end())) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

}  // namespace

StarFamily uncross_family(const ForbiddenFamily& f, const SepSystem& s,
                          UncrossMode mode) {
  const Universe& u = s.universe();
  auto members = reduced_members(f, s);
  std::set<std::vector<Sep>> stars;
  auto emit = [&](const std::vector<Sep>& sigma) {
    if (!is_star(u, sigma))
      throw InternalError("uncrossing terminated on a non-star");
    stars.insert(sigma);
  };
  auto no_corner = [&]() -> Error {
    if (!s.is_submodular())
      return DomainError("uncrossing requires a submodular system");
    return InternalError(
        "a violating pair of a submodular system had no admissible corner");
  };
  if (mode == UncrossMode::lean) {
    for (const auto& m : members) {
      std::vector<Sep> cur = m;
      for (;;) {
        auto [i, j] = first_violation(u, cur);
        if (i < 0) {
          emit(cur);
          break;
        }
        auto next = uncross_step(s, cur, i, j);
        if (!next) next = uncross_step(s, cur, j, i);
        if (!next) throw no_corner();
        cur = std::move(*next);
      }
    }
  } else {
    std::set<std::vector<Sep>> seen;
    std::deque<std::vector<Sep>> queue;
    for (const auto& m : members)
      if (seen.insert(m).second) queue.push_back(m);
    while (!queue.empty()) {
      std::vector<Sep> cur = std::move(queue.front());
      queue.pop_front();
      bool violated = false;
      for (int i = 0; i < static_cast<int>(cur.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(cur.size()); ++j) {
          if (u.leq(cur[i], u.inverse(cur[j]))) continue;
          violated = true;
          bool stepped = false;
          for (auto [moved, kept] : {std::pair{i, j}, std::pair{j, i}})
            if (auto next = uncross_step(s, cur, moved, kept)) {
              stepped = true;
              if (seen.insert(*next).second) queue.push_back(std::move(*next));
            }
          if (!stepped) throw no_corner();
        }
      if (!violated) emit(cur);
    }
  }
  return StarFamily(s.universe_ptr(),
                    std::vector<std::vector<Sep>>(stars.begin(), stars.end()),
                    false);
}

ShiftResult shift_sep(Sep x, Sep r, Sep s, const SepSystem& sys) {
  const Universe& u = sys.universe();
  if (!sys.contains(x)) throw DomainError("shift arguments must lie in the system");
  require_pivot(sys, r, s);
  if (x == u.inverse(r))
    throw DomainError("the inverse of the pivot cannot be shifted");
  ShiftResult out;
  if (u.leq(r, x))
    out.image = u.join(x, s);
  else if (u.leq(r, u.inverse(x)))
    out.image = u.meet(x, u.inverse(s));
  else
    throw DomainError("the element is not in the pivot's up-domain");
  out.in_system = sys.contains(out.image);
  return out;
}

bool emulates(Sep s, Sep r, const SepSystem& sys,
              const StarFamily* for_family) {
  const Universe& u = sys.universe();
  require_pivot(sys, r, s);
  if (for_family && for_family->universe_ptr() != sys.universe_ptr())
    throw DomainError("family and system universes differ");

  // Both orientations of everything above the pivot, minus its inverse.
  Sep ir = u.inverse(r);
  std::vector<Sep> domain;
  for (Sep x : sys.elements()) {
    if (x == ir) continue;
    if (u.leq(r, x) || u.leq(r, u.inverse(x))) domain.push_back(x);
  }
  std::vector<Sep> image(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i) {
    auto img = shift_image(u, domain[i], r, s);
    if (!img || !sys.contains(*img)) return false;
    image[i] = *img;
  }
  if (!for_family) return true;

  // Every family star inside the domain with an element above the pivot must
  // shift back into the family.
  std::vector<Sep> sorted_domain = domain;
  std::sort(sorted_domain.begin(), sorted_domain.end());
  for (const auto& sigma : for_family->stars()) {
    bool inside = true, has_up = false;
    for (Sep y : sigma) {
      if (!std::binary_search(sorted_domain.begin(), sorted_domain.end(), y)) {
        inside = false;
        break;
      }
      if (u.leq(r, y)) has_up = true;
    }
    if (!inside || !has_up) continue;
    std::vector<Sep> img;
    img.reserve(sigma.size());
    for (Sep y : sigma) {
      auto shifted = shift_image(u, y, r, s);
      if (!shifted)
        throw InternalError("a shift image vanished despite plain emulation");
      img.push_back(*shifted);
    }
    if (!for_family->contains(sorted_set(std::move(img)))) return false;
  }
  return true;
}

bool is_separable(const SepSystem& sys, const StarFamily* for_family) {
  const Universe& u = sys.universe();
  if (for_family && for_family->universe_ptr() != sys.universe_ptr())
    throw DomainError("family and system universes differ");
  auto forced = [&](Sep x) {
    return for_family && for_family->contains(std::vector<Sep>{u.inverse(x)});
  };
  auto eligible = [&](Sep x) {
    Classification c = sys.classify(x);
    return !c.degenerate && !c.trivial_in_s && !forced(x);
  };
  std::map<std::pair<Sep, Sep>, bool> memo;
  auto emu = [&](Sep s, Sep r) {
    auto key = std::pair{s, r};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool val = emulates(s, r, sys, for_family);
    memo.emplace(key, val);
    return val;
  };
  for (Sep r : sys.elements()) {
    if (!eligible(r)) continue;
    for (Sep rp : sys.elements()) {
      if (!u.leq(r, rp) || !eligible(u.inverse(rp))) continue;
      bool found = false;
      for (Sep s : sys.elements()) {
        if (!u.leq(r, s) || !u.leq(s, rp)) continue;
        if (emu(s, r) && emu(u.inverse(s), u.inverse(rp))) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

StarFamily close_and_standardize(const StarFamily& fstar, const SepSystem& s,
                                 bool exclude_forced) {
  const Universe& u = s.universe();
  if (fstar.universe_ptr() != s.universe_ptr())
    throw DomainError("family and system universes differ");
  for (const auto& sigma : fstar.stars())
    for (Sep x : sigma)
      if (!s.contains(x))
        throw DomainError("family star leaves the system");

  std::vector<Sep> pivots;
  for (Sep r : s.elements()) {
    Classification c = s.classify(r);
    if (c.degenerate || c.trivial_in_s) continue;
    if (exclude_forced &&
        fstar.contains(std::vector<Sep>{u.inverse(r)}))
      continue;
    pivots.push_back(r);
  }

  // Elements above each pivot and the separations plainly emulating it,
  // computed once per pivot on first use.
  std::map<Sep, std::vector<Sep>> emu;
  auto emulators = [&](Sep r) -> const std::vector<Sep>& {
    auto it = emu.find(r);
    if (it != emu.end()) return it->second;
    Sep ir = u.inverse(r);
    std::vector<Sep> ups;
    for (Sep x : s.elements())
      if (x != ir && u.leq(r, x)) ups.push_back(x);
    std::vector<Sep> list;
    for (Sep cand : s.elements()) {
      if (!u.leq(r, cand)) continue;
      bool ok = true;
      for (Sep x : ups) {
        std::optional<Sep> j;
        try {
          j = u.join(x, cand);
        } catch (const DomainError&) {
          ok = false;
          break;
        }
        if (!s.contains(*j)) {
          ok = false;
          break;
        }
      }
      if (ok) list.push_back(cand);
    }
    return emu.emplace(r, std::move(list)).first->second;
  };

  std::set<std::vector<Sep>> stars(fstar.stars().begin(), fstar.stars().end());
  std::deque<std::vector<Sep>> work(stars.begin(), stars.end());
  std::vector<StarFamily::Shift> shifts;
  std::set<std::pair<std::vector<Sep>, std::vector<Sep>>> shift_seen;
  int dropped = 0;
  while (!work.empty()) {
    std::vector<Sep> sigma = std::move(work.front());
    work.pop_front();
    if (sigma.empty()) continue;
    for (Sep r : pivots) {
      Sep ir = u.inverse(r);
      bool in_domain = true, has_up = false;
      for (Sep y : sigma) {
        if (y == ir) {
          in_domain = false;
          break;
        }
        if (u.leq(r, y))
          has_up = true;
        else if (!u.leq(r, u.inverse(y))) {
          in_domain = false;
          break;
        }
      }
      if (!in_domain || !has_up) continue;
      for (Sep t : emulators(r)) {
        if (t == r) continue;  // the identity shift
        std::vector<Sep> img;
        img.reserve(sigma.size());
        bool defined = true;
        for (Sep y : sigma) {
          auto iy = shift_image(u, y, r, t);
          if (!iy) {
            defined = false;
            break;
          }
          img.push_back(*iy);
        }
        if (!defined) {
          ++dropped;
          continue;
        }
        img = sorted_set(std::move(img));
        if (!is_star(u, img)) {
          ++dropped;
          continue;
        }
        if (img != sigma && shift_seen.emplace(sigma, img).second)
          shifts.push_back({sigma, img, r, t});
        if (stars.insert(img).second) work.push_back(img);
      }
    }
  }

  for (Sep x : s.elements()) {
    if (u.is_degenerate(x) || !u.is_small(u.inverse(x))) continue;
    stars.insert(std::vector<Sep>{x});
  }

  StarFamily out(s.universe_ptr(),
                 std::vector<std::vector<Sep>>(stars.begin(), stars.end()),
                 true);
  out.shifts_ = std::move(shifts);
  out.dropped_images_ = dropped;
  return out;
}

std::optional<STree> stree_exists(std::shared_ptr<const SepSystem> s,
                                  const StarFamily& fbar) {
  if (!s) throw DomainError("stree_exists needs a system");
  if (fbar.universe_ptr() != s->universe_ptr())
    throw DomainError("family and system universes differ");
  const Universe& u = s->universe();
  const auto& stars = fbar.stars();
  for (const auto& sigma : stars)
    for (Sep x : sigma)
      if (!s->contains(x)) throw DomainError("family star leaves the system");

  // stage[z] = round at which a subtree hanging on an incoming edge labelled
  // z became completable; each derivation only uses strictly earlier rounds,
  // so replaying it below terminates.
  std::vector<int> stage(u.size(), -1);
  for (int round = 0;; ++round) {
    bool changed = false;
    for (const auto& sigma : stars) {
      for (Sep z : sigma) {
        if (stage[z] >= 0) continue;
        bool ok = true;
        for (Sep y : sigma) {
          if (y == z) continue;
          int st = stage[u.inverse(y)];
          if (st < 0 || st >= round) {
            ok = false;
            break;
          }
        }
        if (ok) {
          stage[z] = round;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }

  const std::vector<Sep>* root = nullptr;
  for (const auto& sigma : stars) {
    bool ok = true;
    for (Sep y : sigma)
      if (stage[u.inverse(y)] < 0) {
        ok = false;
        break;
      }
    if (ok && (!root || sigma.size() < root->size())) root = &sigma;
  }
  if (!root) return std::nullopt;

  STree t;
  t.system = s;
  t.node_count = 1;
  std::function<int(Sep)> grow = [&](Sep z) -> int {
    const std::vector<Sep>* pick = nullptr;
    for (const auto& sigma : stars) {
      if (!std::binary_search(sigma.begin(), sigma.end(), z)) continue;
      bool ok = true;
      for (Sep y : sigma) {
        if (y == z) continue;
        int st = stage[u.inverse(y)];
        if (st < 0 || st >= stage[z]) {
          ok = false;
          break;
        }
      }
      if (ok && (!pick || sigma.size() < pick->size())) pick = &sigma;
    }
    if (!pick) throw InternalError("fragment extraction lost its derivation");
    int id = t.node_count++;
    for (Sep y : *pick) {
      if (y == z) continue;
      int child = grow(u.inverse(y));
      t.edges.push_back({id, child, u.inverse(y), y});
    }
    return id;
  };
  for (Sep y : *root) {
    int child = grow(u.inverse(y));
    t.edges.push_back({0, child, u.inverse(y), y});
  }
  return t;
}

namespace {

// Shape checks shared by the verification and conversion entry points:
// connected, acyclic, labels inside the system and mutually inverse per
// edge.  Returns each node's incoming star.
std::vector<std::vector<Sep>> in_stars_checked(const STree& t,
                                               const SepSystem& s) {
  const Universe& u = s.universe();
  if (t.node_count < 1) throw DomainError("a tree needs at least one node");
  if (static_cast<int>(t.edges.size()) != t.node_count - 1)
    throw DomainError("a tree on n nodes has exactly n-1 edges");
  std::vector<int> dsu(t.node_count);
  for (int i = 0; i < t.node_count; ++i) dsu[i] = i;
  std::function<int(int)> find = [&](int v) {
    while (dsu[v] != v) v = dsu[v] = dsu[dsu[v]];
    return v;
  };
  std::vector<std::vector<Sep>> star(t.node_count);
  for (const auto& e : t.edges) {
    if (e.a < 0 || e.a >= t.node_count || e.b < 0 || e.b >= t.node_count ||
        e.a == e.b)
      throw DomainError("edge endpoints out of range");
    if (!s.contains(e.ab) || !s.contains(e.ba))
      throw DomainError("edge labels must lie in the system");
    if (u.inverse(e.ab) != e.ba)
      throw DomainError("the two directions of an edge must carry inverse labels");
    int ra = find(e.a), rb = find(e.b);
    if (ra == rb) throw DomainError("the edges close a cycle");
    dsu[ra] = rb;
    star[e.b].push_back(e.ab);
    star[e.a].push_back(e.ba);
  }
  // n-1 successful unions on n nodes leave one component: connected.
  for (auto& sigma : star) sigma = sorted_set(std::move(sigma));
  return star;
}

}  // namespace

bool verify_stree(const STree& t, const SepSystem& s, const StarFamily& f) {
  if (f.universe_ptr() != s.universe_ptr())
    throw DomainError("family and system universes differ");
  for (const auto& sigma : in_stars_checked(t, s))
    if (!f.contains(sigma)) return false;
  return true;
}

bool verify_stree(const STree& t, const SepSystem& s,
                  const ForbiddenFamily& f) {
  if (f.universe_ptr() != s.universe_ptr())
    throw DomainError("family and system universes differ");
  for (const auto& sigma : in_stars_checked(t, s))
    if (!f.member(sigma)) return false;
  return true;
}

int TreeDecomposition::width() const {
  int w = -1;
  for (VSet b : bags) w = std::max(w, popcount(b) - 1);
  return w;
}

TreeDecomposition stree_to_treedec(const STree& t, const Graph& g) {
  if (!t.system) throw DomainError("the tree carries no system");
  const auto* gu = dynamic_cast<const GraphUniverse*>(&t.system->universe());
  if (!gu || !(gu->graph() == g))
    throw DomainError("the tree's labels are not separations of this graph");
  auto stars = in_stars_checked(t, *t.system);

  TreeDecomposition dec;
  dec.node_count = t.node_count;
  for (const auto& e : t.edges) dec.edges.emplace_back(e.a, e.b);
  dec.bags.resize(t.node_count);
  for (int v = 0; v < t.node_count; ++v) {
    VSet bag = g.vertices();
    for (Sep y : stars[v]) bag &= gu->b_side(y);
    dec.bags[v] = bag;
  }

  VSet covered = 0;
  for (VSet b : dec.bags) covered |= b;
  if (covered != g.vertices())
    throw InternalError("decomposition bags do not cover the vertex set");
  for (auto [a, b] : g.edges()) {
    VSet e = (VSet{1} << a) | (VSet{1} << b);
    bool inside = false;
    for (VSet bag : dec.bags)
      if (subset(e, bag)) {
        inside = true;
        break;
      }
    if (!inside) throw InternalError("a graph edge lies in no bag");
  }
  std::vector<std::vector<int>> adj(t.node_count);
  for (auto [a, b] : dec.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (int v = 0; v < g.n(); ++v) {
    int first = -1, total = 0;
    for (int nd = 0; nd < dec.node_count; ++nd)
      if (dec.bags[nd] >> v & 1) {
        if (first < 0) first = nd;
        ++total;
      }
    if (first < 0) continue;
    std::vector<char> seen(dec.node_count, 0);
    std::deque<int> bfs{first};
    seen[first] = 1;
    int reached = 0;
    while (!bfs.empty()) {
      int nd = bfs.front();
      bfs.pop_front();
      ++reached;
      for (int nb : adj[nd])
        if (!seen[nb] && (dec.bags[nb] >> v & 1)) {
          seen[nb] = 1;
          bfs.push_back(nb);
        }
    }
    if (reached != total)
      throw InternalError("a vertex's bags are not connected in the tree");
  }
  return dec;
}

std::vector<std::pair<VSet, VSet>> induced_separations(
    const TreeDecomposition& dec) {
  if (dec.node_count < 1 ||
      static_cast<int>(dec.bags.size()) != dec.node_count)
    throw DomainError("malformed decomposition");
  std::vector<std::vector<std::pair<int, int>>> adj(dec.node_count);
  for (int i = 0; i < static_cast<int>(dec.edges.size()); ++i) {
    auto [a, b] = dec.edges[i];
    if (a < 0 || a >= dec.node_count || b < 0 || b >= dec.node_count)
      throw DomainError("malformed decomposition");
    adj[a].emplace_back(b, i);
    adj[b].emplace_back(a, i);
  }
  std::vector<std::pair<VSet, VSet>> out;
  for (int i = 0; i < static_cast<int>(dec.edges.size()); ++i) {
    auto [a, b] = dec.edges[i];
    std::vector<char> on_a(dec.node_count, 0);
    std::deque<int> bfs{a};
    on_a[a] = 1;
    while (!bfs.empty()) {
      int nd = bfs.front();
      bfs.pop_front();
      for (auto [nb, ei] : adj[nd])
        if (ei != i && !on_a[nb]) {
          on_a[nb] = 1;
          bfs.push_back(nb);
        }
    }
    VSet left = 0, right = 0;
    for (int nd = 0; nd < dec.node_count; ++nd)
      (on_a[nd] ? left : right) |= dec.bags[nd];
    out.emplace_back(left, right);
  }
  return out;
}

DualityReport verify_duality(const Graph& g, int k, DualityFamily family,
                             UncrossMode mode) {
  if (g.n() == 0) throw DomainError("duality needs a nonempty graph");
  if (k < 1) throw DomainError("the order parameter must be positive");
  auto u = GraphUniverse::build(g);
  auto sys = std::make_shared<const SepSystem>(enumerate_sk(u, k));
  ForbiddenFamily f = family == DualityFamily::block
                          ? ForbiddenFamily::core(u, k)
                      : family == DualityFamily::profile
                          ? ForbiddenFamily::corners(u)
                          : ForbiddenFamily::cover(u);

  DualityReport rep;
  rep.k = k;
  rep.family = family;
  rep.mode = mode;

  std::optional<Orientation> tangle =
      find_f_tangle(sys, f, /*require_regular=*/true);

  StarFamily fstar = uncross_family(f, *sys, mode);
  StarFamily fbar = close_and_standardize(fstar, *sys);
  rep.closure_size = static_cast<int>(fbar.stars().size());
  rep.dropped_shift_images = fbar.dropped_images();
  std::optional<STree> tree = stree_exists(sys, fbar);

  if (tangle && tree)
    throw InternalError("both sides of the duality produced a witness");
  if (!tangle && !tree)
    throw InternalError("neither side of the duality produced a witness");

  if (tangle) {
    OrientationFlags fl = orientation_flags(*tangle);
    if (!fl.consistent || !fl.regular || !f.avoided_by(*tangle))
      throw InternalError("the orientation witness failed re-verification");
    rep.structure_exists = true;
    rep.orientation = std::move(tangle);
  } else {
    if (!verify_stree(*tree, *sys, fbar))
      throw InternalError("the tree witness failed re-verification");
    TreeDecomposition dec = stree_to_treedec(*tree, g);
    auto induced = induced_separations(dec);
    for (std::size_t i = 0; i < tree->edges.size(); ++i) {
      Sep ab = tree->edges[i].ab;
      if (induced[i] != std::pair{u->a_side(ab), u->b_side(ab)})
        throw InternalError("the decomposition does not induce the tree's labels");
    }
    rep.tree = std::move(tree);
    rep.decomposition = std::move(dec);
  }
  return rep;
}

}  // namespace ttd
