#include "ttd/sepsys.hpp"

#include <algorithm>
#include <set>

namespace ttd {

void Universe::check(Sep x) const {
  if (x < 0 || x >= size())
    throw DomainError("separation id " + std::to_string(x) +
                      " out of range for universe of size " +
                      std::to_string(size()));
}

bool Universe::nested(Sep x, Sep y) const {
  Sep xi = inverse(x), yi = inverse(y);
  return leq(x, y) || leq(x, yi) || leq(xi, y) || leq(xi, yi);
}

bool is_nested(const Universe& u, Sep x, Sep y) {
  u.check(x);
  u.check(y);
  return u.nested(x, y);
}

// ---------------------------------------------------------------------------
// TableUniverse

Sep TableUniverse::Builder::add(std::string label, Order order) {
  if (order < 0) throw DomainError("order values must be non-negative");
  labels_.push_back(std::move(label));
  orders_.push_back(order);
  inv_.push_back(-1);
  return static_cast<Sep>(labels_.size()) - 1;
}

TableUniverse::Builder& TableUniverse::Builder::set_inverse(Sep a, Sep b) {
  auto in_range = [this](Sep x) {
    return x >= 0 && x < static_cast<Sep>(labels_.size());
  };
  if (!in_range(a) || !in_range(b))
    throw DomainError("set_inverse: element out of range");
  inv_[a] = b;
  inv_[b] = a;
  return *this;
}

TableUniverse::Builder& TableUniverse::Builder::add_leq(Sep lo, Sep hi) {
  leq_.emplace_back(lo, hi);
  return *this;
}

std::shared_ptr<const TableUniverse> TableUniverse::Builder::build() const {
  auto u = std::make_shared<TableUniverse>();
  int n = static_cast<int>(labels_.size());
  u->labels_ = labels_;
  u->orders_ = orders_;
  u->inv_ = inv_;
  for (int i = 0; i < n; ++i)
    if (u->inv_[i] < 0)
      throw DomainError("element " + labels_[i] + " has no declared inverse");
  u->leq_.assign(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) u->leq_[i][i] = 1;
  for (auto [lo, hi] : leq_) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n)
      throw DomainError("add_leq: element out of range");
    u->leq_[lo][hi] = 1;
    u->leq_[u->inv_[hi]][u->inv_[lo]] = 1;  // the involution reverses order
  }
  // Transitive closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (u->leq_[i][k])
        for (int j = 0; j < n; ++j)
          if (u->leq_[k][j]) u->leq_[i][j] = 1;
  return u;
}

Sep TableUniverse::inverse(Sep x) const {
  check(x);
  return inv_[x];
}

bool TableUniverse::leq(Sep x, Sep y) const {
  check(x);
  check(y);
  return leq_[x][y];
}

std::optional<Sep> TableUniverse::bound(Sep x, Sep y, bool upper) const {
  // Unique least upper bound (or greatest lower bound) if it exists.
  std::vector<Sep> bounds;
  for (Sep z = 0; z < size(); ++z) {
    bool ok = upper ? (leq_[x][z] && leq_[y][z]) : (leq_[z][x] && leq_[z][y]);
    if (ok) bounds.push_back(z);
  }
  for (Sep c : bounds) {
    bool extreme = true;
    for (Sep z : bounds)
      if (upper ? !leq_[c][z] : !leq_[z][c]) {
        extreme = false;
        break;
      }
    if (extreme) return c;
  }
  return std::nullopt;
}

Sep TableUniverse::join(Sep x, Sep y) const {
  check(x);
  check(y);
  if (auto b = bound(x, y, true)) return *b;
  throw DomainError("join of " + labels_[x] + " and " + labels_[y] +
                    " is undefined in this universe");
}

Sep TableUniverse::meet(Sep x, Sep y) const {
  check(x);
  check(y);
  if (auto b = bound(x, y, false)) return *b;
  throw DomainError("meet of " + labels_[x] + " and " + labels_[y] +
                    " is undefined in this universe");
}

Order TableUniverse::order_of(Sep x) const {
  check(x);
  return orders_[x];
}

std::string TableUniverse::label(Sep x) const {
  check(x);
  return labels_[x];
}

// ---------------------------------------------------------------------------
// SepSystem

SepSystem::SepSystem(std::shared_ptr<const Universe> universe,
                     std::vector<Sep> elements)
    : universe_(std::move(universe)) {
  if (!universe_) throw DomainError("separation system requires a universe");
  member_.assign(static_cast<size_t>(universe_->size()), 0);
  for (Sep x : elements) {
    universe_->check(x);
    member_[x] = 1;
    member_[universe_->inverse(x)] = 1;  // close under the involution
  }
  for (Sep x = 0; x < universe_->size(); ++x)
    if (member_[x]) elems_.push_back(x);
}

bool SepSystem::contains(Sep x) const {
  return x >= 0 && x < static_cast<Sep>(member_.size()) && member_[x];
}

std::vector<std::pair<Sep, Sep>> SepSystem::separation_pairs() const {
  std::vector<std::pair<Sep, Sep>> out;
  for (Sep x : elems_) {
    Sep xi = universe_->inverse(x);
    if (x <= xi) out.emplace_back(x, xi);
  }
  return out;
}

bool SepSystem::is_submodular() const {
  for (Sep x : elems_)
    for (Sep y : elems_) {
      Sep j, m;
      try {
        j = universe_->join(x, y);
        m = universe_->meet(x, y);
      } catch (const DomainError&) {
        return false;
      }
      if (!contains(j) && !contains(m)) return false;
    }
  return true;
}

Classification SepSystem::classify(Sep x) const {
  if (!contains(x))
    throw DomainError("classify: element not in the separation system");
  const Universe& u = *universe_;
  Classification c;
  c.small = u.is_small(x);
  c.degenerate = u.is_degenerate(x);
  Sep xi = u.inverse(x);
  auto trivial = [&](Sep r) {
    for (Sep s : elems_) {
      if (s == r || s == u.inverse(r)) continue;  // witness must be another separation
      if (u.lt(r, s) && u.lt(r, u.inverse(s))) return true;
    }
    return false;
  };
  c.trivial_in_s = trivial(x);
  c.cotrivial_in_s = trivial(xi);
  return c;
}

// ---------------------------------------------------------------------------
// Stars and corners

bool is_star(const Universe& u, std::span<const Sep> sigma) {
  std::vector<Sep> xs(sigma.begin(), sigma.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (Sep x : xs) {
    u.check(x);
    if (u.is_degenerate(x)) return false;
  }
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      if (xs[j] == u.inverse(xs[i])) return false;
      if (!u.leq(xs[i], u.inverse(xs[j]))) return false;
    }
  return true;
}

Sep corner(const Universe& u, Sep x, Sep y, CornerKind which) {
  u.check(x);
  u.check(y);
  return which == CornerKind::join ? u.join(x, y) : u.meet(x, y);
}

// ---------------------------------------------------------------------------
// Axiom validation

namespace {

// Membership bitsets over universe ids, 64 ids per word.
struct BitRows {
  int n, words;
  std::vector<std::uint64_t> bits;
  BitRows(int n_) : n(n_), words((n_ + 63) / 64), bits(static_cast<size_t>(n_) * words) {}
  void set(int r, int c) { bits[static_cast<size_t>(r) * words + c / 64] |= 1ull << (c % 64); }
  bool get(int r, int c) const {
    return (bits[static_cast<size_t>(r) * words + c / 64] >> (c % 64)) & 1;
  }
  bool row_subset(int r1, int r2) const {  // row r1 ⊆ row r2
    for (int w = 0; w < words; ++w)
      if (bits[static_cast<size_t>(r1) * words + w] &
          ~bits[static_cast<size_t>(r2) * words + w])
        return false;
    return true;
  }
};

}  // namespace

std::vector<Violation> validate_universe(const Universe& u) {
  std::vector<Violation> out;
  const int n = u.size();
  auto report = [&](std::string axiom, std::vector<Sep> elems, std::string detail) {
    out.push_back({std::move(axiom), std::move(elems), std::move(detail)});
  };

  for (Sep x = 0; x < n; ++x) {
    Sep xi = u.inverse(x);
    if (xi < 0 || xi >= n) {
      report("involution", {x}, "inverse out of range");
      return out;  // nothing else is checkable
    }
    if (u.inverse(xi) != x) report("involution", {x}, "inverse(inverse(x)) != x");
    if (u.order_of(x) < 0) report("order-nonnegative", {x}, "negative order");
    if (x < xi && u.order_of(x) != u.order_of(xi))
      report("order-symmetry", {x, xi}, "order_of(x) != order_of(x*)");
    if (!u.leq(x, x)) report("reflexivity", {x}, "x ≤ x fails");
  }

  BitRows up(n), down(n);  // up: {y : x ≤ y} per row x; down: {y : y ≤ x}
  for (Sep x = 0; x < n; ++x)
    for (Sep y = 0; y < n; ++y)
      if (u.leq(x, y)) {
        up.set(x, y);
        down.set(y, x);
      }

  for (Sep x = 0; x < n; ++x)
    for (Sep y = 0; y < n; ++y) {
      if (x < y && up.get(x, y) && up.get(y, x))
        report("antisymmetry", {x, y}, "x ≤ y and y ≤ x for distinct elements");
      if (up.get(x, y)) {
        if (!up.row_subset(y, x))
          report("transitivity", {x, y}, "x ≤ y but up-set of y not within up-set of x");
        if (!u.leq(u.inverse(y), u.inverse(x)))
          report("order-reversal", {x, y}, "x ≤ y but y* ≤ x* fails");
      }
    }

  for (Sep x = 0; x < n; ++x)
    for (Sep y = x; y < n; ++y) {
      std::optional<Sep> j, m;
      try {
        j = u.join(x, y);
      } catch (const DomainError&) {
      }
      try {
        m = u.meet(x, y);
      } catch (const DomainError&) {
      }
      if (j) {
        if (!up.get(x, *j) || !up.get(y, *j))
          report("join-upper-bound", {x, y, *j}, "join not above both arguments");
        else
          for (Sep z = 0; z < n; ++z)
            if (up.get(x, z) && up.get(y, z) && !up.get(*j, z)) {
              report("join-least", {x, y, *j, z}, "join not below another upper bound");
              break;
            }
      }
      if (m) {
        if (!down.get(x, *m) || !down.get(y, *m))
          report("meet-lower-bound", {x, y, *m}, "meet not below both arguments");
        else
          for (Sep z = 0; z < n; ++z)
            if (down.get(x, z) && down.get(y, z) && !down.get(*m, z)) {
              report("meet-greatest", {x, y, *m, z}, "meet not above another lower bound");
              break;
            }
      }
      if (j && m) {
        if (u.order_of(*j) + u.order_of(*m) > u.order_of(x) + u.order_of(y))
          report("order-submodularity", {x, y},
                 "|x∨y| + |x∧y| > |x| + |y|");
      }
      if (j) {
        std::optional<Sep> mi;
        try {
          mi = u.meet(u.inverse(x), u.inverse(y));
        } catch (const DomainError&) {
        }
        if (!mi || *mi != u.inverse(*j))
          report("de-morgan", {x, y}, "(x∨y)* != x*∧y*");
      }
    }
  return out;
}

}  // namespace ttd
