#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "ttd/common.hpp"
#include "ttd/families.hpp"

namespace ttd {

namespace {

constexpr std::uint8_t kUnknown = 0;
constexpr std::uint8_t kChosen = 1;
constexpr std::uint8_t kRejected = 2;

// Backtracking search over one separation pair at a time, with incremental
// conflict propagation and family-specific pruning.  The conflict matrix
// encodes which pairs of elements may never be chosen together; rejecting an
// element forces its inverse because orientations are total.
class Engine {
 public:
  enum class Matrix { consistent, strong };

  Engine(std::shared_ptr<const SepSystem> sys, const ForbiddenFamily* fam,
         bool require_regular, Matrix matrix)
      : sys_(std::move(sys)), fam_(fam) {
    const SepSystem& s = *sys_;
    const Universe& u = s.universe();
    const auto& elems = s.elements();
    m_ = static_cast<int>(elems.size());
    id_.assign(elems.begin(), elems.end());
    dense_.assign(static_cast<std::size_t>(u.size()), -1);
    for (int d = 0; d < m_; ++d) dense_[static_cast<std::size_t>(id_[d])] = d;
    invd_.resize(m_);
    for (int d = 0; d < m_; ++d)
      invd_[d] = dense_[static_cast<std::size_t>(u.inverse(id_[d]))];
    words_ = (m_ + 63) / 64;
    conflict_.assign(static_cast<std::size_t>(m_) * words_, 0);
    if (matrix == Matrix::consistent) {
      for (int a = 0; a < m_; ++a) {
        for (int b = a + 1; b < m_; ++b) {
          if (b == invd_[a]) continue;
          if (u.lt(u.inverse(id_[a]), id_[b]) ||
              u.lt(u.inverse(id_[b]), id_[a])) {
            mark_conflict(a, b);
            mark_conflict(b, a);
          }
        }
      }
    } else {
      // Directly from the definition: no orientation may contain both the
      // inverse of r and s whenever r < s (r = s included).
      for (int r = 0; r < m_; ++r) {
        for (int t = 0; t < m_; ++t) {
          if (u.lt(id_[r], id_[t])) {
            mark_conflict(invd_[r], t);
            mark_conflict(t, invd_[r]);
          }
        }
      }
    }
    state_.assign(m_, kUnknown);
    chosen_bits_.assign(words_, 0);
    known_bits_.assign(words_, 0);

    if (fam_) {
      switch (fam_->kind()) {
        case ForbiddenFamily::Kind::core: {
          native_core_ = true;
          core_k_ = fam_->parameter();
          const GraphUniverse* gu = fam_->graph_universe();
          core_i_ = gu->graph().vertices();
          core_mask_.resize(m_);
          for (int d = 0; d < m_; ++d)
            core_mask_[d] = gu->b_side(id_[d]);
          break;
        }
        case ForbiddenFamily::Kind::corners:
          native_corners_ = true;
          break;
        default: {
          auto mm = fam_->minimal_members_in(s);
          incid_.assign(m_, {});
          for (const auto& mem : mm) {
            int idx = static_cast<int>(members_.size());
            std::vector<int> dm;
            for (Sep x : mem) dm.push_back(dense_[static_cast<std::size_t>(x)]);
            for (int d : dm) incid_[d].push_back(idx);
            members_.push_back(std::move(dm));
          }
          mcnt_.assign(members_.size(), 0);
          mdead_.assign(members_.size(), 0);
          break;
        }
      }
    }

    // Branching order: cheapest separations first, ids as tie-break.
    std::vector<std::pair<int, int>> ps;
    for (auto [x, xi] : s.separation_pairs()) {
      if (x == xi) continue;
      ps.push_back({dense_[static_cast<std::size_t>(x)],
                    dense_[static_cast<std::size_t>(xi)]});
    }
    std::sort(ps.begin(), ps.end(), [&](const auto& p, const auto& q) {
      Order po = u.order_of(id_[p.first]);
      Order qo = u.order_of(id_[q.first]);
      return po != qo ? po < qo : id_[p.first] < id_[q.first];
    });
    pairs_ = std::move(ps);

    std::vector<int> roots;
    for (int d = 0; d < m_; ++d) {
      if (u.is_degenerate(id_[d])) roots.push_back(d);
      else if (require_regular && u.is_small(id_[d])) roots.push_back(d);
      else if (matrix == Matrix::strong && has_conflict(d, d))
        roots.push_back(invd_[d]);
    }
    root_ok_ = true;
    for (int r : roots) {
      if (!propagate(r)) {
        root_ok_ = false;
        break;
      }
    }
    if (root_ok_ && !members_.empty()) root_ok_ = root_unit_scan();
    if (root_ok_ && native_core_ && popcount(core_i_) < core_k_)
      root_ok_ = false;
    if (root_ok_ && fam_ && fam_->member(std::span<const Sep>{}))
      root_ok_ = false;
  }

  std::vector<std::vector<Sep>> run(bool find_first) {
    find_first_ = find_first;
    if (root_ok_) dfs(0);
    return std::move(solutions_);
  }

 private:
  void mark_conflict(int a, int b) {
    conflict_[static_cast<std::size_t>(a) * words_ + b / 64] |=
        std::uint64_t{1} << (b % 64);
  }
  bool has_conflict(int a, int b) const {
    return (conflict_[static_cast<std::size_t>(a) * words_ + b / 64] >>
            (b % 64)) &
           1;
  }

  enum class OpK : std::uint8_t { state, cnt, dead, core, trail };
  struct Op {
    OpK k;
    int a;
    VSet old;
  };

  void set_state(int d, std::uint8_t v) {
    ops_.push_back({OpK::state, d, state_[d]});
    state_[d] = v;
    std::uint64_t bit = std::uint64_t{1} << (d % 64);
    known_bits_[d / 64] |= bit;
    if (v == kChosen) chosen_bits_[d / 64] |= bit;
  }

  void undo_to(std::size_t checkpoint) {
    while (ops_.size() > checkpoint) {
      Op op = ops_.back();
      ops_.pop_back();
      switch (op.k) {
        case OpK::state: {
          std::uint64_t bit = std::uint64_t{1} << (op.a % 64);
          state_[op.a] = static_cast<std::uint8_t>(op.old);
          if (state_[op.a] == kUnknown) known_bits_[op.a / 64] &= ~bit;
          if (state_[op.a] != kChosen) chosen_bits_[op.a / 64] &= ~bit;
          break;
        }
        case OpK::cnt:
          --mcnt_[op.a];
          break;
        case OpK::dead:
          mdead_[op.a] = 0;
          break;
        case OpK::core:
          core_i_ = op.old;
          break;
        case OpK::trail:
          trail_.pop_back();
          break;
      }
    }
  }

  // Chooses d and everything it forces; false means contradiction.
  bool propagate(int start) {
    queue_.clear();
    queue_.push_back(start);
    while (!queue_.empty()) {
      int d = queue_.back();
      queue_.pop_back();
      if (state_[d] == kChosen) continue;
      if (state_[d] == kRejected) return false;
      set_state(d, kChosen);
      ops_.push_back({OpK::trail, 0, 0});
      trail_.push_back(d);
      int di = invd_[d];
      if (di != d) {
        if (state_[di] == kChosen) return false;
        if (!reject(di)) return false;
      }
      const std::uint64_t* row = &conflict_[static_cast<std::size_t>(d) * words_];
      for (int w = 0; w < words_; ++w) {
        if (row[w] & chosen_bits_[w]) return false;
        std::uint64_t force = row[w] & ~known_bits_[w];
        while (force) {
          int b = w * 64 + std::countr_zero(force);
          force &= force - 1;
          if (!reject(b)) return false;
        }
      }
      if (native_core_) {
        ops_.push_back({OpK::core, 0, core_i_});
        core_i_ &= core_mask_[d];
        if (popcount(core_i_) < core_k_) return false;
      }
      if (native_corners_) {
        const Universe& u = sys_->universe();
        for (std::size_t t = 0; t < trail_.size(); ++t) {
          Sep z;
          try {
            z = u.meet(u.inverse(id_[d]), u.inverse(id_[trail_[t]]));
          } catch (const DomainError&) {
            continue;
          }
          if (!sys_->contains(z)) continue;
          int dz = dense_[static_cast<std::size_t>(z)];
          if (state_[dz] == kChosen) return false;
          if (state_[dz] == kUnknown && !reject(dz)) return false;
        }
      }
      if (!incid_.empty()) {
        for (int mIdx : incid_[d]) {
          if (mdead_[mIdx]) continue;
          ops_.push_back({OpK::cnt, mIdx, 0});
          ++mcnt_[mIdx];
          int sz = static_cast<int>(members_[mIdx].size());
          if (mcnt_[mIdx] == sz) return false;
          if (mcnt_[mIdx] == sz - 1 && !member_unit(mIdx)) return false;
        }
      }
    }
    return true;
  }

  // Rejects d (marks it unchoosable) and queues its inverse.
  bool reject(int d) {
    if (state_[d] == kRejected) return true;
    if (state_[d] == kChosen) return false;
    set_state(d, kRejected);
    if (!incid_.empty()) {
      for (int mIdx : incid_[d]) {
        if (!mdead_[mIdx]) {
          ops_.push_back({OpK::dead, mIdx, 0});
          mdead_[mIdx] = 1;
        }
      }
    }
    int di = invd_[d];
    if (di == d) return false;  // a degenerate element cannot be rejected
    queue_.push_back(di);
    return true;
  }

  // All but one element of the member are chosen: its last element must go.
  bool member_unit(int mIdx) {
    for (int e : members_[mIdx]) {
      if (state_[e] == kChosen) continue;
      if (state_[e] == kRejected) {
        if (!mdead_[mIdx]) {
          ops_.push_back({OpK::dead, mIdx, 0});
          mdead_[mIdx] = 1;
        }
        return true;
      }
      return reject(e);
    }
    throw InternalError("member count does not match its states");
  }

  bool root_unit_scan() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t mIdx = 0; mIdx < members_.size(); ++mIdx) {
        if (mdead_[mIdx]) continue;
        int sz = static_cast<int>(members_[mIdx].size());
        if (mcnt_[mIdx] == sz) return false;
        if (mcnt_[mIdx] == sz - 1) {
          int missing = -1;
          for (int e : members_[mIdx])
            if (state_[e] != kChosen) missing = e;
          if (missing < 0 || mdead_[mIdx]) continue;
          if (state_[missing] == kRejected) {
            mdead_[mIdx] = 1;
            continue;
          }
          if (!propagate(invd_[missing])) return false;
          changed = true;
        }
      }
    }
    return true;
  }

  bool dfs(std::size_t idx) {
    while (idx < pairs_.size() && state_[pairs_[idx].first] != kUnknown) ++idx;
    if (idx == pairs_.size()) {
      std::vector<Sep> chosen;
      for (int d = 0; d < m_; ++d) {
        if (state_[d] == kChosen) chosen.push_back(id_[d]);
        else if (state_[d] == kUnknown)
          throw InternalError("search ended with an unoriented separation");
      }
      solutions_.push_back(std::move(chosen));
      return find_first_;
    }
    for (int cand : {pairs_[idx].first, pairs_[idx].second}) {
      std::size_t cp = ops_.size();
      if (propagate(cand) && dfs(idx + 1)) return true;
      undo_to(cp);
    }
    return false;
  }

  std::shared_ptr<const SepSystem> sys_;
  const ForbiddenFamily* fam_ = nullptr;
  int m_ = 0;
  int words_ = 0;
  std::vector<Sep> id_;
  std::vector<int> dense_;
  std::vector<int> invd_;
  std::vector<std::uint64_t> conflict_;
  std::vector<std::uint8_t> state_;
  std::vector<std::uint64_t> chosen_bits_, known_bits_;
  std::vector<int> trail_;
  std::vector<int> queue_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<Op> ops_;
  bool root_ok_ = false;
  bool find_first_ = false;
  // core family state
  bool native_core_ = false;
  int core_k_ = 0;
  VSet core_i_ = 0;
  std::vector<VSet> core_mask_;
  // corner propagation
  bool native_corners_ = false;
  // explicit minimal-member watches
  std::vector<std::vector<int>> members_;
  std::vector<std::vector<int>> incid_;
  std::vector<int> mcnt_;
  std::vector<char> mdead_;
  std::vector<std::vector<Sep>> solutions_;
};

std::vector<Orientation> to_orientations(
    std::shared_ptr<const SepSystem> s,
    std::vector<std::vector<Sep>> raw) {
  std::sort(raw.begin(), raw.end());
  std::vector<Orientation> out;
  out.reserve(raw.size());
  for (auto& ch : raw) out.emplace_back(s, std::move(ch));
  return out;
}

}  // namespace

std::optional<Orientation> find_f_tangle(std::shared_ptr<const SepSystem> s,
                                         const ForbiddenFamily& f,
                                         bool require_regular) {
  if (s->universe_ptr().get() != f.universe_ptr().get())
    throw DomainError("system and family live in different universes");
  Engine e(s, &f, require_regular, Engine::Matrix::consistent);
  auto raw = e.run(true);
  if (raw.empty()) return std::nullopt;
  return Orientation(s, std::move(raw.front()));
}

std::vector<Orientation> all_f_tangles(std::shared_ptr<const SepSystem> s,
                                       const ForbiddenFamily& f,
                                       bool require_regular) {
  if (s->universe_ptr().get() != f.universe_ptr().get())
    throw DomainError("system and family live in different universes");
  Engine e(s, &f, require_regular, Engine::Matrix::consistent);
  return to_orientations(s, e.run(false));
}

std::vector<Orientation> all_orientations(std::shared_ptr<const SepSystem> s,
                                          OrientationClass cls) {
  Engine::Matrix mat = cls == OrientationClass::strongly_consistent
                           ? Engine::Matrix::strong
                           : Engine::Matrix::consistent;
  bool regular = cls == OrientationClass::consistent_regular;
  Engine e(s, nullptr, regular, mat);
  return to_orientations(s, e.run(false));
}

}  // namespace ttd
