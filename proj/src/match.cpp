#include "permatch/match.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>

#include "search_util.hpp"

namespace permatch {

namespace {

using detail::Clock;
using detail::limits_hit;
using detail::ms_since;
using detail::prefix_bounds;

// Depth-first search over pattern slots in position order. Shared by the
// first-witness matcher, the counter and the enumerator; the sink decides
// whether to keep going after each complete occurrence.
class BacktrackEngine {
 public:
  BacktrackEngine(const Pattern& p, const Permutation& text,
                  const SearchLimits& limits)
      : mesh_(to_mesh(p)),
        text_(text),
        limits_(limits),
        k_(mesh_.k()),
        n_(text.size()) {
    prepare();
  }

  // sink returns false to stop the search
  void run(const std::function<bool(const std::vector<int>&)>& sink,
           MatchStats& stats) {
    stats_ = &stats;
    sink_ = &sink;
    if (limits_hit(limits_, stats)) {
      stats.timed_out = true;
      return;
    }
    if (k_ <= n_) dfs(1);
  }

 private:
  struct ValueForce {
    enum class Op { exact, above_pv, below_pv } op;
    int ref;  // a value for exact, a pattern value for the relative ops
  };

  void prepare() {
    const auto& p = mesh_.perm;
    prefix_bounds(p, pred_, succ_);

    // Fully shaded columns and rows get dedicated handling.
    std::vector<bool> full_col(static_cast<std::size_t>(k_) + 1, true);
    std::vector<bool> full_row(static_cast<std::size_t>(k_) + 1, true);
    std::vector<std::vector<bool>> shaded(
        static_cast<std::size_t>(k_) + 1,
        std::vector<bool>(static_cast<std::size_t>(k_) + 1, false));
    for (const auto& [x, y] : mesh_.cells) {
      shaded[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = true;
    }
    for (int x = 0; x <= k_; ++x) {
      for (int y = 0; y <= k_; ++y) {
        if (!shaded[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) {
          full_col[static_cast<std::size_t>(x)] = false;
        }
        if (!shaded[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)]) {
          full_row[static_cast<std::size_t>(x)] = false;
        }
      }
    }

    force_first_ = full_col[0];
    force_last_ = full_col[static_cast<std::size_t>(k_)];
    adjacent_to_prev_.assign(static_cast<std::size_t>(k_) + 1, false);
    for (int c = 1; c <= k_ - 1; ++c) {
      if (full_col[static_cast<std::size_t>(c)]) {
        adjacent_to_prev_[static_cast<std::size_t>(c) + 1] = true;
      }
    }

    value_forces_.assign(static_cast<std::size_t>(k_) + 1, {});
    for (int r = 0; r <= k_; ++r) {
      if (!full_row[static_cast<std::size_t>(r)]) continue;
      if (r == 0) {
        value_forces_[static_cast<std::size_t>(p.position_of(1))].push_back(
            {ValueForce::Op::exact, 1});
      } else if (r == k_) {
        value_forces_[static_cast<std::size_t>(p.position_of(k_))].push_back(
            {ValueForce::Op::exact, n_});
      } else {
        const int a = p.position_of(r);
        const int b = p.position_of(r + 1);
        if (b > a) {
          value_forces_[static_cast<std::size_t>(b)].push_back(
              {ValueForce::Op::above_pv, r});
        } else {
          value_forces_[static_cast<std::size_t>(a)].push_back(
              {ValueForce::Op::below_pv, r + 1});
        }
      }
    }

    // Remaining cells become rectangle checks at the first depth where
    // both the position interval and the value interval are pinned.
    cells_at_depth_.assign(static_cast<std::size_t>(k_) + 1, {});
    bool any_generic = false;
    for (const auto& [x, y] : mesh_.cells) {
      if (full_col[static_cast<std::size_t>(x)] ||
          full_row[static_cast<std::size_t>(y)]) {
        continue;
      }
      const int dx = x == 0 ? 1 : (x == k_ ? k_ : x + 1);
      const int dy =
          y == 0
              ? p.position_of(1)
              : (y == k_ ? p.position_of(k_)
                         : std::max(p.position_of(y), p.position_of(y + 1)));
      cells_at_depth_[static_cast<std::size_t>(std::max(dx, dy))].push_back(
          {x, y});
      any_generic = true;
    }
    if (any_generic) grid_.emplace(text_);

    pos_at_slot_.assign(static_cast<std::size_t>(k_) + 1, 0);
    val_at_slot_.assign(static_cast<std::size_t>(k_) + 1, 0);
    val_of_pv_.assign(static_cast<std::size_t>(k_) + 2, 0);
    val_of_pv_[static_cast<std::size_t>(k_) + 1] = n_ + 1;
  }

  bool stop_now() {
    if ((stats_->nodes & 4095) == 0 && limits_hit(limits_, *stats_)) {
      stats_->timed_out = true;
      return true;
    }
    return false;
  }

  // returns false to abort the whole search
  bool dfs(int j) {
    if (j > k_) {
      return (*sink_)(
          std::vector<int>(pos_at_slot_.begin() + 1, pos_at_slot_.end()));
    }
    const auto& p = mesh_.perm;
    const int prev_pos = pos_at_slot_[static_cast<std::size_t>(j) - 1];
    int lo = prev_pos + 1;
    const int hi = n_ - (k_ - j);

    // position and value forcing from fully shaded columns/rows
    std::optional<int> forced;
    bool contradiction = false;
    auto merge = [&](int pos) {
      if (forced && *forced != pos) contradiction = true;
      forced = pos;
    };
    if (j == 1 && force_first_) merge(1);
    if (j == k_ && force_last_) merge(n_);
    if (adjacent_to_prev_[static_cast<std::size_t>(j)]) merge(prev_pos + 1);
    for (const ValueForce& vf : value_forces_[static_cast<std::size_t>(j)]) {
      int target = 0;
      switch (vf.op) {
        case ValueForce::Op::exact:
          target = vf.ref;
          break;
        case ValueForce::Op::above_pv:
          target = val_of_pv_[static_cast<std::size_t>(vf.ref)] + 1;
          break;
        case ValueForce::Op::below_pv:
          target = val_of_pv_[static_cast<std::size_t>(vf.ref)] - 1;
          break;
      }
      if (target < 1 || target > n_) {
        contradiction = true;
        break;
      }
      merge(text_.position_of(target));
    }
    if (contradiction) return true;
    int from = lo, to = hi;
    if (forced) {
      if (*forced < lo || *forced > hi) return true;
      from = to = *forced;
    }

    const int pj = p.at(j);
    for (int i = from; i <= to; ++i) {
      ++stats_->nodes;
      if (stop_now()) return false;
      const int v = text_.at(i);
      const int vlo =
          pred_[static_cast<std::size_t>(j)]
              ? val_at_slot_[static_cast<std::size_t>(
                    pred_[static_cast<std::size_t>(j)])]
              : 0;
      const int vhi =
          succ_[static_cast<std::size_t>(j)]
              ? val_at_slot_[static_cast<std::size_t>(
                    succ_[static_cast<std::size_t>(j)])]
              : n_ + 1;
      if (v <= vlo || v >= vhi) continue;

      pos_at_slot_[static_cast<std::size_t>(j)] = i;
      val_at_slot_[static_cast<std::size_t>(j)] = v;
      val_of_pv_[static_cast<std::size_t>(pj)] = v;

      bool cells_ok = true;
      for (const Cell& cell : cells_at_depth_[static_cast<std::size_t>(j)]) {
        const auto [x, y] = cell;
        const int plo = x == 0 ? 0 : pos_at_slot_[static_cast<std::size_t>(x)];
        const int phi =
            x == k_ ? n_ + 1 : pos_at_slot_[static_cast<std::size_t>(x) + 1];
        const int wlo = y == 0 ? 0 : val_of_pv_[static_cast<std::size_t>(y)];
        const int whi = y == k_
                            ? n_ + 1
                            : val_of_pv_[static_cast<std::size_t>(y) + 1];
        ++stats_->rect_queries;
        if (grid_->rectangle_count(plo, phi, wlo, whi) > 0) {
          cells_ok = false;
          break;
        }
      }
      if (cells_ok && !dfs(j + 1)) return false;
    }
    pos_at_slot_[static_cast<std::size_t>(j)] = 0;
    val_at_slot_[static_cast<std::size_t>(j)] = 0;
    return true;
  }

  MeshPattern mesh_;
  const Permutation& text_;
  SearchLimits limits_;
  int k_, n_;

  std::vector<int> pred_, succ_;
  bool force_first_ = false, force_last_ = false;
  std::vector<bool> adjacent_to_prev_;
  std::vector<std::vector<ValueForce>> value_forces_;
  std::vector<std::vector<Cell>> cells_at_depth_;
  std::optional<DominanceGrid> grid_;

  std::vector<int> pos_at_slot_, val_at_slot_, val_of_pv_;
  MatchStats* stats_ = nullptr;
  const std::function<bool(const std::vector<int>&)>* sink_ = nullptr;
};

Matching witness_from(const Pattern& p, const Permutation& text,
                      const std::vector<int>& positions) {
  return matching_from_positions(p.perm(), text, positions);
}

}  // namespace

MatchResult match_exhaustive(const Pattern& p, const Permutation& text,
                             const SearchLimits& limits) {
  const auto start = Clock::now();
  MatchResult result;
  const MeshPattern mesh = to_mesh(p);
  const int k = mesh.k();
  const int n = text.size();
  if (limits_hit(limits, result.stats)) {
    result.stats.timed_out = true;
    result.stats.elapsed_ms = ms_since(start);
    return result;
  }
  if (k <= n) {
    const DominanceGrid grid(text);
    const auto& pperm = mesh.perm;
    std::vector<int> pos(static_cast<std::size_t>(k));
    std::iota(pos.begin(), pos.end(), 1);
    std::vector<int> ival(static_cast<std::size_t>(k) + 2);
    std::vector<int> vval(static_cast<std::size_t>(k) + 2);
    ival[0] = vval[0] = 0;
    ival[static_cast<std::size_t>(k) + 1] =
        vval[static_cast<std::size_t>(k) + 1] = n + 1;
    while (true) {
      ++result.stats.nodes;
      if ((result.stats.nodes & 4095) == 0 &&
          limits_hit(limits, result.stats)) {
        result.stats.timed_out = true;
        break;
      }
      // order-isomorphism, then every shaded cell via the grid
      bool ok = true;
      for (int j = 1; j <= k; ++j) {
        ival[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j) - 1];
        vval[static_cast<std::size_t>(pperm.at(j))] =
            text.at(pos[static_cast<std::size_t>(j) - 1]);
      }
      for (int y = 1; y < k && ok; ++y) {
        if (vval[static_cast<std::size_t>(y)] >=
            vval[static_cast<std::size_t>(y) + 1]) {
          ok = false;
        }
      }
      for (auto it = mesh.cells.begin(); ok && it != mesh.cells.end(); ++it) {
        ++result.stats.rect_queries;
        if (grid.rectangle_count(ival[static_cast<std::size_t>(it->first)],
                                 ival[static_cast<std::size_t>(it->first) + 1],
                                 vval[static_cast<std::size_t>(it->second)],
                                 vval[static_cast<std::size_t>(it->second) +
                                      1]) > 0) {
          ok = false;
        }
      }
      if (ok) {
        result.found = true;
        result.witness = witness_from(p, text, pos);
        break;
      }
      // next k-subset in lexicographic order
      int j = k - 1;
      while (j >= 0 && pos[static_cast<std::size_t>(j)] == n - (k - 1 - j)) {
        --j;
      }
      if (j < 0) break;
      ++pos[static_cast<std::size_t>(j)];
      for (int l = j + 1; l < k; ++l) {
        pos[static_cast<std::size_t>(l)] = pos[static_cast<std::size_t>(l) - 1] + 1;
      }
    }
  }
  result.stats.elapsed_ms = ms_since(start);
  return result;
}

MatchResult match_backtrack(const Pattern& p, const Permutation& text,
                            const SearchLimits& limits) {
  const auto start = Clock::now();
  MatchResult result;
  BacktrackEngine engine(p, text, limits);
  engine.run(
      [&](const std::vector<int>& positions) {
        result.found = true;
        result.witness = witness_from(p, text, positions);
        return false;
      },
      result.stats);
  result.stats.elapsed_ms = ms_since(start);
  return result;
}

CountResult count_occurrences(const Pattern& p, const Permutation& text,
                              const SearchLimits& limits) {
  const auto start = Clock::now();
  CountResult result;
  BacktrackEngine engine(p, text, limits);
  engine.run(
      [&](const std::vector<int>&) {
        ++result.count;
        return true;
      },
      result.stats);
  result.stats.elapsed_ms = ms_since(start);
  return result;
}

std::vector<std::vector<int>> enumerate_occurrences(const Pattern& p,
                                                    const Permutation& text,
                                                    std::size_t max_results,
                                                    const SearchLimits& limits) {
  std::vector<std::vector<int>> out;
  if (max_results == 0) return out;
  MatchStats stats;
  BacktrackEngine engine(p, text, limits);
  engine.run(
      [&](const std::vector<int>& positions) {
        out.push_back(positions);
        return out.size() < max_results;
      },
      stats);
  return out;
}

MatchResult match_consecutive(const ConsecutivePattern& p,
                              const Permutation& text) {
  const auto start = Clock::now();
  MatchResult result;
  const int k = p.perm.size();
  const int n = text.size();
  std::vector<int> pred, succ;
  prefix_bounds(p.perm, pred, succ);
  for (int s = 1; k <= n && s + k - 1 <= n; ++s) {
    bool ok = true;
    for (int j = 2; j <= k && ok; ++j) {
      ++result.stats.nodes;
      const int v = text.at(s + j - 1);
      if (const int e = pred[static_cast<std::size_t>(j)];
          e && !(text.at(s + e - 1) < v)) {
        ok = false;
      }
      if (const int e = succ[static_cast<std::size_t>(j)];
          e && !(v < text.at(s + e - 1))) {
        ok = false;
      }
    }
    if (ok) {
      std::vector<int> positions(static_cast<std::size_t>(k));
      std::iota(positions.begin(), positions.end(), s);
      result.found = true;
      result.witness = matching_from_positions(p.perm, text, positions);
      break;
    }
  }
  result.stats.elapsed_ms = ms_since(start);
  return result;
}

MatchResult match_boxed(const BoxedPattern& p, const Permutation& text) {
  const auto start = Clock::now();
  MatchResult result;
  const int k = p.perm.size();
  const int n = text.size();
  const int slot_min = p.perm.position_of(1);
  const int slot_max = p.perm.position_of(k);
  std::vector<int> pred, succ;
  prefix_bounds(p.perm, pred, succ);

  // One value window [i, j] at a time. The window elements in text order
  // are kept incrementally sorted by position; the candidate occurrence
  // is pinned by where value i must land, so each pair costs one
  // order-isomorphism check.
  std::vector<int> win;  // positions of values i..j, ascending
  for (int i = 1; k <= n && i + k - 1 <= n; ++i) {
    win.clear();
    for (int v = i; v < i + k - 1; ++v) {
      win.insert(std::lower_bound(win.begin(), win.end(), text.position_of(v)),
                 text.position_of(v));
    }
    for (int j = i + k - 1; j <= n && !result.found; ++j) {
      win.insert(std::lower_bound(win.begin(), win.end(), text.position_of(j)),
                 text.position_of(j));
      ++result.stats.nodes;
      const int m = j - i + 1;
      const int at = static_cast<int>(
          std::lower_bound(win.begin(), win.end(), text.position_of(i)) -
          win.begin());  // index of value i in the window, 0-based
      const int begin = at - (slot_min - 1);
      if (begin < 0 || begin + k > m) continue;
      if (text.at(win[static_cast<std::size_t>(begin + slot_max - 1)]) != j) {
        continue;
      }
      bool ok = true;
      for (int jj = 2; jj <= k && ok; ++jj) {
        const int v = text.at(win[static_cast<std::size_t>(begin + jj - 1)]);
        if (const int e = pred[static_cast<std::size_t>(jj)];
            e && !(text.at(win[static_cast<std::size_t>(begin + e - 1)]) < v)) {
          ok = false;
        }
        if (const int e = succ[static_cast<std::size_t>(jj)];
            e && !(v < text.at(win[static_cast<std::size_t>(begin + e - 1)]))) {
          ok = false;
        }
      }
      if (ok) {
        const std::vector<int> positions(win.begin() + begin,
                                         win.begin() + begin + k);
        result.found = true;
        result.witness = matching_from_positions(p.perm, text, positions);
      }
    }
    if (result.found) break;
  }
  result.stats.elapsed_ms = ms_since(start);
  return result;
}

MatchResult match_identity(int k, const Permutation& text) {
  const auto start = Clock::now();
  if (k < 1) throw std::invalid_argument("pattern length must be positive");
  MatchResult result;
  const int n = text.size();
  // patience piles: tail value/position per length, parent links for the
  // witness chain
  std::vector<int> tail_val, tail_pos;
  std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n && k <= n; ++i) {
    ++result.stats.nodes;
    const int v = text.at(i);
    const auto it = std::lower_bound(tail_val.begin(), tail_val.end(), v);
    const auto r = static_cast<std::size_t>(it - tail_val.begin());
    parent[static_cast<std::size_t>(i)] =
        r == 0 ? 0 : tail_pos[r - 1];
    if (it == tail_val.end()) {
      tail_val.push_back(v);
      tail_pos.push_back(i);
    } else {
      *it = v;
      tail_pos[r] = i;
    }
    if (static_cast<int>(tail_val.size()) >= k &&
        static_cast<int>(r) == k - 1) {
      std::vector<int> positions(static_cast<std::size_t>(k));
      int cur = i;
      for (int slot = k; slot >= 1; --slot) {
        positions[static_cast<std::size_t>(slot) - 1] = cur;
        cur = parent[static_cast<std::size_t>(cur)];
      }
      std::vector<int> identity(static_cast<std::size_t>(k));
      std::iota(identity.begin(), identity.end(), 1);
      result.found = true;
      result.witness = matching_from_positions(Permutation(identity), text,
                                               positions);
      break;
    }
  }
  result.stats.elapsed_ms = ms_since(start);
  return result;
}

namespace {

struct SepNode {
  int left = -1, right = -1;
  bool skew = false;
  int slot = 0;  // leaves: pattern position
};

// Greedy first-split construction. Returns -1 when the range has no
// bottom/top interval prefix, i.e. the permutation is not separable.
int build_separating(const Permutation& p, int lo, int hi,
                     std::vector<SepNode>& nodes) {
  if (lo == hi) {
    nodes.push_back(SepNode{-1, -1, false, lo});
    return static_cast<int>(nodes.size()) - 1;
  }
  int vmin = p.at(lo), vmax = p.at(lo);
  for (int i = lo + 1; i <= hi; ++i) {
    vmin = std::min(vmin, p.at(i));
    vmax = std::max(vmax, p.at(i));
  }
  int pmin = p.at(lo), pmax = p.at(lo);
  for (int m = lo; m < hi; ++m) {
    if (m > lo) {
      pmin = std::min(pmin, p.at(m));
      pmax = std::max(pmax, p.at(m));
    }
    const int len = m - lo + 1;
    if (pmax - pmin != len - 1) continue;
    const bool bottom = pmin == vmin;
    const bool top = pmax == vmax;
    if (!bottom && !top) continue;
    const int left = build_separating(p, lo, m, nodes);
    if (left < 0) return -1;
    const int right = build_separating(p, m + 1, hi, nodes);
    if (right < 0) return -1;
    nodes.push_back(SepNode{left, right, top, 0});
    return static_cast<int>(nodes.size()) - 1;
  }
  return -1;
}

}  // namespace

bool is_separable(const Permutation& p) {
  std::vector<SepNode> nodes;
  return build_separating(p, 1, p.size(), nodes) >= 0;
}

MatchResult match_separable(const Permutation& p, const Permutation& text) {
  const auto start = Clock::now();
  std::vector<SepNode> nodes;
  const int root = build_separating(p, 1, p.size(), nodes);
  if (root < 0) {
    throw std::invalid_argument("pattern is not separable");
  }
  const int k = p.size();
  const int n = text.size();
  MatchResult result;
  if (k > n) {
    result.stats.elapsed_ms = ms_since(start);
    return result;
  }
  // Tables are (i1, i2, v1) -> minimal achievable maximum value, INF = n+1
  // meaning impossible. All node tables stay alive for the witness walk.
  const long long per_table = static_cast<long long>(n) * n * (n + 1);
  if (per_table * static_cast<long long>(nodes.size()) > 64'000'000LL) {
    throw std::invalid_argument(
        "separable matcher limits exceeded (pattern/text too large)");
  }
  const int INF = n + 1;
  auto idx = [n](int i1, int i2, int v1) {
    return (static_cast<std::size_t>(i1 - 1) * n +
            static_cast<std::size_t>(i2 - 1)) *
               (n + 1) +
           static_cast<std::size_t>(v1 - 1);
  };
  std::vector<std::vector<int16_t>> table(nodes.size());
  for (std::size_t node = 0; node < nodes.size(); ++node) {
    auto& f = table[node];
    f.assign(static_cast<std::size_t>(per_table), static_cast<int16_t>(INF));
    const SepNode& nd = nodes[node];
    if (nd.left < 0) {
      // single element: cheapest value >= v1 inside [i1, i2]
      for (int i1 = 1; i1 <= n; ++i1) {
        for (int i2 = i1; i2 <= n; ++i2) {
          for (int v1 = 1; v1 <= n + 1; ++v1) {
            ++result.stats.nodes;
            int best = i2 > i1 ? f[idx(i1, i2 - 1, v1)] : INF;
            if (text.at(i2) >= v1) best = std::min(best, text.at(i2));
            f[idx(i1, i2, v1)] = static_cast<int16_t>(best);
          }
        }
      }
      continue;
    }
    const auto& fa = table[static_cast<std::size_t>(nd.left)];
    const auto& fb = table[static_cast<std::size_t>(nd.right)];
    for (int i1 = 1; i1 <= n; ++i1) {
      for (int i2 = i1; i2 <= n; ++i2) {
        for (int v1 = 1; v1 <= n + 1; ++v1) {
          int best = INF;
          for (int m = i1; m < i2; ++m) {
            ++result.stats.nodes;
            if (!nd.skew) {
              const int a = fa[idx(i1, m, v1)];
              if (a >= INF) continue;
              best = std::min(best, static_cast<int>(fb[idx(m + 1, i2, a + 1)]));
            } else {
              const int b = fb[idx(m + 1, i2, v1)];
              if (b >= INF) continue;
              best = std::min(best, static_cast<int>(fa[idx(i1, m, b + 1)]));
            }
          }
          f[idx(i1, i2, v1)] = static_cast<int16_t>(best);
        }
      }
    }
  }

  const int achieved = table[static_cast<std::size_t>(root)][idx(1, n, 1)];
  if (achieved <= n) {
    // walk back down, re-finding a split that reproduces each value
    std::vector<int> positions(static_cast<std::size_t>(k), 0);
    std::function<void(int, int, int, int, int)> rebuild =
        [&](int node, int i1, int i2, int v1, int val) {
          const SepNode& nd = nodes[static_cast<std::size_t>(node)];
          if (nd.left < 0) {
            positions[static_cast<std::size_t>(nd.slot) - 1] =
                text.position_of(val);
            return;
          }
          const auto& fa = table[static_cast<std::size_t>(nd.left)];
          const auto& fb = table[static_cast<std::size_t>(nd.right)];
          for (int m = i1; m < i2; ++m) {
            if (!nd.skew) {
              const int a = fa[idx(i1, m, v1)];
              if (a >= INF) continue;
              if (fb[idx(m + 1, i2, a + 1)] == val) {
                rebuild(nd.left, i1, m, v1, a);
                rebuild(nd.right, m + 1, i2, a + 1, val);
                return;
              }
            } else {
              const int b = fb[idx(m + 1, i2, v1)];
              if (b >= INF) continue;
              if (fa[idx(i1, m, b + 1)] == val) {
                rebuild(nd.right, m + 1, i2, v1, b);
                rebuild(nd.left, i1, m, b + 1, val);
                return;
              }
            }
          }
          throw std::logic_error("witness walk lost its split");
        };
    rebuild(root, 1, n, 1, achieved);
    result.found = true;
    result.witness = matching_from_positions(p, text, positions);
  }
  result.stats.elapsed_ms = ms_since(start);
  return result;
}

namespace {

bool is_identity(const Permutation& p) {
  for (int j = 1; j <= p.size(); ++j) {
    if (p.at(j) != j) return false;
  }
  return true;
}

}  // namespace

MatchResult match(const Pattern& p, const Permutation& text,
                  const MatchOptions& options) {
  switch (options.algo) {
    case Algo::auto_:
      switch (p.kind()) {
        case Pattern::Kind::consecutive:
          return match_consecutive(std::get<ConsecutivePattern>(p.alt()),
                                   text);
        case Pattern::Kind::boxed:
          return match_boxed(std::get<BoxedPattern>(p.alt()), text);
        case Pattern::Kind::classical: {
          if (is_identity(p.perm())) return match_identity(p.k(), text);
          if (options.use_separable && p.k() <= 12 && text.size() <= 80 &&
              is_separable(p.perm())) {
            return match_separable(p.perm(), text);
          }
          return match_backtrack(p, text, options.limits);
        }
        default:
          return match_backtrack(p, text, options.limits);
      }
    case Algo::exhaustive:
      return match_exhaustive(p, text, options.limits);
    case Algo::backtrack:
      return match_backtrack(p, text, options.limits);
    case Algo::consecutive:
      if (p.kind() != Pattern::Kind::consecutive) {
        throw std::invalid_argument(
            "consecutive matcher requires a consecutive pattern");
      }
      return match_consecutive(std::get<ConsecutivePattern>(p.alt()), text);
    case Algo::boxed:
      if (p.kind() != Pattern::Kind::boxed) {
        throw std::invalid_argument("boxed matcher requires a boxed pattern");
      }
      return match_boxed(std::get<BoxedPattern>(p.alt()), text);
    case Algo::lis:
      if (p.kind() != Pattern::Kind::classical || !is_identity(p.perm())) {
        throw std::invalid_argument(
            "LIS matcher requires the classical identity pattern");
      }
      return match_identity(p.k(), text);
    case Algo::separable:
      if (p.kind() != Pattern::Kind::classical) {
        throw std::invalid_argument(
            "separable matcher requires a classical pattern");
      }
      return match_separable(p.perm(), text);
  }
  throw std::logic_error("unreachable");
}

PopPattern::PopPattern(int k, const std::vector<std::pair<int, int>>& relations)
    : k_(k) {
  if (k < 1) throw std::invalid_argument("POP needs at least one slot");
  std::vector<std::vector<bool>> adj(
      static_cast<std::size_t>(k) + 1,
      std::vector<bool>(static_cast<std::size_t>(k) + 1, false));
  for (const auto& [a, b] : relations) {
    if (a < 1 || a > k || b < 1 || b > k) {
      throw std::invalid_argument("POP relation slot out of [1,k]");
    }
    if (a == b) throw std::invalid_argument("POP relation is reflexive");
    adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
  }
  for (int mid = 1; mid <= k; ++mid) {
    for (int a = 1; a <= k; ++a) {
      if (!adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(mid)]) {
        continue;
      }
      for (int b = 1; b <= k; ++b) {
        if (adj[static_cast<std::size_t>(mid)][static_cast<std::size_t>(b)]) {
          adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
        }
      }
    }
  }
  for (int a = 1; a <= k; ++a) {
    if (adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)]) {
      throw std::invalid_argument("POP relations contain a cycle");
    }
    for (int b = 1; b <= k; ++b) {
      if (adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
        closed_.emplace_back(a, b);
      }
    }
  }
}

bool PopPattern::compatible(const Permutation& q) const {
  if (q.size() != k_) {
    throw std::invalid_argument("completion length differs from POP");
  }
  for (const auto& [a, b] : closed_) {
    if (q.at(a) >= q.at(b)) return false;
  }
  return true;
}

namespace {

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

int parse_int_tok(std::string_view tok) {
  tok = trim_view(tok);
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("not an integer: '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

PopPattern parse_pop(std::string_view line) {
  const auto colon = line.find(':');
  if (colon == std::string_view::npos || trim_view(line.substr(0, colon)) != "pop") {
    throw ParseError("POP line must start with 'pop:'");
  }
  std::string_view rest = line.substr(colon + 1);
  std::optional<int> k;
  std::vector<std::pair<int, int>> relations;
  bool saw_lt = false;
  while (true) {
    const auto semi = rest.find(';');
    const std::string_view clause =
        trim_view(semi == std::string_view::npos ? rest : rest.substr(0, semi));
    if (!clause.empty()) {
      const auto eq = clause.find('=');
      if (eq == std::string_view::npos) {
        throw ParseError("expected key=value, got '" + std::string(clause) +
                         "'");
      }
      const std::string_view key = trim_view(clause.substr(0, eq));
      const std::string_view value = trim_view(clause.substr(eq + 1));
      if (key == "k") {
        if (k) throw ParseError("duplicate k clause");
        k = parse_int_tok(value);
      } else if (key == "lt") {
        if (saw_lt) throw ParseError("duplicate lt clause");
        saw_lt = true;
        std::size_t i = 0;
        auto skip_ws = [&] {
          while (i < value.size() &&
                 std::isspace(static_cast<unsigned char>(value[i]))) {
            ++i;
          }
        };
        auto expect = [&](char c) {
          skip_ws();
          if (i >= value.size() || value[i] != c) {
            throw ParseError(std::string("expected '") + c +
                             "' in lt list");
          }
          ++i;
        };
        auto read_int = [&] {
          skip_ws();
          std::size_t j = i;
          if (j < value.size() && (value[j] == '-' || value[j] == '+')) ++j;
          while (j < value.size() &&
                 std::isdigit(static_cast<unsigned char>(value[j]))) {
            ++j;
          }
          const int v = parse_int_tok(value.substr(i, j - i));
          i = j;
          return v;
        };
        while (true) {
          expect('(');
          const int a = read_int();
          expect(',');
          const int b = read_int();
          expect(')');
          relations.emplace_back(a, b);
          skip_ws();
          if (i >= value.size()) break;
          expect(',');
        }
      } else {
        throw ParseError("unknown clause key '" + std::string(key) + "'");
      }
    }
    if (semi == std::string_view::npos) break;
    rest = rest.substr(semi + 1);
  }
  if (!k) throw ParseError("POP line lacks a k clause");
  try {
    return PopPattern(*k, relations);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string print_pop(const PopPattern& p) {
  std::ostringstream out;
  out << "pop: k=" << p.k();
  if (!p.relations().empty()) {
    out << "; lt=";
    bool first = true;
    for (const auto& [a, b] : p.relations()) {
      if (!first) out << ',';
      out << '(' << a << ',' << b << ')';
      first = false;
    }
  }
  return out.str();
}

std::vector<Permutation> linear_extensions(const PopPattern& p) {
  if (p.k() > 8) {
    throw std::invalid_argument("POP completions are capped at k <= 8");
  }
  std::vector<int> v(static_cast<std::size_t>(p.k()));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    Permutation q(v);
    if (p.compatible(q)) out.push_back(std::move(q));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

MatchResult match_pop(const PopPattern& p, const Permutation& text,
                      const SearchLimits& limits) {
  const auto start = Clock::now();
  MatchResult result;
  for (const Permutation& q : linear_extensions(p)) {
    MatchResult sub = match_backtrack(Pattern(ClassicalPattern{q}), text,
                                      limits);
    result.stats.nodes += sub.stats.nodes;
    result.stats.rect_queries += sub.stats.rect_queries;
    if (sub.found) {
      result.found = true;
      result.witness = std::move(sub.witness);
      break;
    }
    if (sub.stats.timed_out) {
      result.stats.timed_out = true;
      break;
    }
  }
  result.stats.elapsed_ms = ms_since(start);
  return result;
}

CountResult count_pop(const PopPattern& p, const Permutation& text,
                      const SearchLimits& limits) {
  const auto start = Clock::now();
  CountResult result;
  for (const Permutation& q : linear_extensions(p)) {
    const CountResult sub =
        count_occurrences(Pattern(ClassicalPattern{q}), text, limits);
    result.count += sub.count;
    result.stats.nodes += sub.stats.nodes;
    result.stats.rect_queries += sub.stats.rect_queries;
    if (sub.stats.timed_out) {
      result.stats.timed_out = true;
      break;
    }
  }
  result.stats.elapsed_ms = ms_since(start);
  return result;
}

}  // namespace permatch
