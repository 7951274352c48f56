#pragma once

// Test-side reference implementations, written straight from the class
// definitions and kept deliberately naive. Library code must agree with
// these, never the other way around.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "permatch/pattern.hpp"
#include "permatch/permutation.hpp"

namespace checkers {

using permatch::Cell;
using permatch::Pattern;
using permatch::Permutation;

// Subsequence of text at positions (1-based, increasing) is order-iso to
// the pattern permutation.
inline bool classical_at(const Permutation& p, const Permutation& t,
                         const std::vector<int>& pos) {
  const int k = p.size();
  if (static_cast<int>(pos.size()) != k) return false;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if ((p.at(a + 1) < p.at(b + 1)) != (t.at(pos[a]) < t.at(pos[b]))) {
        return false;
      }
    }
  }
  return true;
}

// Sorted values of the matched subsequence.
inline std::vector<int> matched_values_sorted(const Permutation& t,
                                              const std::vector<int>& pos) {
  std::vector<int> w;
  for (int p : pos) w.push_back(t.at(p));
  std::sort(w.begin(), w.end());
  return w;
}

inline bool vincular_at(const Permutation& p, const std::set<int>& cols,
                        const Permutation& t, const std::vector<int>& pos) {
  if (!classical_at(p, t, pos)) return false;
  const int k = p.size();
  const int n = t.size();
  for (int c : cols) {
    if (c == 0) {
      if (pos.front() != 1) return false;
    } else if (c == k) {
      if (pos.back() != n) return false;
    } else {
      if (pos[c] != pos[c - 1] + 1) return false;
    }
  }
  return true;
}

inline bool bivincular_at(const Permutation& p, const std::set<int>& cols,
                          const std::set<int>& rows, const Permutation& t,
                          const std::vector<int>& pos) {
  if (!vincular_at(p, cols, t, pos)) return false;
  const int k = p.size();
  const int n = t.size();
  const std::vector<int> w = matched_values_sorted(t, pos);
  for (int r : rows) {
    if (r == 0) {
      if (w.front() != 1) return false;
    } else if (r == k) {
      if (w.back() != n) return false;
    } else {
      if (w[r] != w[r - 1] + 1) return false;
    }
  }
  return true;
}

inline bool mesh_at(const Permutation& p, const std::set<Cell>& cells,
                    const Permutation& t, const std::vector<int>& pos) {
  if (!classical_at(p, t, pos)) return false;
  const int k = p.size();
  const int n = t.size();
  const std::vector<int> w = matched_values_sorted(t, pos);
  auto pos_bound = [&](int x) {  // x in [0, k]
    return x == 0 ? 0 : pos[x - 1];
  };
  auto pos_bound_hi = [&](int x) { return x == k ? n + 1 : pos[x]; };
  auto val_bound = [&](int y) { return y == 0 ? 0 : w[y - 1]; };
  auto val_bound_hi = [&](int y) { return y == k ? n + 1 : w[y]; };
  for (const auto& [x, y] : cells) {
    for (int q = pos_bound(x) + 1; q < pos_bound_hi(x); ++q) {
      const int v = t.at(q);
      if (v > val_bound(y) && v < val_bound_hi(y)) return false;
    }
  }
  return true;
}

inline bool boxed_at(const Permutation& p, const Permutation& t,
                     const std::vector<int>& pos) {
  if (!classical_at(p, t, pos)) return false;
  const std::vector<int> w = matched_values_sorted(t, pos);
  for (int q = pos.front() + 1; q < pos.back(); ++q) {
    if (std::find(pos.begin(), pos.end(), q) != pos.end()) continue;
    const int v = t.at(q);
    if (v > w.front() && v < w.back()) return false;
  }
  return true;
}

inline bool consecutive_at(const Permutation& p, const Permutation& t,
                           const std::vector<int>& pos) {
  if (!classical_at(p, t, pos)) return false;
  for (std::size_t j = 1; j < pos.size(); ++j) {
    if (pos[j] != pos[j - 1] + 1) return false;
  }
  return true;
}

inline bool occurrence_at(const Pattern& p, const Permutation& t,
                          const std::vector<int>& pos) {
  using permatch::BivincularPattern;
  using permatch::BoxedPattern;
  using permatch::ClassicalPattern;
  using permatch::ConsecutivePattern;
  using permatch::MeshPattern;
  using permatch::VincularPattern;
  switch (p.kind()) {
    case Pattern::Kind::classical:
      return classical_at(p.perm(), t, pos);
    case Pattern::Kind::vincular: {
      const auto& q = std::get<VincularPattern>(p.alt());
      return vincular_at(q.perm, q.cols, t, pos);
    }
    case Pattern::Kind::bivincular: {
      const auto& q = std::get<BivincularPattern>(p.alt());
      return bivincular_at(q.perm, q.cols, q.rows, t, pos);
    }
    case Pattern::Kind::mesh: {
      const auto& q = std::get<MeshPattern>(p.alt());
      return mesh_at(q.perm, q.cells, t, pos);
    }
    case Pattern::Kind::boxed:
      return boxed_at(p.perm(), t, pos);
    case Pattern::Kind::consecutive:
      return consecutive_at(p.perm(), t, pos);
  }
  return false;
}

// Visits every k-subset of {1..n} in lexicographic order until fn returns
// false (stop) or the subsets run out.
inline void for_each_combination(
    int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
  if (k > n || k <= 0) return;
  std::vector<int> c(static_cast<std::size_t>(k));
  std::iota(c.begin(), c.end(), 1);
  while (true) {
    if (!fn(c)) return;
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
    if (i < 0) return;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

// First witness in lexicographic position order, if any.
inline std::optional<std::vector<int>> brute_first_witness(
    const Pattern& p, const Permutation& t) {
  std::optional<std::vector<int>> found;
  for_each_combination(t.size(), p.k(), [&](const std::vector<int>& pos) {
    if (occurrence_at(p, t, pos)) {
      found = pos;
      return false;
    }
    return true;
  });
  return found;
}

inline long long brute_count(const Pattern& p, const Permutation& t) {
  long long count = 0;
  for_each_combination(t.size(), p.k(), [&](const std::vector<int>& pos) {
    if (occurrence_at(p, t, pos)) ++count;
    return true;
  });
  return count;
}

// POP semantics straight from the relations: value at slot a below value
// at slot b. Uses the raw (unclosed) relation list.
inline bool pop_at(const std::vector<std::pair<int, int>>& relations,
                   const Permutation& t, const std::vector<int>& pos) {
  for (const auto& [a, b] : relations) {
    if (!(t.at(pos[static_cast<std::size_t>(a) - 1]) <
          t.at(pos[static_cast<std::size_t>(b) - 1]))) {
      return false;
    }
  }
  return true;
}

inline long long brute_pop_count(
    int k, const std::vector<std::pair<int, int>>& relations,
    const Permutation& t) {
  long long count = 0;
  for_each_combination(t.size(), k, [&](const std::vector<int>& pos) {
    if (pop_at(relations, t, pos)) ++count;
    return true;
  });
  return count;
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace checkers
