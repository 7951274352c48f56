#pragma once

#include <chrono>
#include <vector>

#include "permatch/match.hpp"

// Internal helpers shared by the search implementations. Not installed.
namespace permatch::detail {

using Clock = std::chrono::steady_clock;

inline double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

inline bool limits_hit(const SearchLimits& limits, const MatchStats& stats) {
  if (limits.max_nodes && stats.nodes >= *limits.max_nodes) return true;
  if (limits.deadline && Clock::now() >= *limits.deadline) return true;
  return false;
}

// Slot j's value predecessor/successor among earlier slots: the earlier
// slot whose pattern value is closest below/above p(j). 0 means none.
inline void prefix_bounds(const Permutation& p, std::vector<int>& pred,
                          std::vector<int>& succ) {
  const int k = p.size();
  pred.assign(static_cast<std::size_t>(k) + 1, 0);
  succ.assign(static_cast<std::size_t>(k) + 1, 0);
  for (int j = 1; j <= k; ++j) {
    int best_lo = 0, best_hi = 0;
    for (int e = 1; e < j; ++e) {
      if (p.at(e) < p.at(j)) {
        if (best_lo == 0 || p.at(e) > p.at(best_lo)) best_lo = e;
      } else {
        if (best_hi == 0 || p.at(e) < p.at(best_hi)) best_hi = e;
      }
    }
    pred[static_cast<std::size_t>(j)] = best_lo;
    succ[static_cast<std::size_t>(j)] = best_hi;
  }
}

}  // namespace permatch::detail
