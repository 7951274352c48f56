#pragma once

#include <chrono>
#include <optional>

#include "permatch/pattern.hpp"

namespace permatch {

// Work counters every matcher fills in. `nodes` counts algorithm-specific
// units (search candidates, windows, table cells); `rect_queries` counts
// O(1) rectangle lookups. A matcher that hits its deadline reports
// timed_out = true and found = false, which callers must treat as
// "undetermined", not "absent".
struct MatchStats {
  long long nodes = 0;
  long long rect_queries = 0;
  double elapsed_ms = 0.0;
  bool timed_out = false;
};

struct MatchResult {
  bool found = false;
  std::optional<Matching> witness;
  MatchStats stats;
};

struct CountResult {
  long long count = 0;
  MatchStats stats;
};

struct SearchLimits {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::optional<long long> max_nodes;
};

// Reference matcher: walks k-subsets of positions in lexicographic order
// and tests each with the rectangle grid. Exponential; small inputs only.
MatchResult match_exhaustive(const Pattern& p, const Permutation& text,
                             const SearchLimits& limits = {});

// General matcher for every class, via the unified mesh view. Depth-first
// over pattern slots in position order with order-isomorphism pruning;
// fully shaded columns and rows become forced positions and forced
// values, remaining cells become rectangle-emptiness checks issued as
// soon as both their intervals are pinned. Finds witnesses in
// lexicographic position order.
MatchResult match_backtrack(const Pattern& p, const Permutation& text,
                            const SearchLimits& limits = {});

// Sliding-window matcher for consecutive patterns, O((n-k+1) k).
MatchResult match_consecutive(const ConsecutivePattern& p,
                              const Permutation& text);

// Boxed matcher, O(n^3): for every value window [i, j] the candidate
// occurrence is a single run of j-i+1-window elements pinned by where
// value i must sit, so interior emptiness never needs explicit checking.
MatchResult match_boxed(const BoxedPattern& p, const Permutation& text);

// Longest-increasing-subsequence matcher for the identity pattern
// 1 2 ... k, O(n log k): patience piles with parent links, stopping as
// soon as pile k exists.
MatchResult match_identity(int k, const Permutation& text);

// True iff p avoids both 3 1 4 2 and 2 4 1 3, i.e. p has a separating
// tree. O(k^2).
bool is_separable(const Permutation& p);

// Polynomial matcher for separable classical patterns: a min-max dynamic
// program over the separating tree with states (range, value floor),
// O(k n^4) time. Tables for all tree nodes are retained to rebuild the
// witness, so the matcher rejects instances where that storage would be
// excessive; the automatic dispatcher only routes here for n <= 80 and
// k <= 12. Throws std::invalid_argument for non-separable patterns.
MatchResult match_separable(const Permutation& p, const Permutation& text);

enum class Algo {
  auto_,
  exhaustive,
  backtrack,
  consecutive,
  boxed,
  lis,
  separable,
};

struct MatchOptions {
  Algo algo = Algo::auto_;
  bool use_separable = true;  // let auto_ pick the separable DP when it fits
  SearchLimits limits;
};

// Dispatcher. auto_ picks: consecutive and boxed classes get their
// dedicated matchers, a classical identity pattern gets the LIS matcher,
// classical separable patterns within the size thresholds get the
// separable DP, and everything else goes to the backtracker. Forcing an
// algorithm unfit for the pattern class raises std::invalid_argument.
MatchResult match(const Pattern& p, const Permutation& text,
                  const MatchOptions& options = {});

// Number of occurrences / every witness position list, in lexicographic
// position order. enumerate stops after max_results lists.
CountResult count_occurrences(const Pattern& p, const Permutation& text,
                              const SearchLimits& limits = {});
std::vector<std::vector<int>> enumerate_occurrences(
    const Pattern& p, const Permutation& text,
    std::size_t max_results = static_cast<std::size_t>(-1),
    const SearchLimits& limits = {});

// Partially ordered pattern: k slots and strict relations (a, b) meaning
// "the value matched at slot a is below the value matched at slot b".
// Relations are closed transitively at construction; cycles raise
// std::invalid_argument.
class PopPattern {
 public:
  PopPattern(int k, const std::vector<std::pair<int, int>>& relations);

  int k() const { return k_; }
  // transitively closed, deduplicated, sorted
  const std::vector<std::pair<int, int>>& relations() const {
    return closed_;
  }
  // does the classical pattern q satisfy every relation?
  bool compatible(const Permutation& q) const;

  bool operator==(const PopPattern&) const = default;

 private:
  int k_ = 0;
  std::vector<std::pair<int, int>> closed_;
};

// Grammar: 'pop: k=INT' ('; lt=' '(' a ',' b ')' (',' '(' a ',' b ')')*)?
PopPattern parse_pop(std::string_view line);
std::string print_pop(const PopPattern& p);

// All classical patterns of length k compatible with the relations, in
// lexicographic order. Capped at k <= 8; larger k raises
// std::invalid_argument.
std::vector<Permutation> linear_extensions(const PopPattern& p);

// A text contains a POP iff it contains any compatible completion; the
// count is the sum over completions, which partition the occurrences.
MatchResult match_pop(const PopPattern& p, const Permutation& text,
                      const SearchLimits& limits = {});
CountResult count_pop(const PopPattern& p, const Permutation& text,
                      const SearchLimits& limits = {});

}  // namespace permatch
