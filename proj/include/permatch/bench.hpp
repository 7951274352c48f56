#pragma once

#include <string>
#include <vector>

#include "permatch/permutation.hpp"

namespace permatch {

struct BenchRow {
  int n = 0;
  long long nodes = 0;  // matcher work units; deterministic per (family, n)
  double ms = 0.0;
};

// One timing family: a fixed pattern against size-parameterized texts
// built so the matcher never finds an occurrence and must do its full
// worst-case work. slope is the least-squares log-log fit of ms vs n
// (left 0 when fewer than two sizes were timed).
struct BenchReport {
  std::string family;
  int k = 0;
  std::vector<BenchRow> rows;
  double slope = 0.0;
};

// Least-squares slope of log(ms) against log(n). Needs >= 2 rows with
// positive n and ms; throws std::invalid_argument otherwise.
double fit_loglog_slope(const std::vector<BenchRow>& rows);

// Deterministic worst-case texts.
//
// Zigzag: odd positions carry the top half ascending, even positions the
// bottom half ascending, so every ascending run has length 2 and a long
// consecutive identity pattern never matches.
Permutation bench_text_zigzag(int n);

// Descending blocks: ceil(sqrt(n)) chunks in decreasing value ranges,
// ascending inside each chunk, so the longest increasing subsequence is
// the largest chunk (about sqrt(n)).
Permutation bench_text_descending_blocks(int n);

// family is one of:
//   "consecutive"  identity of length 10 vs zigzag texts
//   "boxed"        boxed identity of length 8 vs reversed identity texts
//   "lis"          identity of length 2000 vs descending-block texts
//   "backtrack"    blown-up 2 4 1 3 vs blown-up zigzag texts (which avoid
//                  it), driving the general matcher; reporting only
// Empty sizes pick per-family defaults. Each point is repeated until at
// least min_sample_ms of work is accumulated and averaged. Throws
// std::invalid_argument for an unknown family and std::logic_error if a
// matcher ever reports a find (the texts are built to contain none).
BenchReport bench_family(const std::string& family,
                         std::vector<int> sizes = {},
                         double min_sample_ms = 200.0);

}  // namespace permatch
