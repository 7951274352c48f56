#include "permatch/bench.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "permatch/match.hpp"
#include "permatch/transform.hpp"

namespace permatch {

namespace {

Permutation identity(int k) {
  std::vector<int> v(static_cast<std::size_t>(k));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation reversed_identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(v));
}

}  // namespace

double fit_loglog_slope(const std::vector<BenchRow>& rows) {
  if (rows.size() < 2) {
    throw std::invalid_argument("slope fit needs at least two rows");
  }
  double sx = 0, sy = 0;
  for (const BenchRow& r : rows) {
    if (r.n <= 0 || r.ms <= 0) {
      throw std::invalid_argument("slope fit needs positive n and ms");
    }
    sx += std::log(static_cast<double>(r.n));
    sy += std::log(r.ms);
  }
  const double mx = sx / static_cast<double>(rows.size());
  const double my = sy / static_cast<double>(rows.size());
  double num = 0, den = 0;
  for (const BenchRow& r : rows) {
    const double dx = std::log(static_cast<double>(r.n)) - mx;
    num += dx * (std::log(r.ms) - my);
    den += dx * dx;
  }
  if (den == 0) throw std::invalid_argument("slope fit needs distinct sizes");
  return num / den;
}

Permutation bench_text_zigzag(int n) {
  const int low = n / 2;
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int j = 1; 2 * j - 1 <= n; ++j) {
    v[static_cast<std::size_t>(2 * j - 2)] = low + j;
  }
  for (int j = 1; 2 * j <= n; ++j) v[static_cast<std::size_t>(2 * j - 1)] = j;
  return Permutation(std::move(v));
}

Permutation bench_text_descending_blocks(int n) {
  const int chunks =
      static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n));
  int top = n;
  for (int c = 0; c < chunks && top > 0; ++c) {
    int len = n / chunks + (c < n % chunks ? 1 : 0);
    if (len > top) len = top;
    for (int j = top - len + 1; j <= top; ++j) v.push_back(j);
    top -= len;
  }
  return Permutation(std::move(v));
}

BenchReport bench_family(const std::string& family, std::vector<int> sizes,
                         double min_sample_ms) {
  BenchReport report;
  report.family = family;
  std::function<Permutation(int)> build;
  std::function<MatchResult(const Permutation&)> run;
  if (family == "consecutive") {
    report.k = 10;
    build = bench_text_zigzag;
    run = [p = ConsecutivePattern{identity(10)}](const Permutation& t) {
      return match_consecutive(p, t);
    };
    if (sizes.empty()) sizes = {100000, 200000, 400000};
  } else if (family == "boxed") {
    report.k = 8;
    build = reversed_identity;
    run = [p = BoxedPattern{identity(8)}](const Permutation& t) {
      return match_boxed(p, t);
    };
    if (sizes.empty()) sizes = {250, 500, 1000};
  } else if (family == "lis") {
    report.k = 2000;
    build = bench_text_descending_blocks;
    run = [](const Permutation& t) { return match_identity(2000, t); };
    if (sizes.empty()) sizes = {100000, 400000};
  } else if (family == "backtrack") {
    // The transformed text avoids the transformed pattern (the base
    // zigzag avoids 2 4 1 3), so the general matcher explores its whole
    // pruned tree every time. n counts the final text length.
    report.k = 8;
    build = [](int n) { return blowup_run2(bench_text_zigzag(n / 2)); };
    run = [p = Pattern{ClassicalPattern{
              blowup_run2(parse_permutation("2 4 1 3"))}}](
              const Permutation& t) { return match_backtrack(p, t); };
    if (sizes.empty()) sizes = {24, 48, 96};
  } else {
    throw std::invalid_argument("unknown benchmark family: " + family);
  }

  using Clock = std::chrono::steady_clock;
  for (int n : sizes) {
    const Permutation text = build(n);
    double total_ms = 0;
    long long reps = 0;
    long long nodes = 0;
    do {
      const auto start = Clock::now();
      const MatchResult r = run(text);
      total_ms += std::chrono::duration<double, std::milli>(Clock::now() -
                                                            start)
                      .count();
      ++reps;
      nodes = r.stats.nodes;
      if (r.found) {
        throw std::logic_error("benchmark text unexpectedly matched");
      }
    } while (total_ms < min_sample_ms);
    report.rows.push_back({n, nodes, total_ms / static_cast<double>(reps)});
  }
  if (report.rows.size() >= 2) report.slope = fit_loglog_slope(report.rows);
  return report;
}

}  // namespace permatch
