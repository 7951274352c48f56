#pragma once

#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permatch {

// Raised for malformed or inconsistent input data (text lines, pattern
// strings, graph files, ...). The CLI maps it to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A permutation of {1..n}, 1-based. Immutable after construction; the
// inverse table is kept alongside so position lookups are O(1).
class Permutation {
 public:
  Permutation() = default;  // empty; only valid as a placeholder
  explicit Permutation(std::vector<int> values);

  int size() const { return static_cast<int>(vals_.size()); }
  bool empty() const { return vals_.empty(); }

  // value at position pos, 1-based
  int at(int pos) const { return vals_[static_cast<std::size_t>(pos) - 1]; }
  // position holding `value`, 1-based
  int position_of(int value) const {
    return inv_[static_cast<std::size_t>(value) - 1];
  }

  const std::vector<int>& values() const { return vals_; }
  std::string str() const;

  bool operator==(const Permutation& other) const {
    return vals_ == other.vals_;
  }

 private:
  std::vector<int> vals_;
  std::vector<int> inv_;
};

// Parses one whitespace-separated line of integers as a permutation of
// {1..n}. Rejects empty lines, non-integer tokens, out-of-range values
// and duplicates.
Permutation parse_permutation(std::string_view line);

Permutation reverse(const Permutation& p);     // p^r(i) = p(n+1-i)
Permutation complement(const Permutation& p);  // p^c(i) = n+1-p(i)
Permutation inverse(const Permutation& p);     // p^-1(p(i)) = i

// Maximal monotone contiguous segment. Adjacent runs share their boundary
// element, so begin of one run equals end of the previous.
struct Run {
  int begin = 0;  // first position, 1-based
  int end = 0;    // last position, inclusive
  bool ascending = false;
  int length() const { return end - begin + 1; }
  bool operator==(const Run&) const = default;
};

std::vector<Run> runs(const Permutation& p);
int lrun(const Permutation& p);  // length of the longest run

// True iff a and b have the same length and the same relative order at
// every index pair. Entries must be distinct within each sequence.
bool is_order_isomorphic(std::span<const int> a, std::span<const int> b);

// Exact rational, normalized (den > 0, gcd(|num|, den) = 1). Only the
// little arithmetic the reductions need.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den <
           static_cast<__int128>(b.num) * a.den;
  }
  Rational operator+(const Rational& other) const;
  std::string str() const;  // "19/10", or "19" when den == 1
};

using RationalSeq = std::vector<Rational>;

// Replaces each entry by its rank (1 = smallest). Entries must be
// distinct; duplicates raise ParseError.
Permutation standardize(const RationalSeq& seq);

// Prefix-count table over a permutation: counts(x, y) = number of elements
// with position <= x and value <= y, for x, y in [0, n]. Supports counting
// inside open rectangles in O(1), which is what the shaded-cell test of
// mesh patterns needs.
class DominanceGrid {
 public:
  explicit DominanceGrid(const Permutation& text);

  int size() const { return n_; }

  // Number of elements with pos_lo < pos < pos_hi and val_lo < val < val_hi.
  // All four bounds must lie in [0, n+1]; inverted or empty intervals
  // simply count zero.
  int rectangle_count(int pos_lo, int pos_hi, int val_lo, int val_hi) const;

 private:
  int at(int x, int y) const {
    return c_[static_cast<std::size_t>(x) * (n_ + 1) + y];
  }
  int n_ = 0;
  std::vector<int> c_;
};

}  // namespace permatch
