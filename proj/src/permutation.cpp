#include "permatch/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace permatch {

Permutation::Permutation(std::vector<int> values) : vals_(std::move(values)) {
  if (vals_.empty()) throw ParseError("empty permutation");
  const int n = static_cast<int>(vals_.size());
  inv_.assign(vals_.size(), 0);
  for (int pos = 1; pos <= n; ++pos) {
    const int v = vals_[static_cast<std::size_t>(pos) - 1];
    if (v < 1 || v > n)
      throw ParseError("value out of range [1," + std::to_string(n) +
                       "]: " + std::to_string(v));
    if (inv_[static_cast<std::size_t>(v) - 1] != 0)
      throw ParseError("duplicate value: " + std::to_string(v));
    inv_[static_cast<std::size_t>(v) - 1] = pos;
  }
}

std::string Permutation::str() const {
  std::string out;
  for (std::size_t i = 0; i < vals_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(vals_[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view line) {
  std::vector<int> vals;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    const std::string_view tok = line.substr(i, j - i);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError("not an integer: '" + std::string(tok) + "'");
    vals.push_back(v);
    i = j;
  }
  if (vals.empty()) throw ParseError("empty permutation");
  return Permutation(std::move(vals));
}

Permutation reverse(const Permutation& p) {
  std::vector<int> v(p.values().rbegin(), p.values().rend());
  return Permutation(std::move(v));
}

Permutation complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> v;
  v.reserve(p.values().size());
  for (int x : p.values()) v.push_back(n + 1 - x);
  return Permutation(std::move(v));
}

Permutation inverse(const Permutation& p) {
  const int n = p.size();
  std::vector<int> v(p.values().size());
  for (int pos = 1; pos <= n; ++pos)
    v[static_cast<std::size_t>(p.at(pos)) - 1] = pos;
  return Permutation(std::move(v));
}

std::vector<Run> runs(const Permutation& p) {
  const int n = p.size();
  std::vector<Run> out;
  if (n == 1) {
    out.push_back(Run{1, 1, true});
    return out;
  }
  int begin = 1;
  bool asc = p.at(2) > p.at(1);
  for (int i = 2; i < n; ++i) {
    const bool next_asc = p.at(i + 1) > p.at(i);
    if (next_asc != asc) {
      out.push_back(Run{begin, i, asc});
      begin = i;  // boundary element starts the next run
      asc = next_asc;
    }
  }
  out.push_back(Run{begin, n, asc});
  return out;
}

int lrun(const Permutation& p) {
  int best = 0;
  for (const Run& r : runs(p)) best = std::max(best, r.length());
  return best;
}

bool is_order_isomorphic(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("order-isomorphism: length mismatch");
  const std::size_t n = a.size();
  std::vector<int> ia(n), ib(n);
  std::iota(ia.begin(), ia.end(), 0);
  std::iota(ib.begin(), ib.end(), 0);
  std::sort(ia.begin(), ia.end(), [&](int x, int y) { return a[x] < a[y]; });
  std::sort(ib.begin(), ib.end(), [&](int x, int y) { return b[x] < b[y]; });
  for (std::size_t r = 0; r + 1 < n; ++r) {
    if (a[ia[r]] == a[ia[r + 1]] || b[ib[r]] == b[ib[r + 1]])
      throw std::invalid_argument("order-isomorphism: duplicate entries");
  }
  return std::equal(ia.begin(), ia.end(), ib.begin());
}

namespace {
long long gcd_ll(long long a, long long b) {
  while (b) {
    const long long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}
}  // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (const long long g = gcd_ll(num, den); g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::operator+(const Rational& other) const {
  return Rational(num * other.den + other.num * den, den * other.den);
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Permutation standardize(const RationalSeq& seq) {
  if (seq.empty()) throw ParseError("empty sequence");
  const std::size_t n = seq.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return seq[a] < seq[b]; });
  for (std::size_t r = 0; r + 1 < n; ++r) {
    if (seq[idx[r]] == seq[idx[r + 1]])
      throw ParseError("duplicate value in sequence: " + seq[idx[r]].str());
  }
  std::vector<int> ranks(n);
  for (std::size_t r = 0; r < n; ++r)
    ranks[idx[r]] = static_cast<int>(r) + 1;
  return Permutation(std::move(ranks));
}

DominanceGrid::DominanceGrid(const Permutation& text) : n_(text.size()) {
  c_.assign(static_cast<std::size_t>(n_ + 1) * (n_ + 1), 0);
  for (int x = 1; x <= n_; ++x) {
    const int v = text.at(x);
    int* row = &c_[static_cast<std::size_t>(x) * (n_ + 1)];
    const int* prev = &c_[static_cast<std::size_t>(x - 1) * (n_ + 1)];
    for (int y = 0; y <= n_; ++y) row[y] = prev[y] + (v <= y ? 1 : 0);
  }
}

int DominanceGrid::rectangle_count(int pos_lo, int pos_hi, int val_lo,
                                   int val_hi) const {
  const auto in_range = [this](int b) { return b >= 0 && b <= n_ + 1; };
  if (!in_range(pos_lo) || !in_range(pos_hi) || !in_range(val_lo) ||
      !in_range(val_hi))
    throw std::invalid_argument("rectangle bounds out of [0,n+1]");
  const int p1 = std::min(pos_lo, n_);      // count positions > p1
  const int p2 = std::min(pos_hi - 1, n_);  // ... and <= p2
  const int v1 = std::min(val_lo, n_);
  const int v2 = std::min(val_hi - 1, n_);
  if (p2 < p1 || v2 < v1 || p2 < 0 || v2 < 0) return 0;
  return at(p2, v2) - at(p1, v2) - at(p2, v1) + at(p1, v1);
}

}  // namespace permatch
