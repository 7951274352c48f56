#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "permatch/match.hpp"
#include "permatch/pattern.hpp"
#include "permatch/reduction.hpp"

namespace permatch {

// Seeded sampling for the verification suites. Every draw reduces a
// mt19937_64 output explicitly (no distribution objects), so a seed pins
// the exact same instances on every standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  // Uniform in [0, n); n >= 1.
  int below(int n) {
    return static_cast<int>(raw() % static_cast<std::uint64_t>(n));
  }

  // Uniform in [lo, hi], inclusive.
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

  bool chance(double prob) {
    return static_cast<double>(raw() >> 11) * 0x1.0p-53 < prob;
  }

  // Uniform permutation of 1..n via Fisher-Yates.
  Permutation permutation(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    for (int i = n - 1; i > 0; --i) {
      std::swap(v[static_cast<std::size_t>(i)],
                v[static_cast<std::size_t>(below(i + 1))]);
    }
    return Permutation(std::move(v));
  }

  // Each possible edge present independently with probability edge_prob.
  Graph graph(int vertices, double edge_prob) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 1; a <= vertices; ++a) {
      for (int b = a + 1; b <= vertices; ++b) {
        if (chance(edge_prob)) edges.emplace_back(a, b);
      }
    }
    return Graph(vertices, std::move(edges));
  }

  // Random pattern/text pair with uniform thresholds.
  SppmInstance sppm(int k, int n) {
    return SppmInstance(permutation(k), permutation(n), range(1, k),
                        range(1, n));
  }

  // Random subset of the (k+1) x (k+1) shadeable cells, each cell
  // present independently with probability 1/2.
  std::set<Cell> cells(int k) {
    std::set<Cell> out;
    for (int x = 0; x <= k; ++x) {
      for (int y = 0; y <= k; ++y) {
        if (raw() & 1u) out.insert({x, y});
      }
    }
    return out;
  }

  // Random partial order on k slots: orient sampled slot pairs by a
  // hidden linear order, which keeps the relation set acyclic.
  PopPattern pop(int k, int relation_attempts) {
    const Permutation hidden = permutation(k);
    std::set<std::pair<int, int>> rels;
    for (int i = 0; i < relation_attempts; ++i) {
      const int a = range(1, k);
      const int b = range(1, k);
      if (a == b) continue;
      if (hidden.at(a) < hidden.at(b)) {
        rels.insert({a, b});
      } else {
        rels.insert({b, a});
      }
    }
    return PopPattern(
        k, std::vector<std::pair<int, int>>(rels.begin(), rels.end()));
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace permatch
