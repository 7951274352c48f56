#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "permatch/match.hpp"
#include "support/checkers.hpp"

using namespace permatch;

namespace {

Permutation random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(std::move(v));
}

std::set<int> random_axis_subset(int k, std::mt19937_64& rng) {
  std::set<int> s;
  for (int i = 0; i <= k; ++i) {
    if (rng() % 2) s.insert(i);
  }
  return s;
}

std::set<Cell> random_cells(int k, int how_many, std::mt19937_64& rng) {
  std::set<Cell> s;
  for (int i = 0; i < how_many; ++i) {
    s.insert({static_cast<int>(rng() % (k + 1)),
              static_cast<int>(rng() % (k + 1))});
  }
  return s;
}

Pattern random_pattern(int k, std::mt19937_64& rng) {
  const Permutation q = random_perm(k, rng);
  switch (rng() % 6) {
    case 0:
      return Pattern(ClassicalPattern{q});
    case 1:
      return Pattern(VincularPattern{q, random_axis_subset(k, rng)});
    case 2:
      return Pattern(BivincularPattern{q, random_axis_subset(k, rng),
                                       random_axis_subset(k, rng)});
    case 3:
      return Pattern(
          MeshPattern(q, random_cells(k, 1 + static_cast<int>(rng() % 6),
                                      rng)));
    case 4:
      return Pattern(BoxedPattern{q});
    default:
      return Pattern(ConsecutivePattern{q});
  }
}

std::vector<int> witness_positions(const MatchResult& r, const Pattern& p,
                                   const Permutation& text) {
  REQUIRE(r.found);
  REQUIRE(r.witness.has_value());
  return matching_positions(*r.witness, p.perm(), text);
}

}  // namespace

TEST_CASE("backtrack and exhaustive pin the first 1 3 2 occurrence") {
  const Permutation t = parse_permutation("1 6 4 2 5 3");
  const Pattern p = parse_pattern("classical: perm=1 3 2");

  const MatchResult bt = match_backtrack(p, t);
  CHECK(bt.found);
  CHECK(!bt.stats.timed_out);
  CHECK(bt.witness->mu == std::vector<int>{1, 4, 6});
  CHECK(witness_positions(bt, p, t) == std::vector<int>{1, 2, 3});

  const MatchResult ex = match_exhaustive(p, t);
  CHECK(ex.found);
  CHECK(witness_positions(ex, p, t) == std::vector<int>{1, 2, 3});

  CHECK(count_occurrences(p, t).count == 8);
  const auto all = enumerate_occurrences(p, t);
  const std::vector<std::vector<int>> expected = {
      {1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6},
      {1, 3, 4}, {1, 3, 6}, {1, 5, 6}, {4, 5, 6}};
  CHECK(all == expected);
  CHECK(enumerate_occurrences(p, t, 3) ==
        std::vector<std::vector<int>>(expected.begin(), expected.begin() + 3));
  CHECK(enumerate_occurrences(p, t, 0).empty());
}

TEST_CASE("boxed matcher pins its value-window witness") {
  const Permutation t = parse_permutation("1 6 4 2 5 3");
  const BoxedPattern p{parse_permutation("1 3 2")};
  const MatchResult r = match_boxed(p, t);
  REQUIRE(r.found);
  CHECK(r.witness->mu == std::vector<int>{1, 2, 4});
  CHECK(matching_positions(*r.witness, p.perm, t) == std::vector<int>{1, 3, 4});
  CHECK(checkers::boxed_at(p.perm, t, {1, 3, 4}));
}

TEST_CASE("consecutive matcher returns the leftmost window") {
  const Permutation t = parse_permutation("1 6 4 2 5 3");
  const ConsecutivePattern p{parse_permutation("1 3 2")};
  const MatchResult r = match_consecutive(p, t);
  REQUIRE(r.found);
  CHECK(r.witness->mu == std::vector<int>{1, 4, 6});
  CHECK(matching_positions(*r.witness, p.perm, t) == std::vector<int>{1, 2, 3});

  const ConsecutivePattern miss{parse_permutation("1 2 3")};
  CHECK(!match_consecutive(miss, t).found);
}

TEST_CASE("identity matcher finds an increasing chain and stops at the cap") {
  const Permutation t = parse_permutation("1 6 4 2 5 3");
  const MatchResult r3 = match_identity(3, t);
  REQUIRE(r3.found);
  const std::vector<int> pos =
      matching_positions(*r3.witness, parse_permutation("1 2 3"), t);
  CHECK(checkers::classical_at(parse_permutation("1 2 3"), t, pos));
  CHECK(!match_identity(4, t).found);
  CHECK(match_identity(1, t).found);
  CHECK(!match_identity(7, t).found);
  CHECK_THROWS_AS(match_identity(0, t), std::invalid_argument);
}

TEST_CASE("matchers agree with brute force across classes") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const int k = 1 + static_cast<int>(rng() % std::min(n, 5));
    const Permutation t = random_perm(n, rng);
    const Pattern p = random_pattern(k, rng);

    const auto brute = checkers::brute_first_witness(p, t);
    const MatchResult bt = match_backtrack(p, t);
    const MatchResult ex = match_exhaustive(p, t);
    const MatchResult au = match(p, t);

    CAPTURE(print_pattern(p));
    CAPTURE(t.str());
    REQUIRE(bt.found == brute.has_value());
    REQUIRE(ex.found == brute.has_value());
    REQUIRE(au.found == brute.has_value());
    if (brute) {
      CHECK(witness_positions(bt, p, t) == *brute);
      CHECK(witness_positions(ex, p, t) == *brute);
      // the dispatcher may pick a matcher with a different witness order;
      // its witness must still be a real occurrence
      CHECK(checkers::occurrence_at(p, t, witness_positions(au, p, t)));
    }

    // full enumeration agrees
    std::vector<std::vector<int>> brute_all;
    checkers::for_each_combination(n, k, [&](const std::vector<int>& c) {
      if (checkers::occurrence_at(p, t, c)) brute_all.push_back(c);
      return true;
    });
    REQUIRE(count_occurrences(p, t).count ==
            static_cast<long long>(brute_all.size()));
    REQUIRE(enumerate_occurrences(p, t) == brute_all);
  }
}

TEST_CASE("boxed matcher agrees with brute force") {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 800; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const int k = 1 + static_cast<int>(rng() % std::min(n, 5));
    const Permutation t = random_perm(n, rng);
    const BoxedPattern p{random_perm(k, rng)};
    const auto brute = checkers::brute_first_witness(Pattern(p), t);
    const MatchResult r = match_boxed(p, t);
    CAPTURE(p.perm.str());
    CAPTURE(t.str());
    REQUIRE(r.found == brute.has_value());
    if (r.found) {
      CHECK(checkers::boxed_at(p.perm, t,
                               matching_positions(*r.witness, p.perm, t)));
    }
  }
}

TEST_CASE("consecutive matcher agrees with brute force") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 800; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const int k = 1 + static_cast<int>(rng() % std::min(n, 5));
    const Permutation t = random_perm(n, rng);
    const ConsecutivePattern p{random_perm(k, rng)};
    const auto brute = checkers::brute_first_witness(Pattern(p), t);
    const MatchResult r = match_consecutive(p, t);
    REQUIRE(r.found == brute.has_value());
    if (r.found) {
      CHECK(matching_positions(*r.witness, p.perm, t) == *brute);
    }
  }
}

TEST_CASE("identity matcher agrees with the backtracker") {
  std::mt19937_64 rng(707);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const int k = 1 + static_cast<int>(rng() % 6);
    const Permutation t = random_perm(n, rng);
    std::vector<int> ident(static_cast<std::size_t>(k));
    std::iota(ident.begin(), ident.end(), 1);
    const Pattern p(ClassicalPattern{Permutation(ident)});
    const MatchResult lis = match_identity(k, t);
    const MatchResult bt = match_backtrack(p, t);
    REQUIRE(lis.found == bt.found);
    if (lis.found) {
      CHECK(checkers::classical_at(p.perm(), t,
                                   matching_positions(*lis.witness, p.perm(),
                                                      t)));
    }
  }
}

TEST_CASE("separability test matches forbidden-pattern avoidance") {
  const Pattern p3142 = parse_pattern("classical: perm=3 1 4 2");
  const Pattern p2413 = parse_pattern("classical: perm=2 4 1 3");
  for (int k = 1; k <= 7; ++k) {
    for (const Permutation& q : checkers::all_permutations(k)) {
      const bool avoid =
          !checkers::brute_first_witness(p3142, q).has_value() &&
          !checkers::brute_first_witness(p2413, q).has_value();
      REQUIRE(is_separable(q) == avoid);
    }
  }
}

TEST_CASE("separable matcher agrees with the backtracker") {
  std::mt19937_64 rng(808);
  int done = 0;
  while (done < 300) {
    const int k = 1 + static_cast<int>(rng() % 6);
    const Permutation q = random_perm(k, rng);
    if (!is_separable(q)) continue;
    ++done;
    const int n = k + static_cast<int>(rng() % (17 - k));
    const Permutation t = random_perm(n, rng);
    const Pattern p(ClassicalPattern{q});
    const MatchResult sep = match_separable(q, t);
    const MatchResult bt = match_backtrack(p, t);
    CAPTURE(q.str());
    CAPTURE(t.str());
    REQUIRE(sep.found == bt.found);
    if (sep.found) {
      CHECK(checkers::classical_at(q, t,
                                   matching_positions(*sep.witness, q, t)));
    }
  }
  CHECK_THROWS_AS(match_separable(parse_permutation("2 4 1 3"),
                                  random_perm(8, rng)),
                  std::invalid_argument);
}

TEST_CASE("dispatcher rejects algorithms unfit for the pattern class") {
  const Permutation t = parse_permutation("2 1 4 3");
  MatchOptions opt;

  opt.algo = Algo::consecutive;
  CHECK_THROWS_AS(match(parse_pattern("classical: perm=1 2"), t, opt),
                  std::invalid_argument);
  opt.algo = Algo::boxed;
  CHECK_THROWS_AS(match(parse_pattern("vincular: perm=1 2; cols=1"), t, opt),
                  std::invalid_argument);
  opt.algo = Algo::lis;
  CHECK_THROWS_AS(match(parse_pattern("classical: perm=2 1"), t, opt),
                  std::invalid_argument);
  CHECK_THROWS_AS(match(parse_pattern("boxed: perm=1 2"), t, opt),
                  std::invalid_argument);
  opt.algo = Algo::separable;
  CHECK_THROWS_AS(match(parse_pattern("mesh: perm=1 2"), t, opt),
                  std::invalid_argument);
  CHECK_THROWS_AS(match(parse_pattern("classical: perm=2 4 1 3"), t, opt),
                  std::invalid_argument);

  // fitting combinations run
  opt.algo = Algo::lis;
  CHECK(match(parse_pattern("classical: perm=1 2"), t, opt).found);
  opt.algo = Algo::separable;
  CHECK(match(parse_pattern("classical: perm=2 1"), t, opt).found);
  opt.algo = Algo::exhaustive;
  CHECK(match(parse_pattern("mesh: perm=2 1"), t, opt).found);
}

TEST_CASE("patterns longer than the text never match") {
  const Permutation t = parse_permutation("2 1");
  CHECK(!match_backtrack(parse_pattern("classical: perm=1 2 3"), t).found);
  CHECK(!match_exhaustive(parse_pattern("classical: perm=1 2 3"), t).found);
  CHECK(!match_consecutive(ConsecutivePattern{parse_permutation("1 2 3")}, t)
             .found);
  CHECK(!match_boxed(BoxedPattern{parse_permutation("1 2 3")}, t).found);
  CHECK(!match_identity(3, t).found);
  CHECK(!match_separable(parse_permutation("1 2 3"), t).found);
  CHECK(count_occurrences(parse_pattern("classical: perm=1 2 3"), t).count ==
        0);
}

TEST_CASE("search limits cut the backtracker off") {
  // an unsatisfiable instance that needs far more than 4096 candidate steps
  std::vector<int> desc(200);
  for (int i = 0; i < 200; ++i) desc[static_cast<std::size_t>(i)] = 200 - i;
  const Permutation t{desc};
  std::vector<int> ident(10);
  std::iota(ident.begin(), ident.end(), 1);
  const Pattern p(ClassicalPattern{Permutation(ident)});

  SearchLimits budget;
  budget.max_nodes = 1;
  const MatchResult capped = match_backtrack(p, t, budget);
  CHECK(capped.stats.timed_out);
  CHECK(!capped.found);

  SearchLimits expired;
  expired.deadline = std::chrono::steady_clock::now();
  const MatchResult late = match_backtrack(p, t, expired);
  CHECK(late.stats.timed_out);
  CHECK(!late.found);

  const MatchResult free_run = match_backtrack(p, t);
  CHECK(!free_run.found);
  CHECK(!free_run.stats.timed_out);
  CHECK(free_run.stats.nodes > 4096);
}

TEST_CASE("POP parsing, closure and completions") {
  const PopPattern p = parse_pop("pop: k=3; lt=(1,2),(2,3)");
  CHECK(p.k() == 3);
  // closure adds (1,3)
  CHECK(p.relations() ==
        std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(print_pop(p) == "pop: k=3; lt=(1,2),(1,3),(2,3)");
  CHECK(parse_pop(print_pop(p)) == p);

  const PopPattern free3 = parse_pop("pop: k=3");
  CHECK(free3.relations().empty());
  CHECK(linear_extensions(free3).size() == 6);
  CHECK(linear_extensions(p).size() == 1);  // the identity only
  CHECK(linear_extensions(parse_pop("pop: k=3; lt=(1,2)")).size() == 3);

  CHECK_THROWS_AS(parse_pop("pop: k=2; lt=(1,2),(2,1)"), ParseError);
  CHECK_THROWS_AS(parse_pop("pop: k=2; lt=(1,1)"), ParseError);
  CHECK_THROWS_AS(parse_pop("pop: k=2; lt=(0,1)"), ParseError);
  CHECK_THROWS_AS(parse_pop("pop: k=2; lt=(1,3)"), ParseError);
  CHECK_THROWS_AS(parse_pop("pop: k=0"), ParseError);
  CHECK_THROWS_AS(parse_pop("pop: lt=(1,2)"), ParseError);
  CHECK_THROWS_AS(parse_pop("pip: k=2"), ParseError);
  CHECK_THROWS_AS(linear_extensions(parse_pop("pop: k=9")),
                  std::invalid_argument);

  // completions of any POP never exceed k!
  std::mt19937_64 rng(909);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 5);
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < k; ++i) {
      const int a = 1 + static_cast<int>(rng() % k);
      const int b = 1 + static_cast<int>(rng() % k);
      if (a < b) rel.emplace_back(a, b);  // a<b keeps it acyclic
    }
    long long factorial = 1;
    for (int i = 2; i <= k; ++i) factorial *= i;
    CHECK(static_cast<long long>(
              linear_extensions(PopPattern(k, rel)).size()) <= factorial);
  }
}

TEST_CASE("POP matching agrees with brute force") {
  std::mt19937_64 rng(1010);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const int k = 1 + static_cast<int>(rng() % std::min(n, 4));
    const Permutation t = random_perm(n, rng);
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < k; ++i) {
      const int a = 1 + static_cast<int>(rng() % k);
      const int b = 1 + static_cast<int>(rng() % k);
      if (a < b) rel.emplace_back(a, b);
    }
    const PopPattern p(k, rel);
    const long long expected = checkers::brute_pop_count(k, rel, t);
    const CountResult counted = count_pop(p, t);
    CAPTURE(print_pop(p));
    CAPTURE(t.str());
    REQUIRE(counted.count == expected);
    const MatchResult r = match_pop(p, t);
    REQUIRE(r.found == (expected > 0));
    if (r.found) {
      // the witness realizes some completion, hence the POP itself; the
      // sorted positions of its matched values are the occurrence
      std::vector<int> pos;
      for (int v : r.witness->mu) pos.push_back(t.position_of(v));
      std::sort(pos.begin(), pos.end());
      CHECK(checkers::pop_at(rel, t, pos));
    }
  }
}

TEST_CASE("stats report work and wall time") {
  const Permutation t = parse_permutation("1 6 4 2 5 3");
  const Pattern p = parse_pattern("mesh: perm=1 3 2; cells=(1,1),(2,2)");
  const MatchResult r = match_backtrack(p, t);
  CHECK(r.stats.nodes > 0);
  CHECK(r.stats.rect_queries > 0);
  CHECK(r.stats.elapsed_ms >= 0.0);
  const MatchResult e = match_exhaustive(p, t);
  CHECK(e.stats.nodes > 0);
  CHECK(e.stats.rect_queries > 0);
}
