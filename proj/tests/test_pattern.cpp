#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "permatch/pattern.hpp"
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

}  // namespace

TEST_CASE("parse/print round-trips for every class") {
  const char* lines[] = {
      "classical: perm=1 3 2",
      "vincular: perm=1 3 2; cols=0,2",
      "vincular: perm=2 1",
      "bivincular: perm=1 3 2; cols=2; rows=0,3",
      "bivincular: perm=1 2; rows=1",
      "mesh: perm=2 1; cells=(0,0),(2,1)",
      "mesh: perm=1",
      "boxed: perm=2 4 1 3",
      "consecutive: perm=1 2 3",
  };
  for (const char* line : lines) {
    const Pattern p = parse_pattern(line);
    CHECK(print_pattern(p) == line);
    CHECK(parse_pattern(print_pattern(p)) == p);
  }
}

TEST_CASE("parse tolerates loose whitespace and reorders canonically") {
  const Pattern p = parse_pattern("  mesh :  perm = 2 1 ; cells = ( 2 , 1 ) , ( 0 , 0 ) ");
  CHECK(print_pattern(p) == "mesh: perm=2 1; cells=(0,0),(2,1)");
  const Pattern q = parse_pattern("bivincular: perm=1 3 2; rows=3,0; cols=2");
  CHECK(print_pattern(q) == "bivincular: perm=1 3 2; cols=2; rows=0,3");
}

TEST_CASE("parse rejects malformed pattern lines") {
  CHECK_THROWS_AS(parse_pattern("perm=1 2"), ParseError);
  CHECK_THROWS_AS(parse_pattern("sideways: perm=1 2"), ParseError);
  CHECK_THROWS_AS(parse_pattern("classical: cols=1"), ParseError);
  CHECK_THROWS_AS(parse_pattern("classical: perm=1 2; cols=1"), ParseError);
  CHECK_THROWS_AS(parse_pattern("vincular: perm=1 2; rows=1"), ParseError);
  CHECK_THROWS_AS(parse_pattern("vincular: perm=1 2; cells=(0,0)"),
                  ParseError);
  CHECK_THROWS_AS(parse_pattern("boxed: perm=1 2; cells=(0,0)"), ParseError);
  CHECK_THROWS_AS(parse_pattern("mesh: perm=1 2; cols=1"), ParseError);
  CHECK_THROWS_AS(parse_pattern("vincular: perm=1 2; cols=3"), ParseError);
  CHECK_THROWS_AS(parse_pattern("vincular: perm=1 2; cols=-1"), ParseError);
  CHECK_THROWS_AS(parse_pattern("mesh: perm=1 2; cells=(0,3)"), ParseError);
  CHECK_THROWS_AS(parse_pattern("mesh: perm=1 2; cells=(0 0)"), ParseError);
  CHECK_THROWS_AS(parse_pattern("mesh: perm=1 2; cells="), ParseError);
  CHECK_THROWS_AS(parse_pattern("classical: perm=1 2; perm=2 1"), ParseError);
  CHECK_THROWS_AS(parse_pattern("classical: perm=1 4 2"), ParseError);
  CHECK_THROWS_AS(parse_pattern("classical: perm="), ParseError);
  CHECK_THROWS_AS(parse_pattern("classical: junk"), ParseError);
}

TEST_CASE("shading statistics per class") {
  CHECK(cols(parse_pattern("classical: perm=1 3 2")) == 0);
  CHECK(rows(parse_pattern("classical: perm=1 3 2")) == 0);
  CHECK(cells(parse_pattern("classical: perm=1 3 2")) == 0);

  const Pattern v = parse_pattern("vincular: perm=1 3 2; cols=0,2");
  CHECK(cols(v) == 2);
  CHECK(rows(v) == 0);
  CHECK(cells(v) == 0);

  const Pattern b = parse_pattern("bivincular: perm=1 3 2; cols=2; rows=0,3");
  CHECK(cols(b) == 1);
  CHECK(rows(b) == 2);
  CHECK(cells(b) == 0);

  const Pattern m = parse_pattern("mesh: perm=2 1; cells=(0,0),(2,1)");
  CHECK(cols(m) == 0);
  CHECK(cells(m) == 2);

  CHECK(cells(parse_pattern("boxed: perm=2 4 1 3")) == 9);
  CHECK(cols(parse_pattern("boxed: perm=2 4 1 3")) == 0);
  CHECK(cols(parse_pattern("consecutive: perm=1 2 3 4")) == 3);
  CHECK(cols(parse_pattern("consecutive: perm=1")) == 0);
  CHECK(cells(parse_pattern("consecutive: perm=1 2 3")) == 0);
}

TEST_CASE("to_mesh: pinned shadings") {
  CHECK(to_mesh(parse_pattern("classical: perm=1 3 2")).cells.empty());

  const MeshPattern v = to_mesh(parse_pattern("vincular: perm=1 3 2; cols=0"));
  CHECK(v.cells == std::set<Cell>{{0, 0}, {0, 1}, {0, 2}, {0, 3}});

  const MeshPattern b =
      to_mesh(parse_pattern("bivincular: perm=1 2; cols=1; rows=2"));
  CHECK(b.cells ==
        std::set<Cell>{{1, 0}, {1, 1}, {1, 2}, {0, 2}, {2, 2}});

  const MeshPattern x = to_mesh(parse_pattern("boxed: perm=1 3 2"));
  CHECK(x.cells == std::set<Cell>{{1, 1}, {1, 2}, {2, 1}, {2, 2}});

  const MeshPattern c = to_mesh(parse_pattern("consecutive: perm=1 3 2"));
  CHECK(c.cells == std::set<Cell>{{1, 0}, {1, 1}, {1, 2}, {1, 3},
                                  {2, 0}, {2, 1}, {2, 2}, {2, 3}});

  const MeshPattern m =
      to_mesh(parse_pattern("mesh: perm=2 1; cells=(0,0),(2,1)"));
  CHECK(m.cells == std::set<Cell>{{0, 0}, {2, 1}});
}

TEST_CASE("is_occurrence: hand-worked mesh example") {
  const Permutation t = parse_permutation("1 4 2 3");
  const MeshPattern m(parse_permutation("1 2"), {{1, 1}});
  auto occ = [&](std::vector<int> pos) { return is_occurrence(m, t, pos); };
  CHECK(occ({1, 2}));
  CHECK(occ({1, 3}));
  CHECK(occ({3, 4}));
  CHECK(!occ({1, 4}));  // the 2 at position 3 lands in the shaded cell
  CHECK(!occ({2, 3}));  // 4,2 is not an ascent
  const DominanceGrid g(t);
  CHECK(is_occurrence(m, t, std::vector<int>{1, 3}, g));
  CHECK(!is_occurrence(m, t, std::vector<int>{1, 4}, g));
}

TEST_CASE("is_occurrence rejects malformed position lists") {
  const Permutation t = parse_permutation("1 4 2 3");
  const MeshPattern m(parse_permutation("1 2"), {});
  CHECK_THROWS_AS(is_occurrence(m, t, std::vector<int>{1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_occurrence(m, t, std::vector<int>{3, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_occurrence(m, t, std::vector<int>{2, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_occurrence(m, t, std::vector<int>{0, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_occurrence(m, t, std::vector<int>{1, 5}),
                  std::invalid_argument);
  const DominanceGrid other(parse_permutation("1 2 3"));
  CHECK_THROWS_AS(is_occurrence(m, t, std::vector<int>{1, 2}, other),
                  std::invalid_argument);
}

TEST_CASE("brute-force checkers reproduce hand counts") {
  const Permutation t = parse_permutation("1 6 4 2 5 3");
  const Pattern p132 = parse_pattern("classical: perm=1 3 2");
  CHECK(checkers::brute_count(p132, t) == 8);
  REQUIRE(checkers::brute_first_witness(p132, t).has_value());
  CHECK(*checkers::brute_first_witness(p132, t) == std::vector<int>{1, 2, 3});
  CHECK(checkers::brute_count(parse_pattern("consecutive: perm=1 3 2"), t) ==
        2);  // 1 6 4 and 2 5 3
  CHECK(*checkers::brute_first_witness(
            parse_pattern("consecutive: perm=1 3 2"), t) ==
        std::vector<int>{1, 2, 3});
}

// The unified mesh view must agree with each class's own definition, on
// both the scanning and the rectangle-query paths.
TEST_CASE("to_mesh preserves occurrence semantics across all classes") {
  std::mt19937_64 rng(101);

  std::vector<Pattern> patterns;
  for (int k = 1; k <= 3; ++k) {
    for (const Permutation& q : checkers::all_permutations(k)) {
      patterns.emplace_back(ClassicalPattern{q});
      patterns.emplace_back(BoxedPattern{q});
      patterns.emplace_back(ConsecutivePattern{q});
      // all column subsets
      for (int mask = 0; mask < (1 << (k + 1)); ++mask) {
        std::set<int> cs;
        for (int c = 0; c <= k; ++c) {
          if (mask & (1 << c)) cs.insert(c);
        }
        patterns.emplace_back(VincularPattern{q, cs});
      }
      if (k <= 2) {
        // all (cols, rows) pairs and all shadings
        for (int cm = 0; cm < (1 << (k + 1)); ++cm) {
          for (int rm = 0; rm < (1 << (k + 1)); ++rm) {
            std::set<int> cs, rs;
            for (int c = 0; c <= k; ++c) {
              if (cm & (1 << c)) cs.insert(c);
              if (rm & (1 << c)) rs.insert(c);
            }
            patterns.emplace_back(BivincularPattern{q, cs, rs});
          }
        }
        const int cell_count = (k + 1) * (k + 1);
        for (int mask = 0; mask < (1 << cell_count); ++mask) {
          std::set<Cell> cells;
          for (int b = 0; b < cell_count; ++b) {
            if (mask & (1 << b)) cells.insert({b / (k + 1), b % (k + 1)});
          }
          patterns.emplace_back(MeshPattern(q, std::move(cells)));
        }
      } else {
        for (int s = 0; s < 40; ++s) {
          patterns.emplace_back(BivincularPattern{q, random_axis_subset(k, rng),
                                                  random_axis_subset(k, rng)});
          patterns.emplace_back(
              MeshPattern(q, random_cells(k, 1 + static_cast<int>(rng() % 8),
                                          rng)));
        }
      }
    }
  }
  for (const Permutation& q : checkers::all_permutations(4)) {
    patterns.emplace_back(BoxedPattern{q});
    patterns.emplace_back(ConsecutivePattern{q});
  }

  std::vector<Permutation> texts;
  for (int n = 1; n <= 4; ++n) {
    for (const Permutation& t : checkers::all_permutations(n)) {
      texts.push_back(t);
    }
  }
  for (int s = 0; s < 30; ++s) texts.push_back(random_perm(5, rng));

  long long compared = 0;
  for (const Permutation& t : texts) {
    const DominanceGrid grid(t);
    for (const Pattern& p : patterns) {
      if (p.k() > t.size()) continue;
      const MeshPattern m = to_mesh(p);
      checkers::for_each_combination(
          t.size(), p.k(), [&](const std::vector<int>& pos) {
            const bool expect = checkers::occurrence_at(p, t, pos);
            const bool direct = is_occurrence(m, t, pos);
            const bool via_grid = is_occurrence(m, t, pos, grid);
            if (expect != direct || expect != via_grid) {
              CAPTURE(print_pattern(p));
              CAPTURE(t.str());
              CAPTURE(pos[0]);
              REQUIRE(expect == direct);
              REQUIRE(expect == via_grid);
            }
            ++compared;
            return true;
          });
    }
  }
  CHECK(compared > 100000);  // make sure the sweep actually ran
}

TEST_CASE("reverse/complement/inverse act correctly on occurrences") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);  // 2..6
    const int k = 1 + static_cast<int>(rng() % std::min(n, 3));
    const Permutation t = random_perm(n, rng);
    const Permutation q = random_perm(k, rng);

    std::vector<Pattern> ps;
    ps.emplace_back(ClassicalPattern{q});
    ps.emplace_back(VincularPattern{q, random_axis_subset(k, rng)});
    ps.emplace_back(BivincularPattern{q, random_axis_subset(k, rng),
                                      random_axis_subset(k, rng)});
    ps.emplace_back(MeshPattern(q, random_cells(k, 3, rng)));
    ps.emplace_back(BoxedPattern{q});
    ps.emplace_back(ConsecutivePattern{q});

    const Permutation tr = reverse(t);
    const Permutation tc = complement(t);
    const Permutation ti = inverse(t);

    for (const Pattern& p : ps) {
      const Pattern pr = pattern_reverse(p);
      const Pattern pc = pattern_complement(p);
      CHECK(pr.kind() == p.kind());
      CHECK(pattern_reverse(pr) == p);
      CHECK(pattern_complement(pc) == p);

      std::optional<Pattern> pi;
      if (p.kind() == Pattern::Kind::vincular &&
          !std::get<VincularPattern>(p.alt()).cols.empty()) {
        CHECK_THROWS_AS(pattern_inverse(p), std::invalid_argument);
      } else if (p.kind() == Pattern::Kind::consecutive && k >= 2) {
        CHECK_THROWS_AS(pattern_inverse(p), std::invalid_argument);
      } else {
        pi = pattern_inverse(p);
        CHECK(pattern_inverse(*pi) == p);
      }

      checkers::for_each_combination(
          n, k, [&](const std::vector<int>& pos) {
            const bool here = checkers::occurrence_at(p, t, pos);
            // reverse: positions flip around the middle
            std::vector<int> rpos;
            for (auto it = pos.rbegin(); it != pos.rend(); ++it) {
              rpos.push_back(n + 1 - *it);
            }
            CHECK(here == checkers::occurrence_at(pr, tr, rpos));
            // complement: same positions
            CHECK(here == checkers::occurrence_at(pc, tc, pos));
            // inverse: positions become the sorted matched values
            if (pi) {
              const std::vector<int> w =
                  checkers::matched_values_sorted(t, pos);
              CHECK(here == checkers::occurrence_at(*pi, ti, w));
            }
            return true;
          });
    }
  }
}

TEST_CASE("matchings convert to and from position lists") {
  const Permutation t = parse_permutation("1 6 4 2 5 3");
  const Permutation p = parse_permutation("1 3 2");

  const Matching m =
      matching_from_positions(p, t, std::vector<int>{1, 3, 4});
  CHECK(m.mu == std::vector<int>{1, 2, 4});
  CHECK(m.of(1) == 1);
  CHECK(m.of(2) == 2);
  CHECK(m.of(3) == 4);
  CHECK(matching_positions(m, p, t) == std::vector<int>{1, 3, 4});

  // positions that do not realize the pattern are rejected
  CHECK_THROWS_AS(matching_from_positions(p, t, std::vector<int>{1, 4, 5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(matching_from_positions(p, t, std::vector<int>{3, 1, 4}),
                  std::invalid_argument);

  // every brute witness round-trips
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const Permutation text = random_perm(n, rng);
    const Permutation pat = random_perm(3, rng);
    checkers::for_each_combination(n, 3, [&](const std::vector<int>& pos) {
      if (checkers::classical_at(pat, text, pos)) {
        const Matching mm = matching_from_positions(pat, text, pos);
        CHECK(matching_positions(mm, pat, text) == pos);
      }
      return true;
    });
  }
}
