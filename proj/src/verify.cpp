#include "permatch/verify.hpp"

#include <algorithm>
#include <sstream>

#include "permatch/reduction.hpp"
#include "permatch/rng.hpp"
#include "permatch/transform.hpp"

namespace permatch {

namespace {

void record_failure(SuiteResult& suite, const std::string& what) {
  ++suite.failures;
  if (suite.examples.size() < 5) suite.examples.push_back(what);
}

// Definitional occurrence count: scan every position subset and apply
// the direct (non-grid) occurrence test.
long long definitional_count(const MeshPattern& mesh, const Permutation& text) {
  const int k = mesh.k(), n = text.size();
  if (k > n) return 0;
  long long count = 0;
  std::vector<int> pos(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pos[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    if (is_occurrence(mesh, text, pos)) ++count;
    int j = k - 1;
    while (j >= 0 && pos[static_cast<std::size_t>(j)] == n - (k - 1 - j)) --j;
    if (j < 0) break;
    ++pos[static_cast<std::size_t>(j)];
    for (int r = j + 1; r < k; ++r) {
      pos[static_cast<std::size_t>(r)] =
          pos[static_cast<std::size_t>(r) - 1] + 1;
    }
  }
  return count;
}

// One specialized-versus-exhaustive comparison: the backtracker must
// reproduce the exhaustive answer and witness, the automatic dispatcher
// (which routes to the window/boxed/LIS/separable matchers where they
// apply) must reproduce the answer with a valid witness of its own.
// Returns a description of the first discrepancy, empty on agreement.
std::string compare_matchers(const Pattern& p, const Permutation& text,
                             const SearchLimits& limits, bool with_count) {
  const MatchResult bt = match_backtrack(p, text, limits);
  const MatchResult ex = match_exhaustive(p, text, limits);
  if (bt.stats.timed_out || ex.stats.timed_out) {
    return "timed out: " + print_pattern(p) + " / " + text.str();
  }
  std::ostringstream what;
  what << print_pattern(p) << " / " << text.str();
  if (bt.found != ex.found) {
    what << ": backtrack=" << bt.found << " exhaustive=" << ex.found;
    return what.str();
  }
  if (bt.found) {
    if (!(bt.witness == ex.witness)) {
      what << ": witnesses differ";
      return what.str();
    }
    const std::vector<int> pos =
        matching_positions(*bt.witness, p.perm(), text);
    if (!is_occurrence(to_mesh(p), text, pos)) {
      what << ": witness fails the direct occurrence test";
      return what.str();
    }
  }
  MatchOptions dispatch;
  dispatch.limits = limits;
  const MatchResult sp = match(p, text, dispatch);
  if (sp.stats.timed_out) {
    return "dispatcher timed out: " + what.str();
  }
  if (sp.found != ex.found) {
    what << ": dispatched=" << sp.found << " exhaustive=" << ex.found;
    return what.str();
  }
  if (sp.found) {
    const std::vector<int> pos =
        matching_positions(*sp.witness, p.perm(), text);
    if (!is_occurrence(to_mesh(p), text, pos)) {
      what << ": dispatched witness fails the direct occurrence test";
      return what.str();
    }
  }
  if (with_count) {
    const CountResult counted = count_occurrences(p, text, limits);
    const long long direct = definitional_count(to_mesh(p), text);
    if (counted.count != direct) {
      what << ": count=" << counted.count << " definitional=" << direct;
      return what.str();
    }
  }
  return {};
}

std::set<int> random_axis_set(Rng& rng, int k) {
  std::set<int> out;
  for (int c = 0; c <= k; ++c) {
    if (rng.raw() & 1u) out.insert(c);
  }
  return out;
}

Pattern random_pattern(Rng& rng, int kind, int k) {
  Permutation perm = rng.permutation(k);
  switch (kind) {
    case 0:
      return ClassicalPattern{std::move(perm)};
    case 1:
      return VincularPattern{std::move(perm), random_axis_set(rng, k)};
    case 2:
      return BivincularPattern{std::move(perm), random_axis_set(rng, k),
                               random_axis_set(rng, k)};
    case 3:
      return MeshPattern(std::move(perm), rng.cells(k));
    case 4:
      return BoxedPattern{std::move(perm)};
    default:
      return ConsecutivePattern{std::move(perm)};
  }
}

std::vector<Permutation> permutations_of(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::set<Cell> cells_from_mask(int k, std::uint64_t mask) {
  std::set<Cell> cells;
  int bit = 0;
  for (int x = 0; x <= k; ++x) {
    for (int y = 0; y <= k; ++y, ++bit) {
      if (mask & (std::uint64_t{1} << bit)) cells.insert({x, y});
    }
  }
  return cells;
}

std::set<int> axis_from_mask(int k, unsigned mask) {
  std::set<int> out;
  for (int c = 0; c <= k; ++c) {
    if (mask & (1u << c)) out.insert(c);
  }
  return out;
}

}  // namespace

SuiteResult verify_oracles_random(const VerifyOptions& opt) {
  SuiteResult suite{"oracles-random", 0, 0, {}};
  Rng rng(opt.seed);
  const int max_n = std::max(1, opt.max_n);
  for (int trial = 0; trial < opt.trials; ++trial) {
    const int kind = rng.below(6);
    const int k = rng.range(1, std::min(4, max_n));
    const int n = rng.range(k, max_n);
    const Pattern p = random_pattern(rng, kind, k);
    const Permutation text = rng.permutation(n);
    ++suite.checks;
    const std::string what = compare_matchers(p, text, opt.limits, true);
    if (!what.empty()) record_failure(suite, what);
  }
  return suite;
}

SuiteResult verify_oracle_agreement(const VerifyOptions& opt) {
  SuiteResult suite{"oracle-agreement", 0, 0, {}};
  Rng rng(opt.seed);

  // Every pattern the sweep will run, built once.
  std::vector<Pattern> patterns;
  for (int k = 1; k <= 3; ++k) {
    for (const Permutation& perm : permutations_of(k)) {
      patterns.emplace_back(ClassicalPattern{perm});
      patterns.emplace_back(BoxedPattern{perm});
      patterns.emplace_back(ConsecutivePattern{perm});
      for (unsigned cm = 0; cm < (1u << (k + 1)); ++cm) {
        patterns.emplace_back(VincularPattern{perm, axis_from_mask(k, cm)});
        for (unsigned rm = 0; rm < (1u << (k + 1)); ++rm) {
          patterns.emplace_back(
              BivincularPattern{perm, axis_from_mask(k, cm),
                                axis_from_mask(k, rm)});
        }
      }
      const int cell_bits = (k + 1) * (k + 1);
      if (k <= 2 || opt.mesh_full) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cell_bits);
             ++mask) {
          patterns.emplace_back(MeshPattern(perm, cells_from_mask(k, mask)));
        }
      } else {
        patterns.emplace_back(MeshPattern(perm, {}));
        patterns.emplace_back(
            MeshPattern(perm, cells_from_mask(k, ~std::uint64_t{0})));
        for (int bit = 0; bit < cell_bits; ++bit) {
          patterns.emplace_back(
              MeshPattern(perm, cells_from_mask(k, std::uint64_t{1} << bit)));
        }
        for (int s = 0; s < opt.mesh_samples; ++s) {
          patterns.emplace_back(MeshPattern(perm, rng.cells(k)));
        }
      }
    }
  }

  for (int n = 1; n <= opt.max_n; ++n) {
    for (const Permutation& text : permutations_of(n)) {
      for (const Pattern& p : patterns) {
        ++suite.checks;
        const std::string what = compare_matchers(p, text, opt.limits, false);
        if (!what.empty()) record_failure(suite, what);
      }
    }
  }
  return suite;
}

SuiteResult verify_blowup_suite(const VerifyOptions& opt) {
  SuiteResult suite{"blowup", 0, 0, {}};
  Rng rng(opt.seed);
  const int max_n = std::max(opt.max_n, 8);
  for (int trial = 0; trial < opt.blowup_pairs; ++trial) {
    const int k = rng.range(1, 4);
    const int n = rng.range(k, max_n);
    const Permutation p = rng.permutation(k);
    const Permutation t = rng.permutation(n);
    ++suite.checks;
    const BlowupReport rep = verify_blowup(p, t, opt.limits);
    if (rep.pattern2.size() != 2 * k || rep.text2.size() != 2 * n) {
      record_failure(suite, "blown sizes are off: " + p.str() + " / " +
                                t.str());
      continue;
    }
    if (!rep.ok()) {
      std::ostringstream what;
      what << p.str() << " / " << t.str() << ": original="
           << rep.original_found << " transformed=" << rep.transformed_found
           << " lrun=(" << rep.lrun_pattern << "," << rep.lrun_text << ")"
           << (rep.timed_out ? " timed out" : "")
           << (rep.original_found && !rep.lift_valid ? " lift invalid" : "");
      record_failure(suite, what.str());
    }
  }
  return suite;
}

namespace {

// Answer agreement plus the one-constraint guarantee for a segregated
// instance pushed through all three encodings.
std::string check_encodings(const SppmInstance& inst,
                            const SearchLimits& limits) {
  const MatchResult seg = match_segregated(inst, limits);
  const VincularReduction vin = reduce_sppm_to_vincular(inst);
  const BivincularReduction biv = reduce_sppm_to_bivincular(inst);
  const MeshReduction mesh = reduce_sppm_to_mesh(inst);
  const MatchResult rv = match_backtrack(Pattern{vin.pattern}, vin.text, limits);
  const MatchResult rb = match_backtrack(Pattern{biv.pattern}, biv.text, limits);
  const MatchResult rm =
      match_backtrack(Pattern{mesh.pattern}, mesh.text, limits);
  if (seg.stats.timed_out || rv.stats.timed_out || rb.stats.timed_out ||
      rm.stats.timed_out) {
    return "timed out: " + print_sppm(inst);
  }
  if (cols(Pattern{vin.pattern}) != 1 || rows(Pattern{biv.pattern}) != 1 ||
      cells(Pattern{mesh.pattern}) != 1) {
    return "constraint count is not 1: " + print_sppm(inst);
  }
  if (rv.found != seg.found || rb.found != seg.found || rm.found != seg.found) {
    std::ostringstream what;
    what << "answers diverge (segregated=" << seg.found << " vincular="
         << rv.found << " bivincular=" << rb.found << " mesh=" << rm.found
         << ") on:\n"
         << print_sppm(inst);
    return what.str();
  }
  return {};
}

}  // namespace

SuiteResult verify_reduction_suite(const VerifyOptions& opt) {
  SuiteResult suite{"reductions", 0, 0, {}};
  Rng rng(opt.seed);

  // Every labeled 4-vertex graph, clique targets 2..4.
  std::vector<std::pair<int, int>> slots;
  for (int a = 1; a <= 4; ++a) {
    for (int b = a + 1; b <= 4; ++b) slots.emplace_back(a, b);
  }
  for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t e = 0; e < slots.size(); ++e) {
      if (mask & (1u << e)) edges.push_back(slots[e]);
    }
    const Graph g(4, std::move(edges));
    for (int k = 2; k <= 4; ++k) {
      ++suite.checks;
      const ChainReport rep = verify_reduction_chain(g, k, opt.limits);
      const int l = g.vertices(), m = g.edge_count();
      if (!rep.agree()) {
        record_failure(suite, "chain disagrees: " + print_graph(g) + " k=" +
                                  std::to_string(k));
      } else if (rep.sppm.pattern.size() != 2 * k * k + 2 ||
                 rep.sppm.text.size() != 2 * l + 4 * m + 2 ||
                 rep.sppm.p != k * k + k || rep.sppm.t != 2 * l + 2 * m) {
        record_failure(suite, "instance shape is off: " + print_graph(g) +
                                  " k=" + std::to_string(k));
      }
    }
  }

  // Random graphs.
  for (int i = 0; i < opt.random_graphs; ++i) {
    const Graph g = rng.graph(rng.range(1, 7), 0.5);
    const int k = rng.range(1, 4);
    ++suite.checks;
    const ChainReport rep = verify_reduction_chain(g, k, opt.limits);
    const int l = g.vertices(), m = g.edge_count();
    if (!rep.agree()) {
      record_failure(suite, "chain disagrees: " + print_graph(g) + " k=" +
                                std::to_string(k));
    } else if (rep.sppm.pattern.size() != 2 * k * k + 2 ||
               rep.sppm.text.size() != 2 * l + 4 * m + 2 ||
               rep.sppm.p != k * k + k || rep.sppm.t != 2 * l + 2 * m) {
      record_failure(suite, "instance shape is off: " + print_graph(g) +
                                " k=" + std::to_string(k));
    }
  }

  // Random segregated instances through the three encodings, checked
  // against both segregated matchers.
  for (int i = 0; i < opt.reduction_random; ++i) {
    const int k = rng.range(1, 4);
    const int n = rng.range(k, 8);
    const SppmInstance inst = rng.sppm(k, n);
    ++suite.checks;
    const MatchResult seg = match_segregated(inst, opt.limits);
    const MatchResult ex = match_segregated_exhaustive(inst, opt.limits);
    if (seg.found != ex.found || !(seg.witness == ex.witness)) {
      record_failure(suite, "segregated matchers disagree on:\n" +
                                print_sppm(inst));
      continue;
    }
    const std::string what = check_encodings(inst, opt.limits);
    if (!what.empty()) record_failure(suite, what);
  }
  return suite;
}

SuiteResult verify_pop_suite(const VerifyOptions& opt) {
  SuiteResult suite{"pop", 0, 0, {}};
  Rng rng(opt.seed);
  const int max_n = std::max(opt.max_n, 8);
  for (int trial = 0; trial < opt.pop_trials; ++trial) {
    const int k = rng.range(1, 5);
    const int n = rng.range(k, max_n);
    const PopPattern pop = rng.pop(k, rng.below(2 * k + 1));
    const Permutation text = rng.permutation(n);
    ++suite.checks;

    // Brute force straight from the definition.
    long long direct = 0;
    std::optional<std::vector<int>> first;
    std::vector<int> pos(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pos[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
      bool ok = true;
      for (const auto& [a, b] : pop.relations()) {
        if (text.at(pos[static_cast<std::size_t>(a) - 1]) >=
            text.at(pos[static_cast<std::size_t>(b) - 1])) {
          ok = false;
          break;
        }
      }
      if (ok) {
        ++direct;
        if (!first) first = pos;
      }
      int j = k - 1;
      while (j >= 0 && pos[static_cast<std::size_t>(j)] == n - (k - 1 - j)) {
        --j;
      }
      if (j < 0) break;
      ++pos[static_cast<std::size_t>(j)];
      for (int r = j + 1; r < k; ++r) {
        pos[static_cast<std::size_t>(r)] =
            pos[static_cast<std::size_t>(r) - 1] + 1;
      }
    }

    const MatchResult found = match_pop(pop, text, opt.limits);
    const CountResult counted = count_pop(pop, text, opt.limits);
    std::ostringstream what;
    what << print_pop(pop) << " / " << text.str();
    if (found.stats.timed_out || counted.stats.timed_out) {
      record_failure(suite, "timed out: " + what.str());
      continue;
    }
    if (found.found != (direct > 0) || counted.count != direct) {
      what << ": match=" << found.found << " count=" << counted.count
           << " direct=" << direct;
      record_failure(suite, what.str());
      continue;
    }
    long long factorial = 1;
    for (int i = 2; i <= k; ++i) factorial *= i;
    if (static_cast<long long>(linear_extensions(pop).size()) > factorial) {
      record_failure(suite, "completions exceed k!: " + what.str());
      continue;
    }
    if (found.found) {
      // The witness values, read in text order, must satisfy the order.
      const Matching& mu = *found.witness;
      std::vector<int> witness_pos;
      for (int v : mu.mu) witness_pos.push_back(text.position_of(v));
      std::sort(witness_pos.begin(), witness_pos.end());
      bool ok = static_cast<int>(witness_pos.size()) == k;
      for (const auto& [a, b] : pop.relations()) {
        if (!ok) break;
        ok = text.at(witness_pos[static_cast<std::size_t>(a) - 1]) <
             text.at(witness_pos[static_cast<std::size_t>(b) - 1]);
      }
      if (!ok) record_failure(suite, "witness violates the order: " + what.str());
    }
  }
  return suite;
}

SuiteResult verify_boxed_list(const VerifyOptions& opt) {
  SuiteResult suite{"boxed-list", 0, 0, {}};
  const std::vector<std::vector<int>> coincide = {
      {1}, {1, 2}, {2, 1}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}};

  // Members: boxed and classical containment agree on every text.
  for (const std::vector<int>& vals : coincide) {
    const Permutation perm(vals);
    for (int n = 1; n <= opt.max_n; ++n) {
      for (const Permutation& text : permutations_of(n)) {
        ++suite.checks;
        const MatchResult cl =
            match_backtrack(Pattern{ClassicalPattern{perm}}, text,
                            opt.limits);
        const MatchResult bx = match_boxed(BoxedPattern{perm}, text);
        if (cl.stats.timed_out) {
          record_failure(suite, "timed out: " + perm.str());
        } else if (cl.found != bx.found) {
          record_failure(suite, "containments diverge: " + perm.str() +
                                    " / " + text.str());
        }
      }
    }
  }

  // Everything else of length <= 4 separates: some text contains the
  // pattern classically but not boxed.
  for (int k = 1; k <= 4; ++k) {
    for (const Permutation& perm : permutations_of(k)) {
      if (std::find(coincide.begin(), coincide.end(), perm.values()) !=
          coincide.end()) {
        continue;
      }
      ++suite.checks;
      bool separated = false;
      for (int n = k; n <= 9 && !separated; ++n) {
        for (const Permutation& text : permutations_of(n)) {
          const MatchResult cl = match_backtrack(
              Pattern{ClassicalPattern{perm}}, text, opt.limits);
          if (!cl.found) continue;
          if (!match_boxed(BoxedPattern{perm}, text).found) {
            separated = true;
            break;
          }
        }
      }
      if (!separated) {
        record_failure(suite,
                       "no separating text up to n=9 for " + perm.str());
      }
    }
  }
  return suite;
}

std::vector<SuiteResult> verify_all(const VerifyOptions& opt) {
  return {verify_oracles_random(opt), verify_oracle_agreement(opt),
          verify_boxed_list(opt),     verify_blowup_suite(opt),
          verify_reduction_suite(opt), verify_pop_suite(opt)};
}

}  // namespace permatch
