#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permatch/match.hpp"

namespace permatch {

// Budgets for the self-check suites. Defaults match the shipped
// acceptance scales; unit tests shrink them.
struct VerifyOptions {
  std::uint64_t seed = 0;
  int trials = 2000;       // random oracle sweep
  int max_n = 6;           // largest text length in the sweeps
  int mesh_samples = 400;  // shadings sampled per length-3 permutation
  bool mesh_full = false;  // enumerate all length-3 shadings instead
  int blowup_pairs = 500;
  int reduction_random = 200;
  int random_graphs = 40;
  int pop_trials = 100;
  SearchLimits limits;  // applied to every search the suites run
};

struct SuiteResult {
  std::string name;
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> examples;  // first few failures, printable

  bool ok() const { return failures == 0 && checks > 0; }
};

// Random instances across all six pattern classes: the backtracking,
// dispatched, and exhaustive matchers must agree on the answer, the
// backtracker must reproduce the exhaustive witness and count, and every
// witness must re-check as an occurrence.
SuiteResult verify_oracles_random(const VerifyOptions& opt = {});

// Exhaustive agreement sweep: every pattern of length <= 3 in every
// class (length-3 mesh shadings sampled unless mesh_full), against
// every text of length <= max_n.
SuiteResult verify_oracle_agreement(const VerifyOptions& opt = {});

// The permutations whose boxed and classical containment coincide are
// exactly 1, 12, 21, 132, 213, 231, 312: members agree on every text of
// length <= max_n, every other pattern of length <= 4 gets a text (of
// length <= 9) it occurs in classically but not boxed.
SuiteResult verify_boxed_list(const VerifyOptions& opt = {});

// Random pattern/text pairs pushed through the run-length-2 blow-up;
// each report must come back ok.
SuiteResult verify_blowup_suite(const VerifyOptions& opt = {});

// Every 4-vertex graph with clique targets 2..4 plus random graphs and
// random segregated instances: all encodings must agree, and each
// reduced pattern must carry exactly one constraint.
SuiteResult verify_reduction_suite(const VerifyOptions& opt = {});

// Random partially ordered patterns against brute force; completion
// counts stay within k!.
SuiteResult verify_pop_suite(const VerifyOptions& opt = {});

std::vector<SuiteResult> verify_all(const VerifyOptions& opt = {});

}  // namespace permatch
