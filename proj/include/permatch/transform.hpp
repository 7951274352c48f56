#pragma once

#include "permatch/match.hpp"

namespace permatch {

// Interleaves a fresh strictly increasing block of large values before
// the elements: p_1 .. p_k becomes (k+1) p_1 (k+2) p_2 ... (2k) p_k.
// Every monotone run of the result has length exactly 2, and applying
// the map to both pattern and text preserves classical containment in
// both directions.
Permutation blowup_run2(const Permutation& p);

// Position lift for a classical occurrence: original position q
// contributes transformed positions 2q-1 and 2q.
std::vector<int> blowup_lift_positions(const std::vector<int>& positions);

// One containment instance pushed through the blow-up and checked from
// both ends.
struct BlowupReport {
  Permutation pattern2, text2;
  int lrun_pattern = 0, lrun_text = 0;
  bool original_found = false;
  bool transformed_found = false;
  bool lift_valid = false;  // lifted witness re-checked, when one exists
  bool timed_out = false;

  bool ok() const {
    return !timed_out && lrun_pattern == 2 && lrun_text == 2 &&
           original_found == transformed_found &&
           (!original_found || lift_valid);
  }
};

// Matches p in t, maps the instance through the blow-up, matches again,
// and re-checks the lifted witness. Both searches honor `limits`.
BlowupReport verify_blowup(const Permutation& p, const Permutation& t,
                           const SearchLimits& limits = {});

}  // namespace permatch
