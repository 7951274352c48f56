#include "permatch/transform.hpp"

#include <stdexcept>

namespace permatch {

Permutation blowup_run2(const Permutation& p) {
  const int n = p.size();
  if (n == 0) throw std::invalid_argument("cannot blow up an empty permutation");
  std::vector<int> out;
  out.reserve(2 * static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    out.push_back(n + j);
    out.push_back(p.at(j));
  }
  return Permutation(std::move(out));
}

std::vector<int> blowup_lift_positions(const std::vector<int>& positions) {
  std::vector<int> out;
  out.reserve(2 * positions.size());
  int prev = 0;
  for (int q : positions) {
    if (q <= prev) throw std::invalid_argument("positions must be strictly increasing and >= 1");
    out.push_back(2 * q - 1);
    out.push_back(2 * q);
    prev = q;
  }
  return out;
}

BlowupReport verify_blowup(const Permutation& p, const Permutation& t,
                           const SearchLimits& limits) {
  BlowupReport rep;
  rep.pattern2 = blowup_run2(p);
  rep.text2 = blowup_run2(t);
  rep.lrun_pattern = lrun(rep.pattern2);
  rep.lrun_text = lrun(rep.text2);

  const Pattern orig{ClassicalPattern{p}};
  const Pattern blown{ClassicalPattern{rep.pattern2}};

  MatchResult r1 = match_backtrack(orig, t, limits);
  MatchResult r2 = match_backtrack(blown, rep.text2, limits);
  rep.timed_out = r1.stats.timed_out || r2.stats.timed_out;
  rep.original_found = r1.found;
  rep.transformed_found = r2.found;

  if (r1.found && r1.witness) {
    const std::vector<int> lifted =
        blowup_lift_positions(matching_positions(*r1.witness, p, t));
    rep.lift_valid = is_occurrence(to_mesh(blown), rep.text2, lifted);
  }
  return rep;
}

}  // namespace permatch
