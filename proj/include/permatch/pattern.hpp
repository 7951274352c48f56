#pragma once

#include <optional>
#include <set>
#include <utility>
#include <variant>

#include "permatch/permutation.hpp"

namespace permatch {

using Cell = std::pair<int, int>;  // (x, y), both in [0, k]

// A mesh pattern: a permutation of length k plus a set of shaded cells of
// the (k+1) x (k+1) grid. Cell (x, y) forbids any text element whose
// position falls strictly between the x-th and (x+1)-th matched positions
// and whose value falls strictly between the y-th and (y+1)-th smallest
// matched values, with sentinels 0 and n+1 on both axes.
struct MeshPattern {
  Permutation perm;
  std::set<Cell> cells;

  MeshPattern(Permutation p, std::set<Cell> shaded);
  int k() const { return perm.size(); }
  bool operator==(const MeshPattern&) const = default;
};

struct ClassicalPattern {
  Permutation perm;
  bool operator==(const ClassicalPattern&) const = default;
};

// cols: shaded columns in [0, k]. Column c with 1 <= c <= k-1 requires the
// c-th and (c+1)-th matched positions to be adjacent; column 0 anchors the
// occurrence to the start of the text, column k to the end.
struct VincularPattern {
  Permutation perm;
  std::set<int> cols;
  bool operator==(const VincularPattern&) const = default;
};

// Adds shaded rows in [0, k]: row r requires the r-th and (r+1)-th
// smallest matched values to be adjacent; row 0 pins the minimum matched
// value to 1, row k pins the maximum to n.
struct BivincularPattern {
  Permutation perm;
  std::set<int> cols;
  std::set<int> rows;
  bool operator==(const BivincularPattern&) const = default;
};

// Interior box [1,k-1]^2 shaded: no unmatched text element may fall
// strictly inside the occurrence's position and value span.
struct BoxedPattern {
  Permutation perm;
  bool operator==(const BoxedPattern&) const = default;
};

// All interior columns shaded: the occurrence is a contiguous window.
struct ConsecutivePattern {
  Permutation perm;
  bool operator==(const ConsecutivePattern&) const = default;
};

class Pattern {
 public:
  using Variant = std::variant<ClassicalPattern, VincularPattern,
                               BivincularPattern, MeshPattern, BoxedPattern,
                               ConsecutivePattern>;
  enum class Kind { classical, vincular, bivincular, mesh, boxed, consecutive };

  Pattern(ClassicalPattern p) : v_(std::move(p)) { validate(); }
  Pattern(VincularPattern p) : v_(std::move(p)) { validate(); }
  Pattern(BivincularPattern p) : v_(std::move(p)) { validate(); }
  Pattern(MeshPattern p) : v_(std::move(p)) { validate(); }
  Pattern(BoxedPattern p) : v_(std::move(p)) { validate(); }
  Pattern(ConsecutivePattern p) : v_(std::move(p)) { validate(); }

  Kind kind() const { return static_cast<Kind>(v_.index()); }
  const Variant& alt() const { return v_; }
  const Permutation& perm() const;
  int k() const { return perm().size(); }

  bool operator==(const Pattern&) const = default;

 private:
  void validate() const;
  Variant v_;
};

// Shading statistics per class: cols counts shaded columns (vincular,
// bivincular; k-1 implied for consecutive), rows counts shaded rows
// (bivincular), cells counts shaded cells (mesh; (k-1)^2 implied for
// boxed). All other combinations are zero.
int cols(const Pattern& p);
int rows(const Pattern& p);
int cells(const Pattern& p);

// Grammar (one line):
//   <type> ': perm=' INT (' ' INT)*
//     ('; cols=' INT (',' INT)*)?   vincular, bivincular only
//     ('; rows=' INT (',' INT)*)?   bivincular only
//     ('; cells=' '(' INT ',' INT ')' (',' '(' INT ',' INT ')')*)?  mesh only
// with <type> one of classical|vincular|bivincular|mesh|boxed|consecutive.
Pattern parse_pattern(std::string_view line);
std::string print_pattern(const Pattern& p);  // canonical; round-trips

// Every class as a mesh pattern with the same occurrence semantics.
MeshPattern to_mesh(const Pattern& p);

// Does the subsequence of `text` at `positions` (1-based, strictly
// increasing, length k) realize the mesh pattern? The grid overload uses
// O(1) rectangle queries; the plain overload scans the text directly.
bool is_occurrence(const MeshPattern& m, const Permutation& text,
                   std::span<const int> positions);
bool is_occurrence(const MeshPattern& m, const Permutation& text,
                   std::span<const int> positions, const DominanceGrid& grid);

// Symmetries. Reverse maps cell (x,y) to (k-x,y), complement to (x,k-y),
// inverse to (y,x). Inverse of a strictly vincular or consecutive pattern
// leaves the class (it becomes bivincular) and raises invalid_argument.
Pattern pattern_reverse(const Pattern& p);
Pattern pattern_complement(const Pattern& p);
Pattern pattern_inverse(const Pattern& p);

// A matching assigns text values to pattern values: mu[v-1] is the text
// value taken by pattern value v. Strictly increasing in v, and the
// induced positions must increase along the pattern.
struct Matching {
  std::vector<int> mu;

  int pattern_len() const { return static_cast<int>(mu.size()); }
  int of(int pattern_value) const {
    return mu[static_cast<std::size_t>(pattern_value) - 1];
  }
  bool operator==(const Matching&) const = default;
};

Matching matching_from_positions(const Permutation& pattern_perm,
                                 const Permutation& text,
                                 std::span<const int> positions);
// Induced position sequence: position in text of mu(P(j)) for j = 1..k.
std::vector<int> matching_positions(const Matching& m,
                                    const Permutation& pattern_perm,
                                    const Permutation& text);

}  // namespace permatch
