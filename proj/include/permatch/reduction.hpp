#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permatch/match.hpp"

namespace permatch {

// Simple undirected graph on vertices 1..vertices(). Edges are stored
// normalized (smaller endpoint first) in lexicographic order; self-loops,
// duplicates and out-of-range endpoints are rejected.
class Graph {
 public:
  Graph() = default;
  Graph(int vertices, std::vector<std::pair<int, int>> edges);

  int vertices() const { return vertices_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int degree(int v) const;
  bool adjacent(int u, int v) const;

  bool operator==(const Graph&) const = default;

 private:
  int vertices_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

// Grammar: graph: n=6; edges=(1,2),(1,6),(2,3)
// The edges clause is omitted when the graph has no edges.
Graph parse_graph(std::string_view text);
std::string print_graph(const Graph& g);

// Backtracking search for a k-clique, visiting vertex subsets in
// lexicographic order, so a reported witness is the lexicographically
// first clique. Requires k >= 1.
struct CliqueResult {
  bool found = false;
  std::vector<int> vertices;  // ascending
  long long nodes = 0;
  bool timed_out = false;
};
CliqueResult clique_oracle(const Graph& g, int k,
                           const SearchLimits& limits = {});

// Segregated matching instance: an occurrence of `pattern` in `text`
// must map pattern values <= p exactly onto text values <= t. Requires
// 1 <= p <= k and 1 <= t <= n; a pattern longer than the text simply
// has no occurrence.
struct SppmInstance {
  Permutation pattern, text;
  int p = 0, t = 0;

  SppmInstance() = default;
  SppmInstance(Permutation pattern, Permutation text, int p, int t);
  bool operator==(const SppmInstance&) const = default;
};

// Four-line format (blank lines and #-comments are skipped):
//   pattern: 1 3 2
//   text: 5 3 1 4 2
//   p: 2
//   t: 3
SppmInstance parse_sppm(std::string_view text);
std::string print_sppm(const SppmInstance& inst);

// Depth-first search with value-bound pruning; witnesses come out in
// lexicographic position order. The exhaustive variant scans every
// position subset and is meant as an oracle for small instances.
MatchResult match_segregated(const SppmInstance& inst,
                             const SearchLimits& limits = {});
MatchResult match_segregated_exhaustive(const SppmInstance& inst,
                                        const SearchLimits& limits = {});

// --- Clique -> segregated matching ---------------------------------------
//
// The pattern lists k vertex slots as descending value pairs inside one
// guarded block, then one guarded block per unordered slot pair; the text
// encodes the graph the same way, one guarded block per edge. Repeated
// vertex letters become fresh rationals strictly between the letter and
// letter + 9/10, increasing with each use, so standardizing yields a
// permutation with the same order relations. Guard values zigzag above
// every letter element, and the segregation thresholds separate letter
// elements from guards: p = k^2 + k and t = 2l + 2m for a graph with l
// vertices and m edges. The graph has a k-clique iff the instance has a
// segregated occurrence.

struct BlockSpan {
  int begin = 0, end = 0;  // 1-based inclusive positions, guards included
  bool operator==(const BlockSpan&) const = default;
};

struct CliqueReduction {
  SppmInstance instance;
  RationalSeq pattern_values, text_values;  // before standardization
  std::vector<BlockSpan> pattern_blocks, text_blocks;  // vertex block first
  std::vector<std::pair<int, int>> edge_order;  // text edge blocks, in order
};

CliqueReduction reduce_clique_to_sppm(const Graph& g, int k);

// --- Segregated matching -> constrained pattern classes ------------------
//
// Each construction prepends a threshold marker p + 1/2 to the pattern
// and t + 1/2 to the text, then standardizes; the class-specific
// constraint pins the marker to the text marker, which makes an ordinary
// occurrence segregated. The vincular form anchors the marker by
// position (first column); the bivincular and mesh forms also prepend a
// fresh maximum to both sides and anchor it by value (top row) or by an
// empty region above it and left of the occurrence (single shaded cell).

struct VincularReduction {
  VincularPattern pattern;  // cols = {0}
  Permutation text;         // marker then the original text
};
struct BivincularReduction {
  BivincularPattern pattern;  // rows = {k + 2}
  Permutation text;           // marker, fresh maximum, original text
};
struct MeshReduction {
  MeshPattern pattern;  // cells = {(0, k + 2)}
  Permutation text;     // marker, fresh maximum, original text
};

VincularReduction reduce_sppm_to_vincular(const SppmInstance& inst);
BivincularReduction reduce_sppm_to_bivincular(const SppmInstance& inst);
MeshReduction reduce_sppm_to_mesh(const SppmInstance& inst);

// --- End-to-end agreement -------------------------------------------------
//
// Runs the clique search, the segregated matcher on the reduced
// instance, and the three onward reductions through the generic
// backtracking matcher, then compares all five answers.
struct ChainReport {
  CliqueResult clique;
  SppmInstance sppm;
  bool sppm_found = false;
  bool vincular_found = false;
  bool bivincular_found = false;
  bool mesh_found = false;
  bool timed_out = false;
  long long nodes = 0;  // total across every stage

  bool agree() const {
    return !timed_out && clique.found == sppm_found &&
           sppm_found == vincular_found && sppm_found == bivincular_found &&
           sppm_found == mesh_found;
  }
};

ChainReport verify_reduction_chain(const Graph& g, int k,
                                   const SearchLimits& limits = {});

}  // namespace permatch
