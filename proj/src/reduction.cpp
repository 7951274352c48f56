#include "permatch/reduction.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "search_util.hpp"

namespace permatch {

namespace {

using detail::Clock;
using detail::limits_hit;
using detail::ms_since;
using detail::prefix_bounds;

}  // namespace

Graph::Graph(int vertices, std::vector<std::pair<int, int>> edges)
    : vertices_(vertices) {
  if (vertices < 0) throw std::invalid_argument("vertex count must be >= 0");
  for (auto& [u, v] : edges) {
    if (u < 1 || u > vertices || v < 1 || v > vertices) {
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  ")");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  const auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw std::invalid_argument("duplicate edge: (" +
                                std::to_string(dup->first) + "," +
                                std::to_string(dup->second) + ")");
  }
  edges_ = std::move(edges);
}

int Graph::degree(int v) const {
  if (v < 1 || v > vertices_) {
    throw std::invalid_argument("vertex out of range: " + std::to_string(v));
  }
  int d = 0;
  for (const auto& [a, b] : edges_) d += (a == v) + (b == v);
  return d;
}

bool Graph::adjacent(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::pair{u, v});
}

namespace {

// Minimal cursor-based scanner shared by the graph and instance parsers.
struct Scanner {
  std::string_view s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() &&
           std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
    }
  }
  bool eat(std::string_view word) {
    skip_ws();
    if (s.substr(i, word.size()) != word) return false;
    i += word.size();
    return true;
  }
  void expect(std::string_view word) {
    if (!eat(word)) {
      throw ParseError("expected '" + std::string(word) + "' at offset " +
                       std::to_string(i));
    }
  }
  int read_int() {
    skip_ws();
    int value = 0;
    const auto begin = s.data() + i;
    const auto res = std::from_chars(begin, s.data() + s.size(), value);
    if (res.ec != std::errc{}) {
      throw ParseError("expected an integer at offset " + std::to_string(i));
    }
    i += static_cast<std::size_t>(res.ptr - begin);
    return value;
  }
  bool done() {
    skip_ws();
    return i == s.size();
  }
};

}  // namespace

Graph parse_graph(std::string_view text) {
  Scanner sc{text};
  sc.expect("graph:");
  sc.expect("n=");
  const int n = sc.read_int();
  std::vector<std::pair<int, int>> edges;
  if (sc.eat(";")) {
    sc.expect("edges=");
    do {
      sc.expect("(");
      const int u = sc.read_int();
      sc.expect(",");
      const int v = sc.read_int();
      sc.expect(")");
      edges.emplace_back(u, v);
    } while (sc.eat(","));
  }
  if (!sc.done()) {
    throw ParseError("trailing input at offset " + std::to_string(sc.i));
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string print_graph(const Graph& g) {
  std::ostringstream out;
  out << "graph: n=" << g.vertices();
  if (g.edge_count() > 0) {
    out << "; edges=";
    bool first = true;
    for (const auto& [u, v] : g.edges()) {
      if (!first) out << ",";
      out << "(" << u << "," << v << ")";
      first = false;
    }
  }
  return out.str();
}

CliqueResult clique_oracle(const Graph& g, int k, const SearchLimits& limits) {
  if (k < 1) throw std::invalid_argument("clique size must be >= 1");
  CliqueResult result;
  MatchStats stats;
  const int l = g.vertices();
  if (limits_hit(limits, stats)) {
    result.timed_out = true;
    return result;
  }

  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(k));
  // Lexicographic DFS: extend with the smallest vertex adjacent to all
  // chosen so far; the first complete clique is the lex-first one.
  std::function<bool(int)> grow = [&](int from) -> bool {
    if (static_cast<int>(chosen.size()) == k) {
      result.found = true;
      result.vertices = chosen;
      return false;
    }
    const int need = k - static_cast<int>(chosen.size());
    for (int v = from; v + need - 1 <= l; ++v) {
      ++stats.nodes;
      if ((stats.nodes & 4095) == 0 && limits_hit(limits, stats)) {
        result.timed_out = true;
        return false;
      }
      bool ok = true;
      for (int c : chosen) {
        if (!g.adjacent(c, v)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(v);
      if (!grow(v + 1)) return false;
      chosen.pop_back();
    }
    return true;
  };
  grow(1);
  result.nodes = stats.nodes;
  return result;
}

SppmInstance::SppmInstance(Permutation pattern_in, Permutation text_in,
                           int p_in, int t_in)
    : pattern(std::move(pattern_in)),
      text(std::move(text_in)),
      p(p_in),
      t(t_in) {
  if (pattern.empty() || text.empty()) {
    throw std::invalid_argument("pattern and text must be non-empty");
  }
  if (p < 1 || p > pattern.size()) {
    throw std::invalid_argument("threshold p must lie in [1, k]");
  }
  if (t < 1 || t > text.size()) {
    throw std::invalid_argument("threshold t must lie in [1, n]");
  }
}

SppmInstance parse_sppm(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  std::istringstream in{std::string(text)};
  while (std::getline(in, current)) {
    const auto begin = current.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;   // blank line
    if (current[begin] == '#') continue;        // comment line
    const auto end = current.find_last_not_of(" \t\r");
    lines.push_back(current.substr(begin, end - begin + 1));
  }
  if (lines.size() != 4) {
    throw ParseError("expected four lines: pattern:, text:, p:, t:");
  }
  const auto tail = [](const std::string& line,
                       std::string_view key) -> std::string {
    if (line.substr(0, key.size()) != key) {
      throw ParseError("expected line to start with '" + std::string(key) +
                       "': " + line);
    }
    return line.substr(key.size());
  };
  const auto to_int = [](const std::string& s) {
    Scanner sc{s};
    const int v = sc.read_int();
    if (!sc.done()) throw ParseError("trailing input after integer: " + s);
    return v;
  };
  const Permutation pattern = parse_permutation(tail(lines[0], "pattern:"));
  const Permutation body = parse_permutation(tail(lines[1], "text:"));
  const int p = to_int(tail(lines[2], "p:"));
  const int t = to_int(tail(lines[3], "t:"));
  try {
    return SppmInstance(pattern, body, p, t);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string print_sppm(const SppmInstance& inst) {
  std::ostringstream out;
  out << "pattern: " << inst.pattern.str() << "\n";
  out << "text: " << inst.text.str() << "\n";
  out << "p: " << inst.p << "\n";
  out << "t: " << inst.t << "\n";
  return out.str();
}

MatchResult match_segregated(const SppmInstance& inst,
                             const SearchLimits& limits) {
  const auto start = Clock::now();
  MatchResult result;
  const Permutation& P = inst.pattern;
  const Permutation& T = inst.text;
  const int k = P.size(), n = T.size();
  if (limits_hit(limits, result.stats)) {
    result.stats.timed_out = true;
    result.stats.elapsed_ms = ms_since(start);
    return result;
  }
  if (k <= n) {
    std::vector<int> pred, succ;
    prefix_bounds(P, pred, succ);
    std::vector<int> pos(static_cast<std::size_t>(k) + 1, 0);
    std::vector<int> val(static_cast<std::size_t>(k) + 1, 0);
    std::vector<int> witness_pos;

    std::function<bool(int)> dfs = [&](int j) -> bool {
      if (j > k) {
        result.found = true;
        witness_pos.assign(pos.begin() + 1, pos.end());
        return false;
      }
      const int q = P.at(j);
      const bool small_q = q <= inst.p;
      const int hi = n - (k - j);
      for (int i = pos[static_cast<std::size_t>(j) - 1] + 1; i <= hi; ++i) {
        ++result.stats.nodes;
        if ((result.stats.nodes & 4095) == 0 &&
            limits_hit(limits, result.stats)) {
          result.stats.timed_out = true;
          return false;
        }
        const int w = T.at(i);
        if ((w <= inst.t) != small_q) continue;
        const int vlo =
            pred[static_cast<std::size_t>(j)]
                ? val[static_cast<std::size_t>(pred[static_cast<std::size_t>(j)])]
                : 0;
        const int vhi =
            succ[static_cast<std::size_t>(j)]
                ? val[static_cast<std::size_t>(succ[static_cast<std::size_t>(j)])]
                : n + 1;
        if (w <= vlo || w >= vhi) continue;
        pos[static_cast<std::size_t>(j)] = i;
        val[static_cast<std::size_t>(j)] = w;
        if (!dfs(j + 1)) return false;
      }
      pos[static_cast<std::size_t>(j)] = 0;
      val[static_cast<std::size_t>(j)] = 0;
      return true;
    };
    dfs(1);
    if (result.found) {
      result.witness = matching_from_positions(P, T, witness_pos);
    }
  }
  result.stats.elapsed_ms = ms_since(start);
  return result;
}

MatchResult match_segregated_exhaustive(const SppmInstance& inst,
                                        const SearchLimits& limits) {
  const auto start = Clock::now();
  MatchResult result;
  const Permutation& P = inst.pattern;
  const Permutation& T = inst.text;
  const int k = P.size(), n = T.size();
  if (limits_hit(limits, result.stats)) {
    result.stats.timed_out = true;
    result.stats.elapsed_ms = ms_since(start);
    return result;
  }
  if (k <= n) {
    std::vector<int> pos(static_cast<std::size_t>(k));
    std::iota(pos.begin(), pos.end(), 1);
    while (true) {
      ++result.stats.nodes;
      if ((result.stats.nodes & 4095) == 0 && limits_hit(limits, result.stats)) {
        result.stats.timed_out = true;
        break;
      }
      bool ok = true;
      for (int a = 0; a < k && ok; ++a) {
        const int q = P.at(a + 1);
        const int w = T.at(pos[static_cast<std::size_t>(a)]);
        if ((q <= inst.p) != (w <= inst.t)) ok = false;
        for (int b = a + 1; b < k && ok; ++b) {
          if ((q < P.at(b + 1)) !=
              (w < T.at(pos[static_cast<std::size_t>(b)]))) {
            ok = false;
          }
        }
      }
      if (ok) {
        result.found = true;
        result.witness = matching_from_positions(P, T, pos);
        break;
      }
      // advance to the next position subset in lexicographic order
      int j = k - 1;
      while (j >= 0 && pos[static_cast<std::size_t>(j)] == n - (k - 1 - j)) {
        --j;
      }
      if (j < 0) break;
      ++pos[static_cast<std::size_t>(j)];
      for (int r = j + 1; r < k; ++r) {
        pos[static_cast<std::size_t>(r)] = pos[static_cast<std::size_t>(r) - 1] + 1;
      }
    }
  }
  result.stats.elapsed_ms = ms_since(start);
  return result;
}

namespace {

// Fresh value strictly between `letter` and letter + 9/10 for its i-th
// reuse: tenths while they last, otherwise scaled into the same gap.
Rational copy_value(int letter, int index, int copies) {
  if (copies <= 8) return Rational(10LL * letter + index, 10);
  return Rational(10LL * letter * (copies + 1) + 9LL * index,
                  10LL * (copies + 1));
}

}  // namespace

CliqueReduction reduce_clique_to_sppm(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("clique size must be >= 1");
  if (g.vertices() < 1) {
    throw std::invalid_argument("graph needs at least one vertex");
  }
  const int l = g.vertices(), m = g.edge_count();
  CliqueReduction red;
  red.edge_order = g.edges();

  const auto build = [](RationalSeq& seq, std::vector<BlockSpan>& blocks,
                        int max_letter_value, int block_count,
                        const std::function<void(int)>& emit_block) {
    int done = 0;
    for (int b = 0; b < block_count; ++b) {
      blocks.push_back({static_cast<int>(seq.size()) + 1, 0});
      seq.push_back(Rational(max_letter_value + 2 * done + 2));  // opening guard
      emit_block(b);
      seq.push_back(Rational(max_letter_value + 2 * done + 1));  // closing guard
      ++done;
      blocks.back().end = static_cast<int>(seq.size());
    }
  };

  // Pattern: one block of k vertex slots, then one block per slot pair
  // (a, b), a < b, in lexicographic order. Each letter recurs k - 1 times.
  const int pmax = k * k + k;
  std::vector<int> used_p(static_cast<std::size_t>(k) + 1, 0);
  std::vector<std::pair<int, int>> slot_pairs;
  for (int a = 1; a <= k; ++a) {
    for (int b = a + 1; b <= k; ++b) slot_pairs.emplace_back(a, b);
  }
  build(red.pattern_values, red.pattern_blocks, pmax,
        1 + static_cast<int>(slot_pairs.size()), [&](int b) {
          if (b == 0) {
            for (int j = 1; j <= k; ++j) {
              red.pattern_values.push_back(Rational(10LL * j + 9, 10));
              red.pattern_values.push_back(Rational(j));
            }
            return;
          }
          const auto [x, y] = slot_pairs[static_cast<std::size_t>(b) - 1];
          red.pattern_values.push_back(
              copy_value(x, ++used_p[static_cast<std::size_t>(x)], k - 1));
          red.pattern_values.push_back(
              copy_value(y, ++used_p[static_cast<std::size_t>(y)], k - 1));
        });

  // Text: one block of all l vertices, then one block per edge in
  // lexicographic order. Each letter recurs once per incident edge.
  const int tmax = 2 * l + 2 * m;
  std::vector<int> used_t(static_cast<std::size_t>(l) + 1, 0);
  build(red.text_values, red.text_blocks, tmax, 1 + m, [&](int b) {
    if (b == 0) {
      for (int j = 1; j <= l; ++j) {
        red.text_values.push_back(Rational(10LL * j + 9, 10));
        red.text_values.push_back(Rational(j));
      }
      return;
    }
    const auto [u, v] = red.edge_order[static_cast<std::size_t>(b) - 1];
    red.text_values.push_back(
        copy_value(u, ++used_t[static_cast<std::size_t>(u)], g.degree(u)));
    red.text_values.push_back(
        copy_value(v, ++used_t[static_cast<std::size_t>(v)], g.degree(v)));
  });

  red.instance = SppmInstance(standardize(red.pattern_values),
                              standardize(red.text_values), pmax, tmax);
  return red;
}

namespace {

// Threshold marker (and optionally a fresh maximum) prepended to a
// permutation, as rationals ready for standardization.
RationalSeq with_marker(const Permutation& perm, int threshold,
                        bool with_max) {
  RationalSeq seq;
  seq.reserve(perm.size() + 2);
  seq.push_back(Rational(2LL * threshold + 1, 2));
  if (with_max) seq.push_back(Rational(perm.size() + 1));
  for (int i = 1; i <= perm.size(); ++i) seq.push_back(Rational(perm.at(i)));
  return seq;
}

}  // namespace

VincularReduction reduce_sppm_to_vincular(const SppmInstance& inst) {
  return {VincularPattern{standardize(with_marker(inst.pattern, inst.p, false)),
                          {0}},
          standardize(with_marker(inst.text, inst.t, false))};
}

BivincularReduction reduce_sppm_to_bivincular(const SppmInstance& inst) {
  const int k2 = inst.pattern.size() + 2;
  return {BivincularPattern{standardize(with_marker(inst.pattern, inst.p, true)),
                            {},
                            {k2}},
          standardize(with_marker(inst.text, inst.t, true))};
}

MeshReduction reduce_sppm_to_mesh(const SppmInstance& inst) {
  const int k2 = inst.pattern.size() + 2;
  return {MeshPattern(standardize(with_marker(inst.pattern, inst.p, true)),
                      {{0, k2}}),
          standardize(with_marker(inst.text, inst.t, true))};
}

ChainReport verify_reduction_chain(const Graph& g, int k,
                                   const SearchLimits& limits) {
  ChainReport report;
  report.clique = clique_oracle(g, k, limits);
  report.nodes += report.clique.nodes;
  report.timed_out = report.clique.timed_out;

  const CliqueReduction red = reduce_clique_to_sppm(g, k);
  report.sppm = red.instance;

  const MatchResult seg = match_segregated(red.instance, limits);
  report.sppm_found = seg.found;
  report.nodes += seg.stats.nodes;
  report.timed_out = report.timed_out || seg.stats.timed_out;

  const VincularReduction vin = reduce_sppm_to_vincular(red.instance);
  const BivincularReduction biv = reduce_sppm_to_bivincular(red.instance);
  const MeshReduction mesh = reduce_sppm_to_mesh(red.instance);

  const MatchResult rv = match_backtrack(Pattern{vin.pattern}, vin.text, limits);
  const MatchResult rb = match_backtrack(Pattern{biv.pattern}, biv.text, limits);
  const MatchResult rm =
      match_backtrack(Pattern{mesh.pattern}, mesh.text, limits);
  report.vincular_found = rv.found;
  report.bivincular_found = rb.found;
  report.mesh_found = rm.found;
  report.nodes += rv.stats.nodes + rb.stats.nodes + rm.stats.nodes;
  report.timed_out = report.timed_out || rv.stats.timed_out ||
                     rb.stats.timed_out || rm.stats.timed_out;
  return report;
}

}  // namespace permatch
