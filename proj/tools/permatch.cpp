// Command-line front end for the permatch library.
//
// Exit codes: 0 = occurrence found / all checks passed / output produced,
//             1 = no occurrence / some check failed,
//             2 = usage or parse error,
//             3 = a search hit its time cap (answer undetermined).

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "permatch/bench.hpp"
#include "permatch/match.hpp"
#include "permatch/pattern.hpp"
#include "permatch/permutation.hpp"
#include "permatch/reduction.hpp"
#include "permatch/transform.hpp"
#include "permatch/verify.hpp"

using namespace permatch;

namespace {

constexpr int kExitFound = 0;
constexpr int kExitNone = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTimeout = 3;

struct GlobalArgs {
  std::uint64_t seed = 0;
  double time_cap = 0.0;  // seconds; 0 = unlimited
  int jobs = 1;           // accepted for interface stability; runs are
                          // sequential, which keeps output deterministic
  bool quiet = false;
};

SearchLimits limits_from(const GlobalArgs& g) {
  SearchLimits limits;
  if (g.time_cap > 0.0) {
    limits.deadline = std::chrono::steady_clock::now() +
                      std::chrono::duration_cast<
                          std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(g.time_cap));
  }
  return limits;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Trimmed lines with blanks and #-comments dropped.
std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string current;
  while (std::getline(in, current)) {
    const auto begin = current.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    if (current[begin] == '#') continue;
    const auto end = current.find_last_not_of(" \t\r");
    lines.push_back(current.substr(begin, end - begin + 1));
  }
  return lines;
}

std::string single_content_line(const std::string& text, const char* what) {
  const std::vector<std::string> lines = content_lines(text);
  if (lines.size() != 1) {
    throw ParseError(std::string("expected exactly one ") + what +
                     " line, got " + std::to_string(lines.size()));
  }
  return lines.front();
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

// ---------------------------------------------------------------- match

struct MatchArgs {
  std::string pattern, pattern_file;
  std::string text, text_file;
  std::string algo = "auto";
  bool count = false;
  long long enumerate_cap = -1;  // -1 = off, 0 = all
};

std::string resolve(const std::string& inline_value,
                    const std::string& file_value, const char* what) {
  if (!inline_value.empty()) return inline_value;
  if (!file_value.empty()) {
    return single_content_line(read_file(file_value), what);
  }
  throw ParseError(std::string("missing ") + what +
                   " (give --" + what + " or --" + what + "-file)");
}

int run_match(const GlobalArgs& g, const MatchArgs& a) {
  static const std::map<std::string, Algo> kAlgoByName = {
      {"auto", Algo::auto_},         {"exhaustive", Algo::exhaustive},
      {"backtrack", Algo::backtrack}, {"consecutive", Algo::consecutive},
      {"boxed", Algo::boxed},        {"lis", Algo::lis},
      {"separable", Algo::separable}};

  const std::string pattern_line = resolve(a.pattern, a.pattern_file, "pattern");
  const std::string text_line = resolve(a.text, a.text_file, "text");
  const Permutation text = parse_permutation(text_line);
  const SearchLimits limits = limits_from(g);

  // Partially ordered patterns take their own matcher.
  if (pattern_line.rfind("pop:", 0) == 0) {
    if (a.algo != "auto") {
      throw std::invalid_argument(
          "--algo does not apply to partially ordered patterns");
    }
    if (a.enumerate_cap >= 0) {
      throw std::invalid_argument(
          "--enumerate does not apply to partially ordered patterns");
    }
    const PopPattern pop = parse_pop(pattern_line);
    const MatchResult r = match_pop(pop, text, limits);
    if (r.stats.timed_out) {
      if (!g.quiet) std::cout << "timeout\n";
      return kExitTimeout;
    }
    if (!r.found) {
      if (!g.quiet) std::cout << "no\n";
      return kExitNone;
    }
    std::vector<int> positions;
    for (int v : r.witness->mu) positions.push_back(text.position_of(v));
    std::sort(positions.begin(), positions.end());
    bool valid = true;
    for (const auto& [lo, hi] : pop.relations()) {
      valid = valid && text.at(positions[static_cast<std::size_t>(lo) - 1]) <
                           text.at(positions[static_cast<std::size_t>(hi) - 1]);
    }
    if (!valid) {
      std::cerr << "internal error: witness failed its re-check\n";
      return kExitNone;
    }
    if (!g.quiet) {
      std::cout << "yes\npositions: " << join(positions) << "\nvalues:";
      for (int p : positions) std::cout << ' ' << text.at(p);
      std::cout << "\nwitness: verified\n";
      if (a.count) {
        const CountResult c = count_pop(pop, text, limits);
        if (c.stats.timed_out) {
          std::cout << "timeout\n";
          return kExitTimeout;
        }
        std::cout << "count: " << c.count << "\n";
      }
    }
    return kExitFound;
  }

  const Pattern p = parse_pattern(pattern_line);
  MatchOptions options;
  options.algo = kAlgoByName.at(a.algo);
  options.limits = limits;
  const MatchResult r = match(p, text, options);
  if (r.stats.timed_out) {
    if (!g.quiet) std::cout << "timeout\n";
    return kExitTimeout;
  }
  if (!r.found) {
    if (!g.quiet) std::cout << "no\n";
    return kExitNone;
  }

  const std::vector<int> positions =
      matching_positions(*r.witness, p.perm(), text);
  if (!is_occurrence(to_mesh(p), text, positions)) {
    std::cerr << "internal error: witness failed its re-check\n";
    return kExitNone;
  }
  if (!g.quiet) {
    std::cout << "yes\nmu:";
    for (int v = 1; v <= p.k(); ++v) {
      std::cout << ' ' << v << "->" << r.witness->of(v);
    }
    std::cout << "\npositions: " << join(positions) << "\nvalues:";
    for (int pos : positions) std::cout << ' ' << text.at(pos);
    std::cout << "\nwitness: verified\n";
    if (a.count) {
      const CountResult c = count_occurrences(p, text, limits);
      if (c.stats.timed_out) {
        std::cout << "timeout\n";
        return kExitTimeout;
      }
      std::cout << "count: " << c.count << "\n";
    }
    if (a.enumerate_cap >= 0) {
      const std::size_t cap = a.enumerate_cap == 0
                                  ? static_cast<std::size_t>(-1)
                                  : static_cast<std::size_t>(a.enumerate_cap);
      for (const std::vector<int>& occ :
           enumerate_occurrences(p, text, cap, limits)) {
        std::cout << "occurrence: " << join(occ) << "\n";
      }
    }
  }
  return kExitFound;
}

// ------------------------------------------------------------ transform

struct TransformArgs {
  std::string kind;
  std::string pattern, text;
};

int run_transform(const GlobalArgs& g, const TransformArgs& a) {
  if (a.pattern.empty() && a.text.empty()) {
    throw ParseError("transform needs --pattern and/or --text");
  }
  std::string pattern_out, text_out;
  if (!a.pattern.empty()) {
    const Pattern p = parse_pattern(a.pattern);
    if (a.kind == "reverse") {
      pattern_out = print_pattern(pattern_reverse(p));
    } else if (a.kind == "complement") {
      pattern_out = print_pattern(pattern_complement(p));
    } else if (a.kind == "inverse") {
      pattern_out = print_pattern(pattern_inverse(p));
    } else {  // blowup
      if (p.kind() != Pattern::Kind::classical) {
        throw std::invalid_argument(
            "the blow-up applies to classical patterns only");
      }
      pattern_out =
          print_pattern(Pattern{ClassicalPattern{blowup_run2(p.perm())}});
    }
  }
  if (!a.text.empty()) {
    const Permutation t = parse_permutation(a.text);
    if (a.kind == "reverse") {
      text_out = reverse(t).str();
    } else if (a.kind == "complement") {
      text_out = complement(t).str();
    } else if (a.kind == "inverse") {
      text_out = inverse(t).str();
    } else {
      text_out = blowup_run2(t).str();
    }
  }
  if (!g.quiet) {
    if (!pattern_out.empty()) std::cout << pattern_out << "\n";
    if (!text_out.empty()) std::cout << text_out << "\n";
  }
  return kExitFound;
}

// --------------------------------------------------------------- reduce

struct ReduceArgs {
  std::string kind;
  std::string input_file, inline_text;
  int k = 0;
};

std::string load_instance(const ReduceArgs& a) {
  if (!a.inline_text.empty() && !a.input_file.empty()) {
    throw ParseError("give either --input or --inline, not both");
  }
  if (!a.inline_text.empty()) return a.inline_text;
  if (!a.input_file.empty()) return read_file(a.input_file);
  throw ParseError("reduce needs --input <file> or --inline <text>");
}

void print_block_spans(const std::vector<BlockSpan>& spans,
                       const std::vector<std::pair<int, int>>& pair_labels,
                       const char* side, const char* first_label) {
  for (std::size_t i = 0; i < spans.size(); ++i) {
    std::cout << "# " << side << ' ';
    if (i == 0) {
      std::cout << first_label;
    } else {
      const auto& [u, v] = pair_labels[i - 1];
      std::cout << "block (" << u << "," << v << ")";
    }
    std::cout << ": positions " << spans[i].begin << "-" << spans[i].end
              << "\n";
  }
}

int run_reduce(const GlobalArgs& g, const ReduceArgs& a) {
  const std::string input = load_instance(a);
  if (a.kind == "clique-sppm") {
    if (a.k < 1) throw ParseError("clique-sppm needs --k >= 1");
    const Graph graph = parse_graph(single_content_line(input, "graph"));
    if (a.k > graph.vertices()) {
      throw ParseError("clique size " + std::to_string(a.k) +
                       " exceeds vertex count " +
                       std::to_string(graph.vertices()));
    }
    const CliqueReduction red = reduce_clique_to_sppm(graph, a.k);
    if (!g.quiet) {
      std::cout << "# vertices: " << graph.vertices()
                << ", edges: " << graph.edge_count()
                << ", clique target: " << a.k << "\n";
      std::vector<std::pair<int, int>> slot_pairs;
      for (int x = 1; x <= a.k; ++x) {
        for (int y = x + 1; y <= a.k; ++y) slot_pairs.emplace_back(x, y);
      }
      print_block_spans(red.pattern_blocks, slot_pairs, "pattern",
                        "slot block");
      print_block_spans(red.text_blocks, red.edge_order, "text",
                        "vertex block");
      std::cout << print_sppm(red.instance);
    }
    return kExitFound;
  }

  if (a.k != 0) throw ParseError("--k only applies to clique-sppm");
  const SppmInstance inst = parse_sppm(input);
  std::string pattern_line, text_line;
  if (a.kind == "sppm-vincular") {
    const VincularReduction red = reduce_sppm_to_vincular(inst);
    pattern_line = print_pattern(Pattern{red.pattern});
    text_line = red.text.str();
  } else if (a.kind == "sppm-bivincular") {
    const BivincularReduction red = reduce_sppm_to_bivincular(inst);
    pattern_line = print_pattern(Pattern{red.pattern});
    text_line = red.text.str();
  } else {  // sppm-mesh
    const MeshReduction red = reduce_sppm_to_mesh(inst);
    pattern_line = print_pattern(Pattern{red.pattern});
    text_line = red.text.str();
  }
  if (!g.quiet) {
    std::cout << "# from segregated instance with p=" << inst.p
              << ", t=" << inst.t << "\n"
              << pattern_line << "\n"
              << text_line << "\n";
  }
  return kExitFound;
}

// --------------------------------------------------------------- verify

struct VerifyArgs {
  int trials = 2000;
  int max_n = 6;
  int mesh_samples = 400;
  bool mesh_full = false;
  int blowup_cases = 500;
  int reduction_cases = 200;
  int random_graphs = 40;
  int pop_cases = 100;
  int boxed_max_n = 7;
  int vertices = 4;
  int k_max = 4;
};

VerifyOptions options_from(const GlobalArgs& g, const VerifyArgs& a) {
  VerifyOptions opt;
  opt.seed = g.seed;
  opt.trials = a.trials;
  opt.max_n = a.max_n;
  opt.mesh_samples = a.mesh_samples;
  opt.mesh_full = a.mesh_full;
  opt.blowup_pairs = a.blowup_cases;
  opt.reduction_random = a.reduction_cases;
  opt.random_graphs = a.random_graphs;
  opt.pop_trials = a.pop_cases;
  opt.limits = limits_from(g);
  return opt;
}

int report_suites(const std::vector<SuiteResult>& suites, bool quiet) {
  bool all_ok = true;
  for (const SuiteResult& s : suites) {
    all_ok = all_ok && s.ok();
    if (!quiet) {
      std::cout << s.name << ": " << s.checks << " checks, " << s.failures
                << " failures\n";
      for (const std::string& ex : s.examples) {
        std::cout << "  " << ex << "\n";
      }
    }
  }
  if (!quiet) std::cout << (all_ok ? "ok" : "FAILED") << "\n";
  return all_ok ? kExitFound : kExitNone;
}

int run_reduction_chain(const GlobalArgs& g, const VerifyArgs& a) {
  SuiteResult suite{"reduction-chain", 0, 0, {}};
  std::vector<std::pair<int, int>> slots;
  for (int u = 1; u <= a.vertices; ++u) {
    for (int v = u + 1; v <= a.vertices; ++v) slots.emplace_back(u, v);
  }
  const SearchLimits limits = limits_from(g);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size());
       ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t e = 0; e < slots.size(); ++e) {
      if (mask & (std::uint64_t{1} << e)) edges.push_back(slots[e]);
    }
    const Graph graph(a.vertices, std::move(edges));
    for (int k = 2; k <= a.k_max; ++k) {
      ++suite.checks;
      const ChainReport rep = verify_reduction_chain(graph, k, limits);
      if (!rep.agree()) {
        ++suite.failures;
        if (suite.examples.size() < 5) {
          suite.examples.push_back("chain disagrees: " + print_graph(graph) +
                                   " k=" + std::to_string(k));
        }
      }
    }
  }
  return report_suites({suite}, g.quiet);
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::string family;
  std::vector<int> sizes;
  double min_ms = 200.0;
};

int run_bench(const GlobalArgs& g, const BenchArgs& a) {
  const BenchReport rep = bench_family(a.family, a.sizes, a.min_ms);
  if (!g.quiet) {
    std::cout << "# family\tk\tn\tnodes\tms\n";
    for (const BenchRow& row : rep.rows) {
      std::ostringstream ms;
      ms.precision(3);
      ms << std::fixed << row.ms;
      std::cout << rep.family << '\t' << rep.k << '\t' << row.n << '\t'
                << row.nodes << '\t' << ms.str() << "\n";
    }
    if (rep.rows.size() >= 2) {
      std::ostringstream slope;
      slope.precision(2);
      slope << std::fixed << rep.slope;
      std::cout << "# slope: " << slope.str() << "\n";
    }
  }
  return kExitFound;
}

// ---------------------------------------------------------------- stats

struct StatsArgs {
  std::string pattern, text;
};

int run_stats(const GlobalArgs& g, const StatsArgs& a) {
  if (a.pattern.empty() && a.text.empty()) {
    throw ParseError("stats needs --pattern and/or --text");
  }
  if (!a.pattern.empty()) {
    const Pattern p = parse_pattern(a.pattern);
    const std::string printed = print_pattern(p);
    if (!g.quiet) {
      std::cout << "class: " << printed.substr(0, printed.find(':')) << "\n"
                << "k: " << p.k() << "\n"
                << "cols: " << cols(p) << "\n"
                << "rows: " << rows(p) << "\n"
                << "cells: " << cells(p) << "\n";
    }
  }
  if (!a.text.empty()) {
    const Permutation t = parse_permutation(a.text);
    if (!g.quiet) {
      std::cout << "n: " << t.size() << "\n" << "runs:";
      bool first = true;
      for (const Run& r : runs(t)) {
        std::cout << (first ? " " : ", ") << r.begin << '-' << r.end
                  << (r.ascending ? " asc" : " desc");
        first = false;
      }
      std::cout << "\nlrun: " << lrun(t) << "\n"
                << "inverse: " << inverse(t).str() << "\n";
    }
  }
  return kExitFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "permatch - permutation pattern matching toolkit\n"
      "Patterns come in six classes (classical, vincular, bivincular, mesh,\n"
      "boxed, consecutive) plus partially ordered ones; texts are plain\n"
      "permutations. See README.md for the grammars."};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalArgs g;
  app.add_option("--seed", g.seed, "Seed for randomized sweeps")
      ->capture_default_str();
  app.add_option("--time-cap", g.time_cap,
                 "Abort searches after this many seconds (0 = unlimited)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--jobs", g.jobs,
                 "Reserved worker count; cases always run sequentially")
      ->check(CLI::PositiveNumber);
  app.add_flag("--quiet", g.quiet, "Suppress output; rely on exit codes");

  // match
  MatchArgs match_args;
  CLI::App* cmd_match =
      app.add_subcommand("match", "Search one pattern in one text");
  cmd_match->fallthrough();
  cmd_match->add_option("--pattern", match_args.pattern, "Pattern line");
  cmd_match->add_option("--pattern-file", match_args.pattern_file,
                        "File holding one pattern line");
  cmd_match->add_option("--text", match_args.text, "Text permutation");
  cmd_match->add_option("--text-file", match_args.text_file,
                        "File holding one text line");
  cmd_match
      ->add_option("--algo", match_args.algo,
                   "auto|exhaustive|backtrack|consecutive|boxed|lis|separable")
      ->check(CLI::IsMember({"auto", "exhaustive", "backtrack", "consecutive",
                             "boxed", "lis", "separable"}))
      ->capture_default_str();
  cmd_match->add_flag("--count", match_args.count,
                      "Also print the occurrence count");
  cmd_match
      ->add_option("--enumerate", match_args.enumerate_cap,
                   "Print occurrences in lexicographic order (0 = all)")
      ->check(CLI::NonNegativeNumber);

  // transform
  TransformArgs transform_args;
  CLI::App* cmd_transform = app.add_subcommand(
      "transform", "Apply a symmetry or the run-length-2 blow-up");
  cmd_transform->fallthrough();
  cmd_transform
      ->add_option("kind", transform_args.kind,
                   "reverse|complement|inverse|blowup")
      ->required()
      ->check(CLI::IsMember({"reverse", "complement", "inverse", "blowup"}));
  cmd_transform->add_option("--pattern", transform_args.pattern,
                            "Pattern line to transform");
  cmd_transform->add_option("--text", transform_args.text,
                            "Text permutation to transform");

  // reduce
  ReduceArgs reduce_args;
  CLI::App* cmd_reduce = app.add_subcommand(
      "reduce", "Construct a reduced instance (with trace comments)");
  cmd_reduce->fallthrough();
  cmd_reduce
      ->add_option("kind", reduce_args.kind,
                   "clique-sppm|sppm-vincular|sppm-bivincular|sppm-mesh")
      ->required()
      ->check(CLI::IsMember(
          {"clique-sppm", "sppm-vincular", "sppm-bivincular", "sppm-mesh"}));
  cmd_reduce->add_option("--input", reduce_args.input_file,
                         "Instance file (graph line or four-line instance)");
  cmd_reduce->add_option("--inline", reduce_args.inline_text,
                         "Instance text given directly");
  cmd_reduce->add_option("--k", reduce_args.k,
                         "Clique size (clique-sppm only)");

  // verify
  VerifyArgs verify_args;
  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "Run a self-check suite; nonzero exit on any failure");
  cmd_verify->fallthrough();
  cmd_verify->require_subcommand(1);
  CLI::App* v_oracles = cmd_verify->add_subcommand(
      "oracles", "Random matcher agreement across all classes");
  v_oracles->add_option("--trials", verify_args.trials, "Random instances")
      ->capture_default_str();
  v_oracles->add_option("--max-n", verify_args.max_n, "Largest text length")
      ->capture_default_str();
  CLI::App* v_agree = cmd_verify->add_subcommand(
      "oracle-agreement", "Exhaustive small-pattern agreement sweep");
  v_agree->add_option("--max-n", verify_args.max_n, "Largest text length")
      ->capture_default_str();
  v_agree
      ->add_option("--mesh-samples", verify_args.mesh_samples,
                   "Sampled length-3 shadings per permutation")
      ->capture_default_str();
  v_agree->add_flag("--mesh-full", verify_args.mesh_full,
                    "Enumerate all length-3 shadings (slow)");
  CLI::App* v_boxed = cmd_verify->add_subcommand(
      "boxed-list", "Boxed/classical coincidence list");
  v_boxed
      ->add_option("--max-n", verify_args.boxed_max_n,
                   "Largest text length for the coincidence check")
      ->capture_default_str();
  CLI::App* v_blowup = cmd_verify->add_subcommand(
      "blowup", "Blow-up answer preservation on random pairs");
  v_blowup->add_option("--cases", verify_args.blowup_cases, "Random pairs")
      ->capture_default_str();
  v_blowup->add_option("--max-n", verify_args.max_n, "Largest base text")
      ->capture_default_str();
  CLI::App* v_reductions = cmd_verify->add_subcommand(
      "reductions", "Reduction chains and encodings, exhaustive and random");
  v_reductions
      ->add_option("--cases", verify_args.reduction_cases,
                   "Random segregated instances")
      ->capture_default_str();
  v_reductions
      ->add_option("--graphs", verify_args.random_graphs, "Random graphs")
      ->capture_default_str();
  CLI::App* v_chain = cmd_verify->add_subcommand(
      "reduction-chain", "Every graph on --vertices, clique sizes 2..k-max");
  v_chain->add_option("--vertices", verify_args.vertices, "Vertex count")
      ->check(CLI::Range(1, 5))
      ->capture_default_str();
  v_chain->add_option("--k-max", verify_args.k_max, "Largest clique size")
      ->check(CLI::Range(2, 6))
      ->capture_default_str();
  CLI::App* v_pop = cmd_verify->add_subcommand(
      "pop", "Partially ordered patterns against brute force");
  v_pop->add_option("--cases", verify_args.pop_cases, "Random patterns")
      ->capture_default_str();
  v_pop->add_option("--max-n", verify_args.max_n, "Largest text length")
      ->capture_default_str();
  CLI::App* v_all =
      cmd_verify->add_subcommand("all", "Every suite at its default scale");
  v_all->add_option("--trials", verify_args.trials, "Random oracle instances")
      ->capture_default_str();
  v_all->add_option("--max-n", verify_args.max_n, "Largest text length")
      ->capture_default_str();
  v_all
      ->add_option("--mesh-samples", verify_args.mesh_samples,
                   "Sampled length-3 shadings per permutation")
      ->capture_default_str();
  v_all->add_flag("--mesh-full", verify_args.mesh_full,
                  "Enumerate all length-3 shadings (slow)");

  // bench
  BenchArgs bench_args;
  CLI::App* cmd_bench = app.add_subcommand(
      "bench", "Time a matcher family on worst-case texts");
  cmd_bench->fallthrough();
  cmd_bench
      ->add_option("family", bench_args.family,
                   "consecutive|boxed|lis|backtrack")
      ->required()
      ->check(CLI::IsMember({"consecutive", "boxed", "lis", "backtrack"}));
  cmd_bench
      ->add_option("--sizes", bench_args.sizes,
                   "Text lengths (comma separated; default per family)")
      ->delimiter(',');
  cmd_bench
      ->add_option("--min-ms", bench_args.min_ms,
                   "Minimum measured time per point")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // stats
  StatsArgs stats_args;
  CLI::App* cmd_stats = app.add_subcommand(
      "stats", "Print structural statistics of a pattern or text");
  cmd_stats->fallthrough();
  cmd_stats->add_option("--pattern", stats_args.pattern, "Pattern line");
  cmd_stats->add_option("--text", stats_args.text, "Text permutation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (cmd_match->parsed()) return run_match(g, match_args);
    if (cmd_transform->parsed()) return run_transform(g, transform_args);
    if (cmd_reduce->parsed()) return run_reduce(g, reduce_args);
    if (cmd_verify->parsed()) {
      if (v_chain->parsed()) return run_reduction_chain(g, verify_args);
      const VerifyOptions opt = options_from(g, verify_args);
      if (v_oracles->parsed()) {
        return report_suites({verify_oracles_random(opt)}, g.quiet);
      }
      if (v_agree->parsed()) {
        return report_suites({verify_oracle_agreement(opt)}, g.quiet);
      }
      if (v_boxed->parsed()) {
        VerifyOptions boxed = opt;
        boxed.max_n = verify_args.boxed_max_n;
        return report_suites({verify_boxed_list(boxed)}, g.quiet);
      }
      if (v_blowup->parsed()) {
        return report_suites({verify_blowup_suite(opt)}, g.quiet);
      }
      if (v_reductions->parsed()) {
        return report_suites({verify_reduction_suite(opt)}, g.quiet);
      }
      if (v_pop->parsed()) {
        return report_suites({verify_pop_suite(opt)}, g.quiet);
      }
      return report_suites(verify_all(opt), g.quiet);
    }
    if (cmd_bench->parsed()) return run_bench(g, bench_args);
    if (cmd_stats->parsed()) return run_stats(g, stats_args);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNone;
  }
  return kExitUsage;
}
