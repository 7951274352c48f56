#include "permatch/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace permatch {

namespace {

void check_axis_set(const std::set<int>& s, int k, const char* what) {
  for (int v : s) {
    if (v < 0 || v > k) {
      throw std::invalid_argument(std::string(what) + " index out of [0,k]: " +
                                  std::to_string(v));
    }
  }
}

}  // namespace

MeshPattern::MeshPattern(Permutation p, std::set<Cell> shaded)
    : perm(std::move(p)), cells(std::move(shaded)) {
  for (const auto& [x, y] : cells) {
    if (x < 0 || x > k() || y < 0 || y > k()) {
      throw std::invalid_argument("cell out of [0,k]^2: (" +
                                  std::to_string(x) + "," + std::to_string(y) +
                                  ")");
    }
  }
}

const Permutation& Pattern::perm() const {
  return std::visit([](const auto& p) -> const Permutation& { return p.perm; },
                    v_);
}

void Pattern::validate() const {
  const int k = perm().size();
  if (k == 0) throw std::invalid_argument("pattern permutation is empty");
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, VincularPattern>) {
          check_axis_set(p.cols, k, "column");
        } else if constexpr (std::is_same_v<T, BivincularPattern>) {
          check_axis_set(p.cols, k, "column");
          check_axis_set(p.rows, k, "row");
        } else if constexpr (std::is_same_v<T, MeshPattern>) {
          for (const auto& [x, y] : p.cells) {
            if (x < 0 || x > k || y < 0 || y > k) {
              throw std::invalid_argument("cell out of [0,k]^2");
            }
          }
        }
      },
      v_);
}

int cols(const Pattern& p) {
  switch (p.kind()) {
    case Pattern::Kind::vincular:
      return static_cast<int>(std::get<VincularPattern>(p.alt()).cols.size());
    case Pattern::Kind::bivincular:
      return static_cast<int>(
          std::get<BivincularPattern>(p.alt()).cols.size());
    case Pattern::Kind::consecutive:
      return p.k() - 1;
    default:
      return 0;
  }
}

int rows(const Pattern& p) {
  if (p.kind() == Pattern::Kind::bivincular) {
    return static_cast<int>(std::get<BivincularPattern>(p.alt()).rows.size());
  }
  return 0;
}

int cells(const Pattern& p) {
  switch (p.kind()) {
    case Pattern::Kind::mesh:
      return static_cast<int>(std::get<MeshPattern>(p.alt()).cells.size());
    case Pattern::Kind::boxed:
      return (p.k() - 1) * (p.k() - 1);
    default:
      return 0;
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

int parse_int(std::string_view tok) {
  tok = trim(tok);
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("not an integer: '" + std::string(tok) + "'");
  }
  return value;
}

std::set<int> parse_int_set(std::string_view body) {
  std::set<int> out;
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view tok =
        comma == std::string_view::npos ? body : body.substr(0, comma);
    out.insert(parse_int(tok));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

std::set<Cell> parse_cell_set(std::string_view body) {
  std::set<Cell> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < body.size() &&
           std::isspace(static_cast<unsigned char>(body[i]))) {
      ++i;
    }
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= body.size() || body[i] != c) {
      throw ParseError(std::string("expected '") + c + "' in cells list");
    }
    ++i;
  };
  auto read_int = [&]() {
    skip_ws();
    std::size_t j = i;
    if (j < body.size() && (body[j] == '-' || body[j] == '+')) ++j;
    while (j < body.size() &&
           std::isdigit(static_cast<unsigned char>(body[j]))) {
      ++j;
    }
    int v = parse_int(body.substr(i, j - i));
    i = j;
    return v;
  };
  while (true) {
    expect('(');
    int x = read_int();
    expect(',');
    int y = read_int();
    expect(')');
    out.insert({x, y});
    skip_ws();
    if (i >= body.size()) break;
    expect(',');
  }
  return out;
}

}  // namespace

Pattern parse_pattern(std::string_view line) {
  auto colon = line.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("pattern line has no ':' after the type name");
  }
  std::string type(trim(line.substr(0, colon)));
  std::string_view rest = line.substr(colon + 1);

  // Split the remainder into "key=value" clauses on ';'.
  std::optional<Permutation> perm;
  std::optional<std::set<int>> cols_set, rows_set;
  std::optional<std::set<Cell>> cell_set;
  while (true) {
    auto semi = rest.find(';');
    std::string_view clause =
        trim(semi == std::string_view::npos ? rest : rest.substr(0, semi));
    if (!clause.empty()) {
      auto eq = clause.find('=');
      if (eq == std::string_view::npos) {
        throw ParseError("expected key=value, got '" + std::string(clause) +
                         "'");
      }
      std::string_view key = trim(clause.substr(0, eq));
      std::string_view value = trim(clause.substr(eq + 1));
      if (key == "perm") {
        if (perm) throw ParseError("duplicate perm clause");
        perm = parse_permutation(value);
      } else if (key == "cols") {
        if (cols_set) throw ParseError("duplicate cols clause");
        cols_set = parse_int_set(value);
      } else if (key == "rows") {
        if (rows_set) throw ParseError("duplicate rows clause");
        rows_set = parse_int_set(value);
      } else if (key == "cells") {
        if (cell_set) throw ParseError("duplicate cells clause");
        cell_set = parse_cell_set(value);
      } else {
        throw ParseError("unknown clause key '" + std::string(key) + "'");
      }
    }
    if (semi == std::string_view::npos) break;
    rest = rest.substr(semi + 1);
  }
  if (!perm) throw ParseError("pattern line lacks a perm clause");

  auto forbid = [&](bool present, const char* what) {
    if (present) {
      throw ParseError(std::string(what) + " clause is not valid for type '" +
                       type + "'");
    }
  };
  try {
    if (type == "classical") {
      forbid(cols_set.has_value(), "cols");
      forbid(rows_set.has_value(), "rows");
      forbid(cell_set.has_value(), "cells");
      return Pattern(ClassicalPattern{*std::move(perm)});
    }
    if (type == "vincular") {
      forbid(rows_set.has_value(), "rows");
      forbid(cell_set.has_value(), "cells");
      return Pattern(VincularPattern{*std::move(perm),
                                     cols_set.value_or(std::set<int>{})});
    }
    if (type == "bivincular") {
      forbid(cell_set.has_value(), "cells");
      return Pattern(BivincularPattern{*std::move(perm),
                                       cols_set.value_or(std::set<int>{}),
                                       rows_set.value_or(std::set<int>{})});
    }
    if (type == "mesh") {
      forbid(cols_set.has_value(), "cols");
      forbid(rows_set.has_value(), "rows");
      return Pattern(MeshPattern(*std::move(perm),
                                 cell_set.value_or(std::set<Cell>{})));
    }
    if (type == "boxed") {
      forbid(cols_set.has_value(), "cols");
      forbid(rows_set.has_value(), "rows");
      forbid(cell_set.has_value(), "cells");
      return Pattern(BoxedPattern{*std::move(perm)});
    }
    if (type == "consecutive") {
      forbid(cols_set.has_value(), "cols");
      forbid(rows_set.has_value(), "rows");
      forbid(cell_set.has_value(), "cells");
      return Pattern(ConsecutivePattern{*std::move(perm)});
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown pattern type '" + type + "'");
}

std::string print_pattern(const Pattern& p) {
  static const char* names[] = {"classical", "vincular", "bivincular",
                                "mesh",      "boxed",    "consecutive"};
  std::ostringstream out;
  out << names[static_cast<int>(p.kind())] << ": perm=" << p.perm().str();
  auto write_ints = [&](const char* key, const std::set<int>& s) {
    if (s.empty()) return;
    out << "; " << key << '=';
    bool first = true;
    for (int v : s) {
      if (!first) out << ',';
      out << v;
      first = false;
    }
  };
  switch (p.kind()) {
    case Pattern::Kind::vincular:
      write_ints("cols", std::get<VincularPattern>(p.alt()).cols);
      break;
    case Pattern::Kind::bivincular: {
      const auto& b = std::get<BivincularPattern>(p.alt());
      write_ints("cols", b.cols);
      write_ints("rows", b.rows);
      break;
    }
    case Pattern::Kind::mesh: {
      const auto& cs = std::get<MeshPattern>(p.alt()).cells;
      if (!cs.empty()) {
        out << "; cells=";
        bool first = true;
        for (const auto& [x, y] : cs) {
          if (!first) out << ',';
          out << '(' << x << ',' << y << ')';
          first = false;
        }
      }
      break;
    }
    default:
      break;
  }
  return out.str();
}

MeshPattern to_mesh(const Pattern& p) {
  const int k = p.k();
  std::set<Cell> cells;
  auto shade_column = [&](int c) {
    for (int y = 0; y <= k; ++y) cells.insert({c, y});
  };
  auto shade_row = [&](int r) {
    for (int x = 0; x <= k; ++x) cells.insert({x, r});
  };
  switch (p.kind()) {
    case Pattern::Kind::classical:
      break;
    case Pattern::Kind::vincular:
      for (int c : std::get<VincularPattern>(p.alt()).cols) shade_column(c);
      break;
    case Pattern::Kind::bivincular: {
      const auto& b = std::get<BivincularPattern>(p.alt());
      for (int c : b.cols) shade_column(c);
      for (int r : b.rows) shade_row(r);
      break;
    }
    case Pattern::Kind::mesh:
      return std::get<MeshPattern>(p.alt());
    case Pattern::Kind::boxed:
      for (int x = 1; x <= k - 1; ++x) {
        for (int y = 1; y <= k - 1; ++y) cells.insert({x, y});
      }
      break;
    case Pattern::Kind::consecutive:
      for (int c = 1; c <= k - 1; ++c) shade_column(c);
      break;
  }
  return MeshPattern(Permutation(p.perm()), std::move(cells));
}

namespace {

// Shared validation + order-isomorphism test. Fills i[] (positions with
// sentinels at index 0 and k+1) and v[] (sorted matched values, same
// sentinel layout). Returns false if the subsequence does not realize the
// pattern permutation.
bool occurrence_frame(const MeshPattern& m, const Permutation& text,
                      std::span<const int> positions, std::vector<int>& i,
                      std::vector<int>& v) {
  const int k = m.k();
  const int n = text.size();
  if (static_cast<int>(positions.size()) != k) {
    throw std::invalid_argument("positions length differs from pattern");
  }
  for (std::size_t j = 0; j < positions.size(); ++j) {
    if (positions[j] < 1 || positions[j] > n) {
      throw std::invalid_argument("position out of [1,n]: " +
                                  std::to_string(positions[j]));
    }
    if (j > 0 && positions[j] <= positions[j - 1]) {
      throw std::invalid_argument("positions must be strictly increasing");
    }
  }

  i.assign(static_cast<std::size_t>(k) + 2, 0);
  v.assign(static_cast<std::size_t>(k) + 2, 0);
  i[static_cast<std::size_t>(k) + 1] = n + 1;
  v[static_cast<std::size_t>(k) + 1] = n + 1;
  for (int j = 1; j <= k; ++j) {
    i[static_cast<std::size_t>(j)] = positions[static_cast<std::size_t>(j - 1)];
  }
  // Pattern value y must be matched to the y-th smallest text value in the
  // subsequence; checking exactly that also verifies order-isomorphism.
  for (int j = 1; j <= k; ++j) {
    int y = m.perm.at(j);
    v[static_cast<std::size_t>(y)] =
        text.at(i[static_cast<std::size_t>(j)]);
  }
  for (int y = 1; y < k; ++y) {
    if (v[static_cast<std::size_t>(y)] >= v[static_cast<std::size_t>(y) + 1]) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool is_occurrence(const MeshPattern& m, const Permutation& text,
                   std::span<const int> positions) {
  std::vector<int> i, v;
  if (!occurrence_frame(m, text, positions, i, v)) return false;
  for (const auto& [x, y] : m.cells) {
    const int plo = i[static_cast<std::size_t>(x)];
    const int phi = i[static_cast<std::size_t>(x) + 1];
    const int vlo = v[static_cast<std::size_t>(y)];
    const int vhi = v[static_cast<std::size_t>(y) + 1];
    for (int q = plo + 1; q < phi; ++q) {
      const int t = text.at(q);
      if (t > vlo && t < vhi) return false;
    }
  }
  return true;
}

bool is_occurrence(const MeshPattern& m, const Permutation& text,
                   std::span<const int> positions, const DominanceGrid& grid) {
  if (grid.size() != text.size()) {
    throw std::invalid_argument("grid was built over a different text");
  }
  std::vector<int> i, v;
  if (!occurrence_frame(m, text, positions, i, v)) return false;
  for (const auto& [x, y] : m.cells) {
    if (grid.rectangle_count(i[static_cast<std::size_t>(x)],
                             i[static_cast<std::size_t>(x) + 1],
                             v[static_cast<std::size_t>(y)],
                             v[static_cast<std::size_t>(y) + 1]) > 0) {
      return false;
    }
  }
  return true;
}

namespace {

std::set<int> map_axis(const std::set<int>& s, int k, bool flip) {
  if (!flip) return s;
  std::set<int> out;
  for (int v : s) out.insert(k - v);
  return out;
}

}  // namespace

Pattern pattern_reverse(const Pattern& p) {
  const int k = p.k();
  switch (p.kind()) {
    case Pattern::Kind::classical:
      return Pattern(ClassicalPattern{reverse(p.perm())});
    case Pattern::Kind::vincular: {
      const auto& q = std::get<VincularPattern>(p.alt());
      return Pattern(VincularPattern{reverse(q.perm),
                                     map_axis(q.cols, k, true)});
    }
    case Pattern::Kind::bivincular: {
      const auto& q = std::get<BivincularPattern>(p.alt());
      return Pattern(BivincularPattern{reverse(q.perm),
                                       map_axis(q.cols, k, true), q.rows});
    }
    case Pattern::Kind::mesh: {
      const auto& q = std::get<MeshPattern>(p.alt());
      std::set<Cell> cells;
      for (const auto& [x, y] : q.cells) cells.insert({k - x, y});
      return Pattern(MeshPattern(reverse(q.perm), std::move(cells)));
    }
    case Pattern::Kind::boxed:
      return Pattern(BoxedPattern{reverse(p.perm())});
    case Pattern::Kind::consecutive:
      return Pattern(ConsecutivePattern{reverse(p.perm())});
  }
  throw std::logic_error("unreachable");
}

Pattern pattern_complement(const Pattern& p) {
  const int k = p.k();
  switch (p.kind()) {
    case Pattern::Kind::classical:
      return Pattern(ClassicalPattern{complement(p.perm())});
    case Pattern::Kind::vincular: {
      const auto& q = std::get<VincularPattern>(p.alt());
      return Pattern(VincularPattern{complement(q.perm), q.cols});
    }
    case Pattern::Kind::bivincular: {
      const auto& q = std::get<BivincularPattern>(p.alt());
      return Pattern(BivincularPattern{complement(q.perm), q.cols,
                                       map_axis(q.rows, k, true)});
    }
    case Pattern::Kind::mesh: {
      const auto& q = std::get<MeshPattern>(p.alt());
      std::set<Cell> cells;
      for (const auto& [x, y] : q.cells) cells.insert({x, k - y});
      return Pattern(MeshPattern(complement(q.perm), std::move(cells)));
    }
    case Pattern::Kind::boxed:
      return Pattern(BoxedPattern{complement(p.perm())});
    case Pattern::Kind::consecutive:
      return Pattern(ConsecutivePattern{complement(p.perm())});
  }
  throw std::logic_error("unreachable");
}

Pattern pattern_inverse(const Pattern& p) {
  switch (p.kind()) {
    case Pattern::Kind::classical:
      return Pattern(ClassicalPattern{inverse(p.perm())});
    case Pattern::Kind::vincular: {
      const auto& q = std::get<VincularPattern>(p.alt());
      if (!q.cols.empty()) {
        throw std::invalid_argument(
            "inverse of a vincular pattern with shaded columns is not "
            "vincular");
      }
      return Pattern(VincularPattern{inverse(q.perm), {}});
    }
    case Pattern::Kind::bivincular: {
      const auto& q = std::get<BivincularPattern>(p.alt());
      return Pattern(BivincularPattern{inverse(q.perm), q.rows, q.cols});
    }
    case Pattern::Kind::mesh: {
      const auto& q = std::get<MeshPattern>(p.alt());
      std::set<Cell> cells;
      for (const auto& [x, y] : q.cells) cells.insert({y, x});
      return Pattern(MeshPattern(inverse(q.perm), std::move(cells)));
    }
    case Pattern::Kind::boxed:
      return Pattern(BoxedPattern{inverse(p.perm())});
    case Pattern::Kind::consecutive:
      if (p.k() >= 2) {
        throw std::invalid_argument(
            "inverse of a consecutive pattern is not consecutive");
      }
      return Pattern(ConsecutivePattern{inverse(p.perm())});
  }
  throw std::logic_error("unreachable");
}

Matching matching_from_positions(const Permutation& pattern_perm,
                                 const Permutation& text,
                                 std::span<const int> positions) {
  MeshPattern bare(Permutation(pattern_perm), {});
  std::vector<int> i, v;
  if (!occurrence_frame(bare, text, positions, i, v)) {
    throw std::invalid_argument("positions do not realize the pattern");
  }
  Matching m;
  m.mu.assign(v.begin() + 1, v.end() - 1);
  return m;
}

std::vector<int> matching_positions(const Matching& m,
                                    const Permutation& pattern_perm,
                                    const Permutation& text) {
  const int k = pattern_perm.size();
  if (m.pattern_len() != k) {
    throw std::invalid_argument("matching length differs from pattern");
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int j = 1; j <= k; ++j) {
    const int tv = m.of(pattern_perm.at(j));
    if (tv < 1 || tv > text.size()) {
      throw std::invalid_argument("matched value out of [1,n]: " +
                                  std::to_string(tv));
    }
    out.push_back(text.position_of(tv));
  }
  return out;
}

}  // namespace permatch
