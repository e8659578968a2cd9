#include "grid.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace gridknot {

ValidationError::ValidationError(std::vector<std::string> v)
    : Error(v.empty() ? "invalid diagram"
                      : "invalid diagram: " + v.front() +
                            (v.size() > 1 ? " (+" + std::to_string(v.size() - 1) +
                                                " more)"
                                          : "")),
      violations(std::move(v)) {}

std::vector<std::string> validate(const GridDiagram& g) {
  std::vector<std::string> out;
  const int n = g.size();
  if (static_cast<int>(g.o_cols.size()) != n) {
    out.push_back("x_cols and o_cols lengths differ");
    return out;
  }
  if (n < 2) {
    out.push_back("complexity must be at least 2, got " + std::to_string(n));
    return out;
  }
  auto check_perm = [&](const std::vector<int>& v, const char* name) {
    std::vector<char> seen(n, 0);
    for (int r = 0; r < n; ++r) {
      if (v[r] < 0 || v[r] >= n) {
        out.push_back(std::string(name) + "[" + std::to_string(r) +
                      "] out of range: " + std::to_string(v[r]));
      } else if (seen[v[r]]) {
        out.push_back(std::string(name) + " column " + std::to_string(v[r]) +
                      " used twice (row " + std::to_string(r) + ")");
      } else {
        seen[v[r]] = 1;
      }
    }
  };
  check_perm(g.x_cols, "X");
  check_perm(g.o_cols, "O");
  if (!out.empty()) return out;
  for (int r = 0; r < n; ++r) {
    if (g.x_cols[r] == g.o_cols[r])
      out.push_back("marker collision in row " + std::to_string(r) +
                    " at column " + std::to_string(g.x_cols[r]));
  }
  return out;
}

namespace {

struct Line {
  std::string_view text;
  int number;  // 1-based
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : nl - pos);
    ++number;
    size_t b = line.find_first_not_of(" \t\r");
    if (b != std::string_view::npos && line[b] != '#')
      out.push_back({line, number});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view tok, const Line& ln) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError("expected integer, got '" + std::string(tok) + "'",
                     ln.number, static_cast<int>(tok.data() - ln.text.data()) + 1);
  return v;
}

}  // namespace

GridDiagram parse_grid(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.size() != 3)
    throw ParseError("grid file needs exactly 3 content lines (grid/X/O), got " +
                         std::to_string(lines.size()),
                     lines.empty() ? 1 : lines.back().number, 1);
  auto head = split_ws(lines[0].text);
  if (head.size() != 2 || head[0] != "grid")
    throw ParseError("expected 'grid <n>'", lines[0].number, 1);
  int n = parse_int(head[1], lines[0]);
  if (n < 2)
    throw ParseError("grid size must be at least 2", lines[0].number, 1);
  auto read_row = [&](const Line& ln, std::string_view tag) {
    auto toks = split_ws(ln.text);
    if (toks.empty() || toks[0] != tag)
      throw ParseError("expected '" + std::string(tag) + " <cols>'", ln.number, 1);
    if (static_cast<int>(toks.size()) != n + 1)
      throw ParseError(std::string(tag) + " line needs " + std::to_string(n) +
                           " columns, got " + std::to_string(toks.size() - 1),
                       ln.number, 1);
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = parse_int(toks[i + 1], ln);
    return v;
  };
  GridDiagram g(read_row(lines[1], "X"), read_row(lines[2], "O"));
  if (auto viol = validate(g); !viol.empty()) throw ValidationError(std::move(viol));
  return g;
}

std::string serialize_grid(const GridDiagram& g) {
  std::string out = "grid " + std::to_string(g.size()) + "\nX";
  for (int c : g.x_cols) out += " " + std::to_string(c);
  out += "\nO";
  for (int c : g.o_cols) out += " " + std::to_string(c);
  out += "\n";
  return out;
}

std::vector<std::pair<int, int>> column_spans(const GridDiagram& g) {
  const int n = g.size();
  std::vector<std::pair<int, int>> spans(n, {-1, -1});
  for (int r = 0; r < n; ++r) {
    for (int c : {g.x_cols[r], g.o_cols[r]}) {
      if (spans[c].first < 0)
        spans[c].first = r;
      else
        spans[c].second = r;
    }
  }
  for (auto& s : spans)
    if (s.first > s.second) std::swap(s.first, s.second);
  return spans;
}

std::vector<std::pair<int, int>> crossing_cells(const GridDiagram& g) {
  const int n = g.size();
  auto spans = column_spans(g);
  std::vector<std::pair<int, int>> out;
  for (int c = 0; c < n; ++c) {
    for (int r = spans[c].first + 1; r < spans[c].second; ++r) {
      int lo = std::min(g.x_cols[r], g.o_cols[r]);
      int hi = std::max(g.x_cols[r], g.o_cols[r]);
      if (lo < c && c < hi) out.emplace_back(r, c);
    }
  }
  return out;
}

int crossing_count(const GridDiagram& g) {
  return static_cast<int>(crossing_cells(g).size());
}

namespace {

// Walks marker cells alternately along rows and columns, calling visit(cell,
// parity) for each; parity flips every step so alternating X/O typing falls
// out of the traversal.
template <typename F>
int traverse_components(const GridDiagram& g, F&& visit) {
  const int n = g.size();
  auto spans = column_spans(g);
  // column -> its two marker rows
  std::vector<std::array<int, 2>> col_rows(n, {-1, -1});
  for (int r = 0; r < n; ++r)
    for (int c : {g.x_cols[r], g.o_cols[r]})
      col_rows[c][col_rows[c][0] < 0 ? 0 : 1] = r;
  std::set<std::pair<int, int>> seen;
  int comps = 0;
  for (int r0 = 0; r0 < n; ++r0) {
    for (int c0 : {std::min(g.x_cols[r0], g.o_cols[r0]),
                   std::max(g.x_cols[r0], g.o_cols[r0])}) {
      if (seen.count({r0, c0})) continue;
      ++comps;
      int r = r0, c = c0;
      bool along_row = true, first_type = true;
      do {
        seen.insert({r, c});
        visit(r, c, first_type);
        if (along_row) {
          c = (c == g.x_cols[r]) ? g.o_cols[r] : g.x_cols[r];
        } else {
          r = (r == col_rows[c][0]) ? col_rows[c][1] : col_rows[c][0];
        }
        along_row = !along_row;
        first_type = !first_type;
      } while (r != r0 || c != c0);
    }
  }
  return comps;
}

}  // namespace

int component_count(const GridDiagram& g) {
  return traverse_components(g, [](int, int, bool) {});
}

UnorientedKey unoriented_key(const GridDiagram& g) {
  UnorientedKey k;
  k.n = g.size();
  k.row_pairs.reserve(k.n);
  for (int r = 0; r < k.n; ++r)
    k.row_pairs.emplace_back(std::min(g.x_cols[r], g.o_cols[r]),
                             std::max(g.x_cols[r], g.o_cols[r]));
  return k;
}

std::string UnorientedKey::to_string() const {
  std::string out;
  for (int r = 0; r < n; ++r) {
    if (r) out += ",";
    out += std::to_string(row_pairs[r].first) + "-" +
           std::to_string(row_pairs[r].second);
  }
  return out;
}

bool is_trivial(const GridDiagram& g) { return g.size() == 2; }

GridDiagram swap_xo(const GridDiagram& g) { return {g.o_cols, g.x_cols}; }

GridDiagram diagram_from_key(const UnorientedKey& key) {
  const int n = key.n;
  GridDiagram g;
  g.x_cols.assign(n, 0);
  g.o_cols.assign(n, 0);
  // seed x/o from the pairs, then retype by traversal
  for (int r = 0; r < n; ++r) {
    g.x_cols[r] = key.row_pairs[r].first;
    g.o_cols[r] = key.row_pairs[r].second;
  }
  GridDiagram typed = g;
  traverse_components(g, [&](int r, int c, bool is_x) {
    if (is_x)
      typed.x_cols[r] = c;
    else
      typed.o_cols[r] = c;
  });
  return typed;
}

std::optional<SplitLine> is_split_form(const GridDiagram& g) {
  const int n = g.size();
  for (int k = 0; k < n - 1; ++k) {
    bool crossed = false;
    for (int r = 0; r < n && !crossed; ++r) {
      int lo = std::min(g.x_cols[r], g.o_cols[r]);
      int hi = std::max(g.x_cols[r], g.o_cols[r]);
      crossed = lo <= k && k < hi;
    }
    if (!crossed) return SplitLine{Axis::Vertical, k};
  }
  auto spans = column_spans(g);
  for (int k = 0; k < n - 1; ++k) {
    bool crossed = false;
    for (auto [lo, hi] : spans)
      if (lo <= k && k < hi) { crossed = true; break; }
    if (!crossed) return SplitLine{Axis::Horizontal, k};
  }
  return std::nullopt;
}

std::optional<CompositeLine> is_composite_form(const GridDiagram& g) {
  const int n = g.size();
  auto cr = crossing_cells(g);
  for (int k = 0; k < n - 1; ++k) {
    int arcs = 0;
    for (int r = 0; r < n; ++r) {
      int lo = std::min(g.x_cols[r], g.o_cols[r]);
      int hi = std::max(g.x_cols[r], g.o_cols[r]);
      if (lo <= k && k < hi) ++arcs;
    }
    if (arcs != 2) continue;
    int left = 0, right = 0;
    for (auto [r, c] : cr) (c <= k ? left : right)++;
    if (left >= 1 && right >= 1)
      return CompositeLine{Axis::Vertical, k, left, right};
  }
  auto spans = column_spans(g);
  for (int k = 0; k < n - 1; ++k) {
    int arcs = 0;
    for (auto [lo, hi] : spans)
      if (lo <= k && k < hi) ++arcs;
    if (arcs != 2) continue;
    int above = 0, below = 0;
    for (auto [r, c] : cr) (r <= k ? above : below)++;
    if (above >= 1 && below >= 1)
      return CompositeLine{Axis::Horizontal, k, above, below};
  }
  return std::nullopt;
}

namespace {

GridDiagram from_cells(std::vector<std::pair<int, int>> cells) {
  // compact row and column indices, keeping order
  std::vector<int> rows, cols;
  for (auto [r, c] : cells) { rows.push_back(r); cols.push_back(c); }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  auto idx = [](const std::vector<int>& v, int x) {
    return static_cast<int>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
  };
  const int n = static_cast<int>(rows.size());
  UnorientedKey key;
  key.n = n;
  std::vector<std::vector<int>> per_row(n);
  for (auto [r, c] : cells) per_row[idx(rows, r)].push_back(idx(cols, c));
  for (auto& v : per_row) {
    if (v.size() != 2) throw Error("cut does not produce a grid diagram");
    key.row_pairs.emplace_back(std::min(v[0], v[1]), std::max(v[0], v[1]));
  }
  GridDiagram g = diagram_from_key(key);
  if (auto viol = validate(g); !viol.empty()) throw ValidationError(std::move(viol));
  return g;
}

}  // namespace

std::pair<GridDiagram, GridDiagram> composite_factors(const GridDiagram& g,
                                                      const CompositeLine& line) {
  const int n = g.size();
  std::vector<std::pair<int, int>> markers;
  for (int r = 0; r < n; ++r) {
    markers.emplace_back(r, g.x_cols[r]);
    markers.emplace_back(r, g.o_cols[r]);
  }
  // normalize to "vertical" coordinates: (major, minor) with the line between
  // minor k and k+1
  const bool vert = line.axis == Axis::Vertical;
  auto minor = [&](std::pair<int, int> m) { return vert ? m.second : m.first; };
  const int k = line.index;
  // the two arcs crossing the line
  std::vector<int> crossing_majors;
  if (vert) {
    for (int r = 0; r < n; ++r) {
      int lo = std::min(g.x_cols[r], g.o_cols[r]);
      int hi = std::max(g.x_cols[r], g.o_cols[r]);
      if (lo <= k && k < hi) crossing_majors.push_back(r);
    }
  } else {
    auto spans = column_spans(g);
    for (int c = 0; c < n; ++c)
      if (spans[c].first <= k && k < spans[c].second) crossing_majors.push_back(c);
  }
  if (crossing_majors.size() != 2) throw Error("not a composite line");
  auto build = [&](bool left_side) {
    std::vector<std::pair<int, int>> cells;
    for (auto m : markers) {
      bool on_side = left_side ? minor(m) <= k : minor(m) > k;
      if (on_side) cells.push_back(vert ? m : std::pair<int, int>{m.first, m.second});
    }
    // close the two cut arcs with a fresh shared minor line just past the cut
    int closing_minor = left_side ? k + 1 : k;  // sits between the kept side and the rest
    for (int mj : crossing_majors) {
      if (vert)
        cells.emplace_back(mj, closing_minor);
      else
        cells.emplace_back(closing_minor, mj);
    }
    return from_cells(std::move(cells));
  };
  return {build(true), build(false)};
}

GridDiagram disjoint_union(const GridDiagram& a, const GridDiagram& b) {
  if (auto v = validate(a); !v.empty()) throw ValidationError(std::move(v));
  if (auto v = validate(b); !v.empty()) throw ValidationError(std::move(v));
  const int n1 = a.size();
  GridDiagram out = a;
  for (int c : b.x_cols) out.x_cols.push_back(c + n1);
  for (int c : b.o_cols) out.o_cols.push_back(c + n1);
  return out;
}

GridDiagram connect_sum(const GridDiagram& a, const GridDiagram& b) {
  if (auto v = validate(a); !v.empty()) throw ValidationError(std::move(v));
  if (auto v = validate(b); !v.empty()) throw ValidationError(std::move(v));
  const int n1 = a.size(), n2 = b.size();
  if (a.x_cols[n1 - 1] != n1 - 1)
    throw Error("connect_sum: first diagram needs its X marker at (" +
                std::to_string(n1 - 1) + ", " + std::to_string(n1 - 1) +
                "); cyclically translate it first");
  if (b.x_cols[0] != 0)
    throw Error("connect_sum: second diagram needs its X marker at (0, 0); "
                "cyclically translate it first");
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < n1 - 1; ++r) {
    cells.emplace_back(r, a.x_cols[r]);
    cells.emplace_back(r, a.o_cols[r]);
  }
  // merged row: both corner X markers are deleted, the two O markers remain
  cells.emplace_back(n1 - 1, a.o_cols[n1 - 1]);
  cells.emplace_back(n1 - 1, n1 - 1 + b.o_cols[0]);
  for (int r = 1; r < n2; ++r) {
    cells.emplace_back(n1 - 1 + r, n1 - 1 + b.x_cols[r]);
    cells.emplace_back(n1 - 1 + r, n1 - 1 + b.o_cols[r]);
  }
  return from_cells(std::move(cells));
}

}  // namespace gridknot
