#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gridknot {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  int line = 0;
  int column = 0;
  ParseError(const std::string& msg, int line_, int column_)
      : Error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ")"),
        line(line_), column(column_) {}
};

struct ValidationError : Error {
  std::vector<std::string> violations;
  explicit ValidationError(std::vector<std::string> v);
};

// An arc-presentation: n rows and columns, one X and one O marker per row and
// per column, vertical arcs always over horizontal ones. Rows are indexed top
// to bottom, columns left to right, everything 0-based.
struct GridDiagram {
  std::vector<int> x_cols;
  std::vector<int> o_cols;

  GridDiagram() = default;
  GridDiagram(std::vector<int> x, std::vector<int> o)
      : x_cols(std::move(x)), o_cols(std::move(o)) {}

  int size() const { return static_cast<int>(x_cols.size()); }
  bool operator==(const GridDiagram&) const = default;
};

// Forgets the X/O typing: one unordered column pair per row. Equality of keys
// is combinatorial equivalence of the underlying planar drawings.
struct UnorientedKey {
  int n = 0;
  std::vector<std::pair<int, int>> row_pairs;  // (lo, hi) per row

  bool operator==(const UnorientedKey&) const = default;
  std::string to_string() const;  // "0-2,1-3,..."
};

enum class Axis { Vertical, Horizontal };

// A grid line with no arc crossing it and markers on both sides.
struct SplitLine {
  Axis axis;
  int index;  // vertical: between columns index and index+1; horizontal: rows
};

// A grid line crossed by exactly two arcs, with >=1 crossing on each side.
struct CompositeLine {
  Axis axis;
  int index;
  int crossings_before;  // left of / above the line
  int crossings_after;
};

std::vector<std::string> validate(const GridDiagram& g);
GridDiagram parse_grid(std::string_view text);
std::string serialize_grid(const GridDiagram& g);

int crossing_count(const GridDiagram& g);
std::vector<std::pair<int, int>> crossing_cells(const GridDiagram& g);
int component_count(const GridDiagram& g);
UnorientedKey unoriented_key(const GridDiagram& g);
bool is_trivial(const GridDiagram& g);
GridDiagram swap_xo(const GridDiagram& g);

std::optional<SplitLine> is_split_form(const GridDiagram& g);
std::optional<CompositeLine> is_composite_form(const GridDiagram& g);

// Cuts the diagram along a composite line into its two closed-up factors.
std::pair<GridDiagram, GridDiagram> composite_factors(const GridDiagram& g,
                                                      const CompositeLine& line);

GridDiagram disjoint_union(const GridDiagram& a, const GridDiagram& b);

// Requires a's X marker at (n-1, n-1) and b's X at (0, 0); joins the two
// diagrams corner to corner. The result picks up one junction crossing.
GridDiagram connect_sum(const GridDiagram& a, const GridDiagram& b);

// Rebuilds a typed diagram from a key by traversing each component and
// alternating marker types. Any valid typing of the same cells behaves
// identically under every cell-level operation.
GridDiagram diagram_from_key(const UnorientedKey& key);

// Column c -> rows of its two markers (lo, hi).
std::vector<std::pair<int, int>> column_spans(const GridDiagram& g);

}  // namespace gridknot
