#pragma once

#include <cstdlib>
#include <functional>
#include <fstream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "grid.hpp"
#include "moves.hpp"

namespace gridknot::testing {

inline std::string source_dir() {
  if (const char* env = std::getenv("GRIDKNOT_SOURCE_DIR")) return env;
#ifdef GRIDKNOT_SOURCE_DIR
  return GRIDKNOT_SOURCE_DIR;
#else
  return ".";
#endif
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Independent crossing oracle: paint horizontal and vertical arc interiors on
// a fine raster, then count cells covered by both.
inline int raster_crossing_count(const GridDiagram& g) {
  const int n = g.size();
  const int side = 2 * n - 1;
  std::vector<std::vector<char>> horiz(side, std::vector<char>(side, 0));
  std::vector<std::vector<char>> vert(side, std::vector<char>(side, 0));
  for (int r = 0; r < n; ++r) {
    int lo = std::min(g.x_cols[r], g.o_cols[r]);
    int hi = std::max(g.x_cols[r], g.o_cols[r]);
    for (int k = 2 * lo + 1; k < 2 * hi; ++k) horiz[2 * r][k] = 1;
  }
  auto spans = column_spans(g);
  for (int c = 0; c < n; ++c) {
    for (int k = 2 * spans[c].first + 1; k < 2 * spans[c].second; ++k)
      vert[k][2 * c] = 1;
  }
  int cnt = 0;
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j)
      if (horiz[i][j] && vert[i][j]) ++cnt;
  return cnt;
}

// Independent component oracle: union-find over marker cells.
inline int unionfind_component_count(const GridDiagram& g) {
  const int n = g.size();
  std::vector<int> parent(2 * n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto join = [&](int a, int b) { parent[find(a)] = find(b); };
  // cell ids: 2r = X of row r, 2r+1 = O of row r; same row joined
  for (int r = 0; r < n; ++r) join(2 * r, 2 * r + 1);
  // same column joined
  std::vector<int> col_first(n, -1);
  for (int r = 0; r < n; ++r) {
    for (int which = 0; which < 2; ++which) {
      int c = which == 0 ? g.x_cols[r] : g.o_cols[r];
      int id = 2 * r + which;
      if (col_first[c] < 0) col_first[c] = id;
      else join(col_first[c], id);
    }
  }
  int comps = 0;
  for (int v = 0; v < 2 * n; ++v)
    if (find(v) == v) ++comps;
  return comps;
}

inline GridDiagram random_diagram(std::mt19937_64& rng, int n) {
  std::vector<int> x(n), o(n);
  std::iota(x.begin(), x.end(), 0);
  std::shuffle(x.begin(), x.end(), rng);
  while (true) {
    std::iota(o.begin(), o.end(), 0);
    std::shuffle(o.begin(), o.end(), rng);
    bool ok = true;
    for (int r = 0; r < n; ++r)
      if (x[r] == o[r]) { ok = false; break; }
    if (ok) break;
  }
  return GridDiagram(x, o);
}

// The empty cell of a 3-marker block, for reconstructing the inverse
// stabilization of a destabilization.
inline Corner empty_corner_of_block(const GridDiagram& g, int r, int c) {
  auto marker = [&](int rr, int cc) {
    return g.x_cols[rr] == cc || g.o_cols[rr] == cc;
  };
  if (!marker(r, c)) return Corner::NW;
  if (!marker(r, c + 1)) return Corner::NE;
  if (!marker(r + 1, c)) return Corner::SW;
  return Corner::SE;
}

}  // namespace gridknot::testing
