#pragma once

// Compact, typing-free diagram representation for the search and census inner
// loops. A diagram is its row pairs only; every monotone move's legality and
// result depend on the marker cells alone, so the X/O typing is dropped here
// and recovered by traversal when a full GridDiagram is needed.

#include <array>
#include <cstdint>
#include <cstring>
#include <vector>

#include "grid.hpp"
#include "moves.hpp"

namespace gridknot::cells {

using Pair = std::array<std::uint8_t, 2>;  // (lo, hi)

struct Cells {
  std::vector<Pair> rows;

  int n() const { return static_cast<int>(rows.size()); }
  const std::uint8_t* bytes() const { return rows.empty() ? nullptr : rows[0].data(); }
  size_t byte_size() const { return rows.size() * 2; }
  bool operator==(const Cells&) const = default;
};

struct PackedMove {
  std::uint8_t kind = 0;  // MoveKind
  std::uint8_t a = 0;
  std::uint8_t b = 0;
  std::uint8_t aux = 0;  // corner or direction
};

inline PackedMove pack_move(const Move& m) {
  PackedMove p;
  p.kind = static_cast<std::uint8_t>(m.kind);
  p.a = static_cast<std::uint8_t>(m.r);
  p.b = static_cast<std::uint8_t>(m.c);
  p.aux = m.kind == MoveKind::Stabilize ? static_cast<std::uint8_t>(m.corner)
                                        : static_cast<std::uint8_t>(m.dir);
  return p;
}

inline Move unpack_move(PackedMove p) {
  Move m;
  m.kind = static_cast<MoveKind>(p.kind);
  m.r = p.a;
  m.c = p.b;
  if (m.kind == MoveKind::Stabilize)
    m.corner = static_cast<Corner>(p.aux);
  else
    m.dir = static_cast<Direction>(p.aux);
  return m;
}

inline Cells from_diagram(const GridDiagram& g) {
  Cells c;
  c.rows.reserve(g.size());
  for (int r = 0; r < g.size(); ++r) {
    auto lo = static_cast<std::uint8_t>(std::min(g.x_cols[r], g.o_cols[r]));
    auto hi = static_cast<std::uint8_t>(std::max(g.x_cols[r], g.o_cols[r]));
    c.rows.push_back({lo, hi});
  }
  return c;
}

inline UnorientedKey to_key(const Cells& c) {
  UnorientedKey k;
  k.n = c.n();
  k.row_pairs.reserve(k.n);
  for (const auto& p : c.rows) k.row_pairs.emplace_back(p[0], p[1]);
  return k;
}

inline GridDiagram to_diagram(const Cells& c) { return diagram_from_key(to_key(c)); }

// column -> (first row, second row); rows are scanned ascending so the pair
// comes out ordered
inline std::vector<Pair> col_spans(const Cells& c) {
  const int n = c.n();
  std::vector<Pair> spans(n, Pair{255, 255});
  for (int r = 0; r < n; ++r) {
    for (std::uint8_t col : c.rows[r]) {
      auto& s = spans[col];
      if (s[0] == 255)
        s[0] = static_cast<std::uint8_t>(r);
      else
        s[1] = static_cast<std::uint8_t>(r);
    }
  }
  return spans;
}

inline bool marker_at(const Cells& c, int r, int col) {
  return c.rows[r][0] == col || c.rows[r][1] == col;
}

inline int block_markers(const Cells& c, int r, int col) {
  int cnt = 0;
  for (int rr : {r, r + 1})
    for (int cc : {col, col + 1})
      if (marker_at(c, rr, cc)) ++cnt;
  return cnt;
}

inline bool spans_exchangeable(int a1, int b1, int a2, int b2) {
  if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) return false;
  bool inter = (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1);
  return !inter;
}

inline int crossing_count(const Cells& c) {
  const int n = c.n();
  auto spans = col_spans(c);
  int cnt = 0;
  for (int col = 0; col < n; ++col) {
    for (int r = spans[col][0] + 1; r < spans[col][1]; ++r)
      if (c.rows[r][0] < col && col < c.rows[r][1]) ++cnt;
  }
  return cnt;
}

inline bool has_split_line(const Cells& c) {
  const int n = c.n();
  for (int k = 0; k < n - 1; ++k) {
    bool crossed = false;
    for (int r = 0; r < n && !crossed; ++r)
      crossed = c.rows[r][0] <= k && k < c.rows[r][1];
    if (!crossed) return true;
  }
  auto spans = col_spans(c);
  for (int k = 0; k < n - 1; ++k) {
    bool crossed = false;
    for (int col = 0; col < n && !crossed; ++col)
      crossed = spans[col][0] <= k && k < spans[col][1];
    if (!crossed) return true;
  }
  return false;
}

inline bool has_composite_line(const Cells& c) {
  const int n = c.n();
  auto spans = col_spans(c);
  std::vector<std::pair<int, int>> cr;
  for (int col = 0; col < n; ++col)
    for (int r = spans[col][0] + 1; r < spans[col][1]; ++r)
      if (c.rows[r][0] < col && col < c.rows[r][1]) cr.emplace_back(r, col);
  for (int k = 0; k < n - 1; ++k) {
    int arcs = 0;
    for (int r = 0; r < n; ++r)
      if (c.rows[r][0] <= k && k < c.rows[r][1]) ++arcs;
    if (arcs != 2) continue;
    int left = 0, right = 0;
    for (auto [r, col] : cr) (col <= k ? left : right)++;
    if (left >= 1 && right >= 1) return true;
  }
  for (int k = 0; k < n - 1; ++k) {
    int arcs = 0;
    for (int col = 0; col < n; ++col)
      if (spans[col][0] <= k && k < spans[col][1]) ++arcs;
    if (arcs != 2) continue;
    int above = 0, below = 0;
    for (auto [r, col] : cr) (r <= k ? above : below)++;
    if (above >= 1 && below >= 1) return true;
  }
  return false;
}

inline Cells apply_row_exchange(const Cells& c, int r) {
  Cells out = c;
  std::swap(out.rows[r], out.rows[r + 1]);
  return out;
}

inline Cells apply_col_exchange(const Cells& c, int col) {
  Cells out = c;
  for (auto& p : out.rows) {
    for (auto& v : p) {
      if (v == col) v = static_cast<std::uint8_t>(col + 1);
      else if (v == col + 1) v = static_cast<std::uint8_t>(col);
    }
    if (p[0] > p[1]) std::swap(p[0], p[1]);
  }
  return out;
}

inline Cells apply_cyclic_row(const Cells& c, bool forward) {
  Cells out = c;
  if (forward)
    std::rotate(out.rows.begin(), out.rows.begin() + 1, out.rows.end());
  else
    std::rotate(out.rows.begin(), out.rows.end() - 1, out.rows.end());
  return out;
}

inline Cells apply_cyclic_col(const Cells& c, bool forward) {
  const int n = c.n();
  Cells out = c;
  for (auto& p : out.rows) {
    for (auto& v : p)
      v = forward ? (v == 0 ? static_cast<std::uint8_t>(n - 1)
                            : static_cast<std::uint8_t>(v - 1))
                  : (v == n - 1 ? std::uint8_t{0} : static_cast<std::uint8_t>(v + 1));
    if (p[0] > p[1]) std::swap(p[0], p[1]);
  }
  return out;
}

inline Cells apply_destabilize(const Cells& c, int r, int col) {
  const int n = c.n();
  int out_col = -1;
  for (int rr : {r, r + 1})
    for (std::uint8_t v : c.rows[rr])
      if (v != col && v != col + 1) out_col = v;
  auto cmap = [&](int v) {
    return v >= col + 1 ? (v == col + 1 ? col : v - 1) : v;
  };
  Cells out;
  out.rows.reserve(n - 1);
  for (int rr = 0; rr < n; ++rr) {
    if (rr == r + 1) continue;
    if (rr == r) {
      int a = cmap(out_col), b = col;
      out.rows.push_back({static_cast<std::uint8_t>(std::min(a, b)),
                          static_cast<std::uint8_t>(std::max(a, b))});
    } else {
      int a = cmap(c.rows[rr][0]), b = cmap(c.rows[rr][1]);
      out.rows.push_back({static_cast<std::uint8_t>(std::min(a, b)),
                          static_cast<std::uint8_t>(std::max(a, b))});
    }
  }
  return out;
}

// corner: 0 NW, 1 NE, 2 SW, 3 SE (the empty cell of the new block)
inline Cells apply_stabilize(const Cells& c, int r, int col, int corner) {
  const int n = c.n();
  int other_col = c.rows[r][0] == col ? c.rows[r][1] : c.rows[r][0];
  auto spans = col_spans(c);
  int other_row = spans[col][0] == r ? spans[col][1] : spans[col][0];
  auto cmap = [&](int v) { return v > col ? v + 1 : v; };
  auto rmap = [&](int v) { return v > r ? v + 1 : v; };
  const int er = (corner == 0 || corner == 1) ? r : r + 1;
  const int ec = (corner == 0 || corner == 2) ? col : col + 1;
  const int fr = er == r ? r + 1 : r;
  const int fc = ec == col ? col + 1 : col;
  std::vector<std::vector<int>> per_row(n + 1);
  for (int rr = 0; rr < n; ++rr) {
    if (rr == r) continue;
    for (std::uint8_t v : c.rows[rr]) {
      int cc = cmap(v);
      if (rr == other_row && v == col) cc = ec;  // column c's far marker moves
      per_row[rmap(rr)].push_back(cc);
    }
  }
  per_row[er].push_back(fc);
  per_row[er].push_back(cmap(other_col));
  per_row[fr].push_back(ec);
  per_row[fr].push_back(fc);
  Cells out;
  out.rows.reserve(n + 1);
  for (auto& v : per_row) {
    out.rows.push_back({static_cast<std::uint8_t>(std::min(v[0], v[1])),
                        static_cast<std::uint8_t>(std::max(v[0], v[1]))});
  }
  return out;
}

// Enumerates legal complexity-non-increasing moves in the canonical order
// (row exchanges, column exchanges, destabilizations, cyclic translations).
template <typename F>
void for_each_monotone_move(const Cells& c, bool cyclic, F&& emit) {
  const int n = c.n();
  auto spans = col_spans(c);
  for (int r = 0; r < n - 1; ++r) {
    if (spans_exchangeable(c.rows[r][0], c.rows[r][1], c.rows[r + 1][0],
                           c.rows[r + 1][1]))
      emit(pack_move(Move::row_exchange(r)), apply_row_exchange(c, r));
  }
  for (int col = 0; col < n - 1; ++col) {
    if (spans_exchangeable(spans[col][0], spans[col][1], spans[col + 1][0],
                           spans[col + 1][1]))
      emit(pack_move(Move::col_exchange(col)), apply_col_exchange(c, col));
  }
  for (int r = 0; r < n - 1; ++r)
    for (int col = 0; col < n - 1; ++col)
      if (block_markers(c, r, col) == 3)
        emit(pack_move(Move::destabilize(r, col)), apply_destabilize(c, r, col));
  if (cyclic) {
    emit(pack_move(Move::cyclic_row(Direction::Forward)), apply_cyclic_row(c, true));
    emit(pack_move(Move::cyclic_row(Direction::Backward)), apply_cyclic_row(c, false));
    emit(pack_move(Move::cyclic_col(Direction::Forward)), apply_cyclic_col(c, true));
    emit(pack_move(Move::cyclic_col(Direction::Backward)), apply_cyclic_col(c, false));
  }
}

// All stabilizations, for the census's reverse exploration.
template <typename F>
void for_each_stabilize(const Cells& c, F&& emit) {
  const int n = c.n();
  for (int r = 0; r < n; ++r)
    for (int col = 0; col < n; ++col)
      if (marker_at(c, r, col))
        for (int corner = 0; corner < 4; ++corner)
          emit(pack_move(Move::stabilize(r, col, static_cast<Corner>(corner))),
               apply_stabilize(c, r, col, corner));
}

}  // namespace gridknot::cells
