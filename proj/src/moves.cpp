#include "moves.hpp"

#include <algorithm>
#include <array>
#include <charconv>

namespace gridknot {

namespace {

bool marker_at(const GridDiagram& g, int r, int c) {
  return g.x_cols[r] == c || g.o_cols[r] == c;
}

int block_markers(const GridDiagram& g, int r, int c) {
  int cnt = 0;
  for (int rr : {r, r + 1})
    for (int cc : {c, c + 1})
      if (marker_at(g, rr, cc)) ++cnt;
  return cnt;
}

// spans (lo, hi) of two arcs: legal to exchange iff no shared endpoint and
// not interleaved
bool spans_exchangeable(int a1, int b1, int a2, int b2) {
  if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) return false;
  bool inter = (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1);
  return !inter;
}

}  // namespace

LegalityCheck is_legal(const GridDiagram& g, const Move& m) {
  const int n = g.size();
  switch (m.kind) {
    case MoveKind::RowExchange: {
      if (m.r < 0 || m.r > n - 2)
        throw Error("row exchange index out of range: " + std::to_string(m.r));
      int a1 = std::min(g.x_cols[m.r], g.o_cols[m.r]);
      int b1 = std::max(g.x_cols[m.r], g.o_cols[m.r]);
      int a2 = std::min(g.x_cols[m.r + 1], g.o_cols[m.r + 1]);
      int b2 = std::max(g.x_cols[m.r + 1], g.o_cols[m.r + 1]);
      if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2)
        return {false, "rows share a column"};
      if (!spans_exchangeable(a1, b1, a2, b2))
        return {false, "row spans interleave"};
      return {true, {}};
    }
    case MoveKind::ColExchange: {
      if (m.c < 0 || m.c > n - 2)
        throw Error("column exchange index out of range: " + std::to_string(m.c));
      auto spans = column_spans(g);
      auto [a1, b1] = spans[m.c];
      auto [a2, b2] = spans[m.c + 1];
      if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2)
        return {false, "columns share a row"};
      if (!spans_exchangeable(a1, b1, a2, b2))
        return {false, "column spans interleave"};
      return {true, {}};
    }
    case MoveKind::Destabilize: {
      if (m.r < 0 || m.r > n - 2 || m.c < 0 || m.c > n - 2)
        throw Error("destabilize block out of range");
      int cnt = block_markers(g, m.r, m.c);
      if (cnt != 3)
        return {false, "block holds " + std::to_string(cnt) + " markers, needs 3"};
      return {true, {}};
    }
    case MoveKind::Stabilize: {
      if (m.r < 0 || m.r >= n || m.c < 0 || m.c >= n)
        throw Error("stabilize cell out of range");
      if (!marker_at(g, m.r, m.c)) return {false, "cell holds no marker"};
      return {true, {}};
    }
    case MoveKind::CyclicRow:
    case MoveKind::CyclicCol:
      return {true, {}};
  }
  return {false, "unknown move"};
}

GridDiagram apply_move(const GridDiagram& g, const Move& m) {
  auto chk = is_legal(g, m);
  if (!chk.legal)
    throw IllegalMoveError("illegal move " + format_move(m) + ": " + chk.reason);
  const int n = g.size();
  switch (m.kind) {
    case MoveKind::RowExchange: {
      GridDiagram out = g;
      std::swap(out.x_cols[m.r], out.x_cols[m.r + 1]);
      std::swap(out.o_cols[m.r], out.o_cols[m.r + 1]);
      return out;
    }
    case MoveKind::ColExchange: {
      GridDiagram out = g;
      for (auto* v : {&out.x_cols, &out.o_cols})
        for (int& c : *v) {
          if (c == m.c) c = m.c + 1;
          else if (c == m.c + 1) c = m.c;
        }
      return out;
    }
    case MoveKind::CyclicRow: {
      GridDiagram out = g;
      if (m.dir == Direction::Forward) {
        std::rotate(out.x_cols.begin(), out.x_cols.begin() + 1, out.x_cols.end());
        std::rotate(out.o_cols.begin(), out.o_cols.begin() + 1, out.o_cols.end());
      } else {
        std::rotate(out.x_cols.begin(), out.x_cols.end() - 1, out.x_cols.end());
        std::rotate(out.o_cols.begin(), out.o_cols.end() - 1, out.o_cols.end());
      }
      return out;
    }
    case MoveKind::CyclicCol: {
      GridDiagram out = g;
      for (auto* v : {&out.x_cols, &out.o_cols})
        for (int& c : *v)
          c = m.dir == Direction::Forward ? (c == 0 ? n - 1 : c - 1)
                                          : (c == n - 1 ? 0 : c + 1);
      return out;
    }
    case MoveKind::Destabilize: {
      const int r = m.r, c = m.c;
      // the block's doubled type lands on the merged cell; the one marker of
      // rows r, r+1 outside columns c, c+1 keeps its own type
      int out_col = -1;
      int x_in_block = 0;
      for (int rr : {r, r + 1}) {
        if (g.x_cols[rr] == c || g.x_cols[rr] == c + 1) ++x_in_block;
        else out_col = g.x_cols[rr];
        if (g.o_cols[rr] != c && g.o_cols[rr] != c + 1) out_col = g.o_cols[rr];
      }
      const bool doubled_is_x = x_in_block == 2;
      auto cmap = [&](int v) { return v >= c + 1 ? (v == c + 1 ? c : v - 1) : v; };
      GridDiagram out;
      out.x_cols.reserve(n - 1);
      out.o_cols.reserve(n - 1);
      for (int rr = 0; rr < n; ++rr) {
        if (rr == r + 1) continue;
        if (rr == r) {
          int xv = doubled_is_x ? c : cmap(out_col);
          int ov = doubled_is_x ? cmap(out_col) : c;
          out.x_cols.push_back(xv);
          out.o_cols.push_back(ov);
        } else {
          out.x_cols.push_back(cmap(g.x_cols[rr]));
          out.o_cols.push_back(cmap(g.o_cols[rr]));
        }
      }
      return out;
    }
    case MoveKind::Stabilize: {
      const int r = m.r, c = m.c;
      const bool orig_is_x = g.x_cols[r] == c;
      const int other_col = orig_is_x ? g.o_cols[r] : g.x_cols[r];
      auto spans = column_spans(g);
      const int other_row = spans[c].first == r ? spans[c].second : spans[c].first;
      auto cmap = [&](int v) { return v > c ? v + 1 : v; };
      auto rmap = [&](int v) { return v > r ? v + 1 : v; };
      GridDiagram out;
      out.x_cols.assign(n + 1, -1);
      out.o_cols.assign(n + 1, -1);
      for (int rr = 0; rr < n; ++rr) {
        if (rr == r) continue;
        out.x_cols[rmap(rr)] = cmap(g.x_cols[rr]);
        out.o_cols[rmap(rr)] = cmap(g.o_cols[rr]);
      }
      // empty corner cell of the new block
      const int er = (m.corner == Corner::NW || m.corner == Corner::NE) ? r : r + 1;
      const int ec = (m.corner == Corner::NW || m.corner == Corner::SW) ? c : c + 1;
      const int fr = er == r ? r + 1 : r;  // full block row
      const int fc = ec == c ? c + 1 : c;  // full block column
      // corners adjacent to the empty cell keep the original type, the
      // diagonal one gets the opposite type
      auto put = [&](int rr, int cc, bool as_x) {
        (as_x ? out.x_cols : out.o_cols)[rr] = cc;
      };
      put(er, fc, orig_is_x);          // adjacent (same row as empty)
      put(fr, ec, orig_is_x);          // adjacent (same column as empty)
      put(fr, fc, !orig_is_x);         // diagonal
      // outside markers rejoin the empty corner's row and column; the second
      // put overwrites the stale cmap copy of column c's far marker
      put(er, cmap(other_col), !orig_is_x);
      put(rmap(other_row), ec, g.x_cols[other_row] == c);
      return out;
    }
  }
  throw Error("unknown move kind");
}

std::vector<Move> legal_moves(const GridDiagram& g, unsigned classes) {
  const int n = g.size();
  std::vector<Move> out;
  if (classes & move_class::Exchange) {
    for (int r = 0; r < n - 1; ++r)
      if (is_legal(g, Move::row_exchange(r)).legal) out.push_back(Move::row_exchange(r));
    for (int c = 0; c < n - 1; ++c)
      if (is_legal(g, Move::col_exchange(c)).legal) out.push_back(Move::col_exchange(c));
  }
  if (classes & move_class::Destabilize) {
    for (int r = 0; r < n - 1; ++r)
      for (int c = 0; c < n - 1; ++c)
        if (block_markers(g, r, c) == 3) out.push_back(Move::destabilize(r, c));
  }
  if (classes & move_class::Stabilize) {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (marker_at(g, r, c))
          for (Corner k : {Corner::NW, Corner::NE, Corner::SW, Corner::SE})
            out.push_back(Move::stabilize(r, c, k));
  }
  if (classes & move_class::Cyclic) {
    out.push_back(Move::cyclic_row(Direction::Forward));
    out.push_back(Move::cyclic_row(Direction::Backward));
    out.push_back(Move::cyclic_col(Direction::Forward));
    out.push_back(Move::cyclic_col(Direction::Backward));
  }
  return out;
}

ReidemeisterCost reidemeister_cost(const GridDiagram& g, const Move& m) {
  auto chk = is_legal(g, m);
  if (!chk.legal)
    throw IllegalMoveError("illegal move " + format_move(m) + ": " + chk.reason);
  ReidemeisterCost cost;
  GridDiagram after = apply_move(g, m);
  cost.crossing_delta = crossing_count(after) - crossing_count(g);
  switch (m.kind) {
    case MoveKind::RowExchange:
    case MoveKind::ColExchange: {
      // d = transversal arcs strictly crossing both exchanged arcs
      int d = 0;
      if (m.kind == MoveKind::RowExchange) {
        auto spans = column_spans(g);
        for (int c = 0; c < g.size(); ++c) {
          auto [lo, hi] = spans[c];
          if (!(lo < m.r && m.r + 1 < hi)) continue;
          int a1 = std::min(g.x_cols[m.r], g.o_cols[m.r]);
          int b1 = std::max(g.x_cols[m.r], g.o_cols[m.r]);
          int a2 = std::min(g.x_cols[m.r + 1], g.o_cols[m.r + 1]);
          int b2 = std::max(g.x_cols[m.r + 1], g.o_cols[m.r + 1]);
          if (a1 < c && c < b1 && a2 < c && c < b2) ++d;
        }
      } else {
        auto spans = column_spans(g);
        auto [a1, b1] = spans[m.c];
        auto [a2, b2] = spans[m.c + 1];
        for (int r = 0; r < g.size(); ++r) {
          int lo = std::min(g.x_cols[r], g.o_cols[r]);
          int hi = std::max(g.x_cols[r], g.o_cols[r]);
          if (!(lo < m.c && m.c + 1 < hi)) continue;
          if (a1 < r && r < b1 && a2 < r && r < b2) ++d;
        }
      }
      cost.r3 = d;
      cost.r2 = std::abs(cost.crossing_delta) == 2 ? 1 : 0;
      return cost;
    }
    case MoveKind::Destabilize:
      cost.r1 = cost.crossing_delta < 0 ? 1 : 0;
      cost.delta_flag = cost.crossing_delta < -1;
      return cost;
    case MoveKind::Stabilize:
      cost.r1 = cost.crossing_delta > 0 ? 1 : 0;
      return cost;
    case MoveKind::CyclicRow:
    case MoveKind::CyclicCol:
      cost.unmodeled = true;
      return cost;
  }
  return cost;
}

SequenceResult apply_sequence(const GridDiagram& g, std::span<const Move> seq) {
  SequenceResult res;
  if (auto v = validate(g); !v.empty()) throw ValidationError(std::move(v));
  GridDiagram cur = g;
  res.max_crossings = crossing_count(cur);
  res.max_complexity = cur.size();
  int pos = 0;
  for (const Move& m : seq) {
    auto chk = is_legal(cur, m);
    if (!chk.legal)
      throw IllegalMoveError("move " + std::to_string(pos) + " (" + format_move(m) +
                             ") illegal: " + chk.reason);
    ReidemeisterCost cost = reidemeister_cost(cur, m);
    cur = apply_move(cur, m);
    res.ledger.push_back({m, cost});
    res.totals.r1 += cost.r1;
    res.totals.r2 += cost.r2;
    res.totals.r3 += cost.r3;
    res.totals.crossing_delta += cost.crossing_delta;
    if (cost.unmodeled) ++res.unmodeled_moves;
    if (cost.delta_flag) ++res.flagged_moves;
    res.max_crossings = std::max(res.max_crossings, crossing_count(cur));
    res.max_complexity = std::max(res.max_complexity, cur.size());
    ++pos;
  }
  res.totals.unmodeled = res.unmodeled_moves > 0;
  res.totals.delta_flag = res.flagged_moves > 0;
  res.final = std::move(cur);
  return res;
}

std::string format_move(const Move& m) {
  switch (m.kind) {
    case MoveKind::RowExchange: return "rx " + std::to_string(m.r);
    case MoveKind::ColExchange: return "cx " + std::to_string(m.c);
    case MoveKind::Destabilize:
      return "ds " + std::to_string(m.r) + " " + std::to_string(m.c);
    case MoveKind::Stabilize: {
      static constexpr const char* names[] = {"nw", "ne", "sw", "se"};
      return "st " + std::to_string(m.r) + " " + std::to_string(m.c) + " " +
             names[static_cast<int>(m.corner)];
    }
    case MoveKind::CyclicRow:
      return std::string("cyr ") + (m.dir == Direction::Forward ? "+" : "-");
    case MoveKind::CyclicCol:
      return std::string("cyc ") + (m.dir == Direction::Forward ? "+" : "-");
  }
  return "?";
}

namespace {

std::vector<std::string_view> tokens_of(std::string_view s) {
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

int to_int(std::string_view tok, int line) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError("expected integer, got '" + std::string(tok) + "'", line, 1);
  return v;
}

}  // namespace

Move parse_move(std::string_view line, int line_number) {
  auto t = tokens_of(line);
  if (t.empty()) throw ParseError("empty move line", line_number, 1);
  auto need = [&](size_t k) {
    if (t.size() != k)
      throw ParseError("move '" + std::string(t[0]) + "' takes " +
                           std::to_string(k - 1) + " arguments",
                       line_number, 1);
  };
  if (t[0] == "rx") { need(2); return Move::row_exchange(to_int(t[1], line_number)); }
  if (t[0] == "cx") { need(2); return Move::col_exchange(to_int(t[1], line_number)); }
  if (t[0] == "ds") {
    need(3);
    return Move::destabilize(to_int(t[1], line_number), to_int(t[2], line_number));
  }
  if (t[0] == "st") {
    need(4);
    Corner k;
    if (t[3] == "nw") k = Corner::NW;
    else if (t[3] == "ne") k = Corner::NE;
    else if (t[3] == "sw") k = Corner::SW;
    else if (t[3] == "se") k = Corner::SE;
    else throw ParseError("bad corner '" + std::string(t[3]) + "'", line_number, 1);
    return Move::stabilize(to_int(t[1], line_number), to_int(t[2], line_number), k);
  }
  if (t[0] == "cyr" || t[0] == "cyc") {
    need(2);
    Direction d;
    if (t[1] == "+") d = Direction::Forward;
    else if (t[1] == "-") d = Direction::Backward;
    else throw ParseError("bad direction '" + std::string(t[1]) + "'", line_number, 1);
    return t[0] == "cyr" ? Move::cyclic_row(d) : Move::cyclic_col(d);
  }
  throw ParseError("unknown move '" + std::string(t[0]) + "'", line_number, 1);
}

std::vector<Move> parse_moves(std::string_view text) {
  std::vector<Move> out;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++number;
    size_t b = line.find_first_not_of(" \t\r");
    if (b != std::string_view::npos && line[b] != '#')
      out.push_back(parse_move(line, number));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

std::string format_ledger(const SequenceResult& res) {
  std::string out;
  for (const auto& e : res.ledger) {
    out += format_move(e.move);
    out += " dcr=" + std::to_string(e.cost.crossing_delta);
    out += " r1=" + std::to_string(e.cost.r1);
    out += " r2=" + std::to_string(e.cost.r2);
    out += " r3=" + std::to_string(e.cost.r3);
    if (e.cost.unmodeled) out += " unmodeled";
    if (e.cost.delta_flag) out += " flagged";
    out += "\n";
  }
  out += "total dcr=" + std::to_string(res.totals.crossing_delta);
  out += " r1=" + std::to_string(res.totals.r1);
  out += " r2=" + std::to_string(res.totals.r2);
  out += " r3=" + std::to_string(res.totals.r3);
  out += " unmodeled=" + std::to_string(res.unmodeled_moves);
  if (res.flagged_moves) out += " flagged=" + std::to_string(res.flagged_moves);
  out += "\n";
  return out;
}

}  // namespace gridknot
