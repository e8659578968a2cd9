#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grid.hpp"

namespace gridknot {

enum class MoveKind : std::uint8_t {
  RowExchange,   // swap rows r, r+1
  ColExchange,   // swap columns c, c+1
  Destabilize,   // merge the 2x2 block with top-left cell (r, c)
  Stabilize,     // split the marker at (r, c); corner names the empty cell
  CyclicRow,     // Forward: top row to the bottom
  CyclicCol,     // Forward: left column to the right
};

enum class Corner : std::uint8_t { NW, NE, SW, SE };
enum class Direction : std::uint8_t { Forward, Backward };  // '+' / '-'

struct Move {
  MoveKind kind = MoveKind::RowExchange;
  int r = 0;
  int c = 0;
  Corner corner = Corner::NW;
  Direction dir = Direction::Forward;

  bool operator==(const Move&) const = default;

  static Move row_exchange(int r) { return {MoveKind::RowExchange, r, 0, Corner::NW, Direction::Forward}; }
  static Move col_exchange(int c) { return {MoveKind::ColExchange, 0, c, Corner::NW, Direction::Forward}; }
  static Move destabilize(int r, int c) { return {MoveKind::Destabilize, r, c, Corner::NW, Direction::Forward}; }
  static Move stabilize(int r, int c, Corner k) { return {MoveKind::Stabilize, r, c, k, Direction::Forward}; }
  static Move cyclic_row(Direction d) { return {MoveKind::CyclicRow, 0, 0, Corner::NW, d}; }
  static Move cyclic_col(Direction d) { return {MoveKind::CyclicCol, 0, 0, Corner::NW, d}; }
};

struct LegalityCheck {
  bool legal = false;
  std::string reason;  // empty when legal
};

struct IllegalMoveError : Error {
  using Error::Error;
};

// Move classes, combinable as a bitmask.
namespace move_class {
constexpr unsigned Exchange = 1u;
constexpr unsigned Destabilize = 2u;
constexpr unsigned Stabilize = 4u;
constexpr unsigned Cyclic = 8u;
constexpr unsigned Monotone = Exchange | Destabilize | Cyclic;
constexpr unsigned All = Exchange | Destabilize | Stabilize | Cyclic;
}  // namespace move_class

// Reidemeister moves attributed to one grid move. Cyclic translations carry
// no modeled cost and set `unmodeled` instead.
struct ReidemeisterCost {
  int r1 = 0;
  int r2 = 0;
  int r3 = 0;
  int crossing_delta = 0;
  bool unmodeled = false;
  // set when a destabilization drops the crossing count by more than one,
  // which the single-type-I accounting does not cover
  bool delta_flag = false;

  int total() const { return r1 + r2 + r3; }
};

LegalityCheck is_legal(const GridDiagram& g, const Move& m);
GridDiagram apply_move(const GridDiagram& g, const Move& m);
std::vector<Move> legal_moves(const GridDiagram& g, unsigned classes);
ReidemeisterCost reidemeister_cost(const GridDiagram& g, const Move& m);

struct LedgerEntry {
  Move move;
  ReidemeisterCost cost;
};

struct SequenceResult {
  GridDiagram final;
  std::vector<LedgerEntry> ledger;
  int max_crossings = 0;   // over every diagram in the replay, ends included
  int max_complexity = 0;
  ReidemeisterCost totals;  // summed; unmodeled = any, delta_flag = any
  int unmodeled_moves = 0;
  int flagged_moves = 0;
};

// Replays seq from g; throws IllegalMoveError naming the first bad position.
SequenceResult apply_sequence(const GridDiagram& g, std::span<const Move> seq);

std::string format_move(const Move& m);
Move parse_move(std::string_view line, int line_number);
std::vector<Move> parse_moves(std::string_view text);
std::string format_ledger(const SequenceResult& res);

}  // namespace gridknot
