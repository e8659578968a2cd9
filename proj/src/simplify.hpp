#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "grid.hpp"
#include "moves.hpp"

namespace gridknot {

enum class SearchTarget : std::uint8_t { Trivial, Split, Composite };
enum class SearchMode : std::uint8_t { Exhaustive, Greedy };

struct SearchConfig {
  SearchTarget target = SearchTarget::Trivial;
  SearchMode mode = SearchMode::Exhaustive;
  bool cyclic_moves = true;
  std::optional<std::uint64_t> max_nodes;  // absent: no cap
  int threads = 1;
};

enum class Verdict : std::uint8_t { Trivialized, Irreducible, TargetFound, Inconclusive };

const char* verdict_name(Verdict v);
std::optional<Verdict> verdict_from_name(std::string_view word);

struct SearchStats {
  std::uint64_t nodes_discovered = 0;
  std::uint64_t nodes_expanded = 0;
  int max_certificate_crossings = 0;
  int initial_complexity = 0;
  int final_complexity = 0;
  ReidemeisterCost ledger_totals;
  int unmodeled_moves = 0;
  int flagged_moves = 0;
  double wall_seconds = 0.0;  // only nondeterministic field
};

struct SimplifyResult {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<Move> certificate;  // replays from the input to `final`
  GridDiagram final;
  SearchStats stats;
};

// Monotone search: exchanges, cyclic translations (optional) and
// destabilizations only, so complexity never exceeds the input's. Results are
// bit-identical for any thread count.
SimplifyResult simplify(const GridDiagram& g, const SearchConfig& cfg = {});

enum class ClaimedForm : std::uint8_t { Trivialized, Split, Composite };

struct VerifyReport {
  bool pass = false;
  std::vector<std::string> failures;
  bool replay_ok = false;
  bool complexity_monotone = false;
  bool final_matches = false;
  int moves = 0;
  int max_crossings = 0;
  int max_complexity = 0;
  ReidemeisterCost totals;
  int unmodeled_moves = 0;
  int flagged_moves = 0;
  std::string final_grid;
  BigInt sequence_length_bound_value;
  bool within_sequence_bound = false;
  BigInt reidemeister_total_bound_value;
  bool within_reidemeister_bound = false;
  long long max_crossings_bound_value = 0;
  bool within_crossings_bound = false;
};

VerifyReport verify_certificate(const GridDiagram& g, std::span<const Move> seq,
                                ClaimedForm claimed);
std::string format_verify_report(const VerifyReport& r);

// Certificate file: `from <inline normalized grid>`, `target <word>`,
// `verdict <word>`, then one move per line.
std::string format_certificate(const GridDiagram& from, const SimplifyResult& res,
                               SearchTarget target);

struct Certificate {
  std::optional<GridDiagram> from;
  std::optional<std::string> verdict_word;
  std::optional<std::string> target_word;
  std::vector<Move> moves;
};

Certificate parse_certificate(std::string_view text);

// Composite detection with the non-triviality of each side decided by a
// recursive exhaustive search instead of the crossing-count proxy. Both sides
// must be single-component.
std::optional<CompositeLine> composite_form_recursive(const GridDiagram& g,
                                                      const SearchConfig& cfg = {});

}  // namespace gridknot
