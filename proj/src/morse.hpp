#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "grid.hpp"

namespace gridknot {

// One singularity per height, heights in sequence order. Positions count live
// strands left to right, 0-based. CrossOver(p): strand p passes over strand
// p+1; CrossUnder(p): strand p passes under.
enum class MorseEventKind : std::uint8_t { Cup, Cap, CrossOver, CrossUnder };

struct MorseEvent {
  MorseEventKind kind;
  int pos;
  bool operator==(const MorseEvent&) const = default;
};

struct MorseWord {
  std::vector<MorseEvent> events;
};

struct MorseStats {
  int maxima = 0;      // cap events
  int crossings = 0;
  int complexity = 0;  // 2*maxima + crossings
};

MorseWord parse_morse(std::string_view text);
std::string serialize_morse(const MorseWord& w);
MorseStats morse_stats(const MorseWord& w);
int morse_component_count(const MorseWord& w);

// Direct construction: one grid row per event, so the result has complexity
// exactly 2*maxima + crossings and one transversal crossing per crossing
// event. Requires a non-empty word.
GridDiagram morse_to_grid(const MorseWord& w);

}  // namespace gridknot
