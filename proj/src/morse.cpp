#include "morse.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace gridknot {

namespace {

struct RawLine {
  std::string_view text;
  int number;
};

std::vector<RawLine> content_lines(std::string_view text) {
  std::vector<RawLine> out;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++number;
    size_t b = line.find_first_not_of(" \t\r");
    if (b != std::string_view::npos && line[b] != '#') out.push_back({line, number});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

void check_positions(const MorseWord& w) {
  int count = 0;
  int idx = 0;
  for (const auto& e : w.events) {
    switch (e.kind) {
      case MorseEventKind::Cup:
        if (e.pos < 0 || e.pos > count)
          throw Error("event " + std::to_string(idx) + ": cup position " +
                      std::to_string(e.pos) + " exceeds live strand count " +
                      std::to_string(count));
        count += 2;
        break;
      case MorseEventKind::Cap:
        if (count < 2 || e.pos < 0 || e.pos > count - 2)
          throw Error("event " + std::to_string(idx) + ": cap position " +
                      std::to_string(e.pos) + " exceeds live strands-2 (" +
                      std::to_string(count) + " live)");
        count -= 2;
        break;
      case MorseEventKind::CrossOver:
      case MorseEventKind::CrossUnder:
        if (count < 2 || e.pos < 0 || e.pos > count - 2)
          throw Error("event " + std::to_string(idx) + ": crossing position " +
                      std::to_string(e.pos) + " exceeds live strands-2 (" +
                      std::to_string(count) + " live)");
        break;
    }
    ++idx;
  }
  if (count != 0)
    throw Error("word ends with " + std::to_string(count) + " open strands");
}

}  // namespace

MorseWord parse_morse(std::string_view text) {
  MorseWord w;
  for (const auto& ln : content_lines(text)) {
    std::vector<std::string_view> toks;
    size_t i = 0;
    while (i < ln.text.size()) {
      while (i < ln.text.size() &&
             (ln.text[i] == ' ' || ln.text[i] == '\t' || ln.text[i] == '\r'))
        ++i;
      size_t j = i;
      while (j < ln.text.size() && ln.text[j] != ' ' && ln.text[j] != '\t' &&
             ln.text[j] != '\r')
        ++j;
      if (j > i) toks.push_back(ln.text.substr(i, j - i));
      i = j;
    }
    if (toks.empty()) continue;
    MorseEventKind kind;
    if (toks[0] == "cup") kind = MorseEventKind::Cup;
    else if (toks[0] == "cap") kind = MorseEventKind::Cap;
    else if (toks[0] == "xo") kind = MorseEventKind::CrossOver;
    else if (toks[0] == "xu") kind = MorseEventKind::CrossUnder;
    else throw ParseError("unknown event '" + std::string(toks[0]) + "'", ln.number, 1);
    if (toks.size() != 2)
      throw ParseError("event needs exactly one position", ln.number, 1);
    int pos = 0;
    auto [p, ec] = std::from_chars(toks[1].data(), toks[1].data() + toks[1].size(), pos);
    if (ec != std::errc() || p != toks[1].data() + toks[1].size())
      throw ParseError("bad position '" + std::string(toks[1]) + "'", ln.number, 1);
    w.events.push_back({kind, pos});
  }
  check_positions(w);
  return w;
}

std::string serialize_morse(const MorseWord& w) {
  std::string out;
  for (const auto& e : w.events) {
    switch (e.kind) {
      case MorseEventKind::Cup: out += "cup "; break;
      case MorseEventKind::Cap: out += "cap "; break;
      case MorseEventKind::CrossOver: out += "xo "; break;
      case MorseEventKind::CrossUnder: out += "xu "; break;
    }
    out += std::to_string(e.pos) + "\n";
  }
  return out;
}

MorseStats morse_stats(const MorseWord& w) {
  MorseStats s;
  for (const auto& e : w.events) {
    if (e.kind == MorseEventKind::Cap) ++s.maxima;
    if (e.kind == MorseEventKind::CrossOver || e.kind == MorseEventKind::CrossUnder)
      ++s.crossings;
  }
  s.complexity = 2 * s.maxima + s.crossings;
  return s;
}

int morse_component_count(const MorseWord& w) {
  // strands get ids; cups and caps pair ids, crossings permute positions
  std::vector<int> live;
  std::vector<std::pair<int, int>> edges;
  int next_id = 0;
  for (const auto& e : w.events) {
    switch (e.kind) {
      case MorseEventKind::Cup: {
        int a = next_id++, b = next_id++;
        edges.emplace_back(a, b);
        live.insert(live.begin() + e.pos, {a, b});
        break;
      }
      case MorseEventKind::Cap:
        edges.emplace_back(live[e.pos], live[e.pos + 1]);
        live.erase(live.begin() + e.pos, live.begin() + e.pos + 2);
        break;
      default:
        std::swap(live[e.pos], live[e.pos + 1]);
    }
  }
  // each id has exactly one cup edge and one cap edge: count cycles
  std::vector<std::vector<int>> adj(next_id);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(next_id, 0);
  int comps = 0;
  for (int v = 0; v < next_id; ++v) {
    if (seen[v]) continue;
    ++comps;
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      if (seen[u]) continue;
      seen[u] = 1;
      for (int t : adj[u]) stack.push_back(t);
    }
  }
  return comps;
}

GridDiagram morse_to_grid(const MorseWord& w) {
  if (w.events.empty()) throw Error("cannot convert an empty word");
  check_positions(w);
  std::vector<int> slots;       // column slot ids, left to right
  std::vector<int> live_slots;  // slot id per live strand, left to right
  std::vector<std::pair<int, int>> rows;  // (slot, slot) per event
  int next_slot = 0;
  auto insert_slot = [&](int position) {
    slots.insert(slots.begin() + position, next_slot);
    return next_slot++;
  };
  auto slot_position = [&](int slot) {
    return static_cast<int>(std::find(slots.begin(), slots.end(), slot) -
                            slots.begin());
  };
  for (const auto& e : w.events) {
    switch (e.kind) {
      case MorseEventKind::Cup: {
        // new columns go immediately left of live strand pos (or at the far
        // right when appending)
        int ins = e.pos == static_cast<int>(live_slots.size())
                      ? static_cast<int>(slots.size())
                      : slot_position(live_slots[e.pos]);
        int s1 = insert_slot(ins);
        int s2 = insert_slot(ins + 1);
        rows.emplace_back(s1, s2);
        live_slots.insert(live_slots.begin() + e.pos, {s1, s2});
        break;
      }
      case MorseEventKind::Cap: {
        rows.emplace_back(live_slots[e.pos], live_slots[e.pos + 1]);
        live_slots.erase(live_slots.begin() + e.pos, live_slots.begin() + e.pos + 2);
        break;
      }
      case MorseEventKind::CrossOver:
      case MorseEventKind::CrossUnder: {
        // the over strand keeps its column; the under strand jogs to a fresh
        // column immediately on the far side of the over strand's column
        int over_i = e.kind == MorseEventKind::CrossOver ? e.pos : e.pos + 1;
        int under_i = e.kind == MorseEventKind::CrossOver ? e.pos + 1 : e.pos;
        int over_slot = live_slots[over_i];
        int under_slot = live_slots[under_i];
        int oi = slot_position(over_slot);
        int fresh = insert_slot(under_i > over_i ? oi : oi + 1);
        rows.emplace_back(under_slot, fresh);
        live_slots[under_i] = fresh;
        std::swap(live_slots[e.pos], live_slots[e.pos + 1]);
        break;
      }
    }
  }
  const int n = static_cast<int>(rows.size());
  std::vector<int> col_of(next_slot);
  for (int i = 0; i < n; ++i) col_of[slots[i]] = i;
  UnorientedKey key;
  key.n = n;
  for (auto [a, b] : rows) {
    int ca = col_of[a], cb = col_of[b];
    key.row_pairs.emplace_back(std::min(ca, cb), std::max(ca, cb));
  }
  GridDiagram g = diagram_from_key(key);
  if (auto v = validate(g); !v.empty()) throw ValidationError(std::move(v));
  return g;
}

}  // namespace gridknot
