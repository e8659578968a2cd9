#include "census.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <thread>
#include <unordered_set>

#include "search_cells.hpp"

namespace gridknot {

namespace {

using cells::Cells;

struct KeyHash {
  size_t operator()(const std::string& s) const {
    return std::hash<std::string>{}(s);
  }
};

std::string key_string(const Cells& c) {
  return std::string(reinterpret_cast<const char*>(c.bytes()), c.byte_size());
}

// every key of complexity <= ceiling from which the trivial diagram is
// monotonically reachable, computed by walking the inverse moves forward from
// the trivial diagram
std::unordered_set<std::string> unknot_closure(int ceiling) {
  Cells trivial;
  trivial.rows = {{0, 1}, {0, 1}};
  std::unordered_set<std::string> seen{key_string(trivial)};
  std::vector<Cells> stack{trivial};
  while (!stack.empty()) {
    Cells cur = stack.back();
    stack.pop_back();
    auto consider = [&](cells::PackedMove, const Cells& succ) {
      auto [it, inserted] = seen.insert(key_string(succ));
      if (inserted) stack.push_back(succ);
    };
    // exchanges and cyclic translations are involutive/invertible within a
    // level; stabilization is the inverse of destabilization
    cells::for_each_monotone_move(cur, true, [&](cells::PackedMove mv, const Cells& succ) {
      if (succ.n() == cur.n()) consider(mv, succ);
    });
    if (cur.n() < ceiling) cells::for_each_stabilize(cur, consider);
  }
  return seen;
}

int component_count_cells(const Cells& c) {
  const int n = c.n();
  auto spans = cells::col_spans(c);
  std::vector<char> seen(2 * n, 0);  // cell index: 2*r + (c == hi)
  int comps = 0;
  for (int start = 0; start < 2 * n; ++start) {
    if (seen[start]) continue;
    ++comps;
    int r = start / 2;
    int col = c.rows[r][start % 2];
    bool along_row = true;
    int r0 = r, c0 = col;
    do {
      seen[2 * r + (col == c.rows[r][1] ? 1 : 0)] = 1;
      if (along_row) {
        col = c.rows[r][0] == col ? c.rows[r][1] : c.rows[r][0];
      } else {
        r = spans[col][0] == r ? spans[col][1] : spans[col][0];
      }
      along_row = !along_row;
    } while (r != r0 || col != c0);
  }
  return comps;
}

}  // namespace

CensusReport census(const CensusConfig& cfg) {
  const int n = cfg.n;
  if (n < 2) throw Error("census needs n >= 2");
  if (n > cfg.ceiling)
    throw Error("census size " + std::to_string(n) + " exceeds the ceiling " +
                std::to_string(cfg.ceiling) + "; raise it explicitly if intended");
  if (cfg.ceiling > 7)
    throw Error("census beyond n = 7 is not memory-feasible here");

  CensusReport rep;
  rep.n = n;
  rep.class_bound = presentation_count_bound(n);
  rep.crossing_bound = max_crossings_bound(n);

  // enumerate (x, o) permutation pairs without marker collisions, dedup by key
  std::vector<int> xperm(n);
  for (int i = 0; i < n; ++i) xperm[i] = i;
  std::vector<std::vector<int>> xperms;
  do xperms.push_back(xperm);
  while (std::next_permutation(xperm.begin(), xperm.end()));

  struct ClassFacts {
    int crossings;
    int components;
  };
  const int threads = std::max(1, cfg.threads);
  std::vector<std::map<std::string, ClassFacts>> partials(threads);
  std::vector<std::uint64_t> placement_counts(threads, 0);
  auto work = [&](int w) {
    std::vector<int> operm(n);
    for (size_t xi = w; xi < xperms.size(); xi += threads) {
      const auto& x = xperms[xi];
      for (int i = 0; i < n; ++i) operm[i] = i;
      do {
        bool ok = true;
        for (int r = 0; r < n; ++r)
          if (x[r] == operm[r]) { ok = false; break; }
        if (!ok) continue;
        ++placement_counts[w];
        Cells c;
        c.rows.reserve(n);
        for (int r = 0; r < n; ++r) {
          auto lo = static_cast<std::uint8_t>(std::min(x[r], operm[r]));
          auto hi = static_cast<std::uint8_t>(std::max(x[r], operm[r]));
          c.rows.push_back({lo, hi});
        }
        std::string key = key_string(c);
        auto it = partials[w].find(key);
        if (it == partials[w].end())
          partials[w].emplace(std::move(key),
                              ClassFacts{cells::crossing_count(c),
                                         component_count_cells(c)});
      } while (std::next_permutation(operm.begin(), operm.end()));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::map<std::string, ClassFacts> classes;
  for (auto& part : partials) classes.merge(part);
  for (auto cnt : placement_counts) rep.placements += cnt;

  auto triv = unknot_closure(n);

  rep.total_classes = classes.size();
  for (const auto& [key, facts] : classes) {
    rep.max_crossings_all = std::max(rep.max_crossings_all, facts.crossings);
    if (facts.crossings > rep.crossing_bound)
      rep.violations.push_back("class " + std::to_string(rep.total_classes) +
                               " exceeds the crossing bound: " +
                               std::to_string(facts.crossings));
    if (facts.components != 1) {
      ++rep.multi_component_classes;
      continue;
    }
    ++rep.connected_classes;
    rep.max_crossings_connected = std::max(rep.max_crossings_connected, facts.crossings);
    CensusRecord rec;
    Cells c;
    c.rows.resize(n);
    std::memcpy(c.rows.data(), key.data(), key.size());
    rec.key = cells::to_key(c);
    rec.crossings = facts.crossings;
    rec.verdict = triv.count(key) ? Verdict::Trivialized : Verdict::Irreducible;
    if (rec.verdict == Verdict::Trivialized) ++rep.unknot_classes;
    rep.records.push_back(std::move(rec));
  }
  if (BigInt(rep.connected_classes) > rep.class_bound)
    rep.violations.push_back("connected class count exceeds the enumeration bound");
  return rep;
}

std::string census_table(const CensusReport& rep) {
  std::string out;
  out += "census n=" + std::to_string(rep.n) + "\n";
  out += "counting connected unoriented diagrams; multi-component classes "
         "reported separately\n";
  out += "placements " + std::to_string(rep.placements) + "\n";
  out += "classes " + std::to_string(rep.total_classes) + "\n";
  out += "connected " + std::to_string(rep.connected_classes) + "\n";
  out += "multi_component " + std::to_string(rep.multi_component_classes) + "\n";
  out += "class_bound " + rep.class_bound.str() + "\n";
  out += "unknot " + std::to_string(rep.unknot_classes) + "\n";
  char frac[32];
  std::snprintf(frac, sizeof frac, "%.6f",
                rep.connected_classes
                    ? static_cast<double>(rep.unknot_classes) / rep.connected_classes
                    : 0.0);
  out += std::string("unknot_fraction ") + frac + "\n";
  out += "max_crossings_connected " + std::to_string(rep.max_crossings_connected) + "\n";
  out += "max_crossings_all " + std::to_string(rep.max_crossings_all) + "\n";
  out += "crossing_bound " + std::to_string(rep.crossing_bound) + "\n";
  out += "violations " + std::to_string(rep.violations.size()) + "\n";
  for (const auto& v : rep.violations) out += "violation " + v + "\n";
  return out;
}

std::string census_records_jsonl(const CensusReport& rep) {
  std::string out;
  for (const auto& rec : rep.records) {
    out += "{\"n\":" + std::to_string(rec.key.n) + ",\"key\":\"" +
           rec.key.to_string() + "\",\"crossings\":" + std::to_string(rec.crossings) +
           ",\"verdict\":\"" + verdict_name(rec.verdict) + "\"}\n";
  }
  return out;
}

}  // namespace gridknot
