#include "simplify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstring>
#include <thread>
#include <unordered_set>

#include "search_cells.hpp"

namespace gridknot {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Trivialized: return "TRIVIALIZED";
    case Verdict::Irreducible: return "IRREDUCIBLE";
    case Verdict::TargetFound: return "TARGET_FOUND";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::optional<Verdict> verdict_from_name(std::string_view word) {
  if (word == "TRIVIALIZED") return Verdict::Trivialized;
  if (word == "IRREDUCIBLE") return Verdict::Irreducible;
  if (word == "TARGET_FOUND") return Verdict::TargetFound;
  if (word == "INCONCLUSIVE") return Verdict::Inconclusive;
  return std::nullopt;
}

namespace {

using cells::Cells;
using cells::PackedMove;

bool cells_hit_target(const Cells& c, SearchTarget target) {
  switch (target) {
    case SearchTarget::Trivial: return c.n() == 2;
    case SearchTarget::Split: return cells::has_split_line(c);
    case SearchTarget::Composite: return cells::has_composite_line(c);
  }
  return false;
}

std::uint64_t hash_bytes(const std::uint8_t* p, size_t len) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  // finalize so the table's power-of-two masking sees mixed high bits
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdull;
  h ^= h >> 33;
  return h;
}

// append-only node store: key bytes in one arena, open-addressing index
class NodeStore {
 public:
  explicit NodeStore(size_t expect = 1 << 16) {
    table_.assign(round_up(expect * 2), Slot{});
  }

  std::uint32_t size() const { return static_cast<std::uint32_t>(offsets_.size()); }

  // returns (id, inserted)
  std::pair<std::uint32_t, bool> find_or_insert(const Cells& c, std::uint32_t parent,
                                                PackedMove mv) {
    const auto* bytes = c.bytes();
    const size_t len = c.byte_size();
    const std::uint64_t h = hash_bytes(bytes, len);
    size_t mask = table_.size() - 1;
    size_t i = h & mask;
    while (true) {
      Slot& s = table_[i];
      if (s.id_plus1 == 0) {
        std::uint32_t id = size();
        offsets_.push_back(arena_.size());
        levels_.push_back(static_cast<std::uint8_t>(c.n()));
        parents_.push_back(parent);
        moves_.push_back(mv);
        arena_.insert(arena_.end(), bytes, bytes + len);
        s.hash = h;
        s.id_plus1 = id + 1;
        ++count_;
        if (count_ * 10 >= table_.size() * 7) grow();
        return {id, true};
      }
      if (s.hash == h && equals(s.id_plus1 - 1, bytes, len)) return {s.id_plus1 - 1, false};
      i = (i + 1) & mask;
    }
  }

  Cells cells_of(std::uint32_t id) const {
    Cells c;
    int n = levels_[id];
    c.rows.resize(n);
    std::memcpy(c.rows.data(), arena_.data() + offsets_[id], 2 * n);
    return c;
  }

  int level_of(std::uint32_t id) const { return levels_[id]; }
  std::uint32_t parent_of(std::uint32_t id) const { return parents_[id]; }
  PackedMove move_of(std::uint32_t id) const { return moves_[id]; }

 private:
  struct Slot {
    std::uint64_t hash = 0;
    std::uint32_t id_plus1 = 0;
  };

  static size_t round_up(size_t v) {
    size_t p = 64;
    while (p < v) p <<= 1;
    return p;
  }

  bool equals(std::uint32_t id, const std::uint8_t* bytes, size_t len) const {
    if (levels_[id] * 2u != len) return false;
    return std::memcmp(arena_.data() + offsets_[id], bytes, len) == 0;
  }

  void grow() {
    std::vector<Slot> bigger(table_.size() * 2);
    size_t mask = bigger.size() - 1;
    for (const Slot& s : table_) {
      if (s.id_plus1 == 0) continue;
      size_t i = s.hash & mask;
      while (bigger[i].id_plus1 != 0) i = (i + 1) & mask;
      bigger[i] = s;
    }
    table_ = std::move(bigger);
  }

  std::vector<std::uint8_t> arena_;
  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint8_t> levels_;
  std::vector<std::uint32_t> parents_;
  std::vector<PackedMove> moves_;
  std::vector<Slot> table_;
  size_t count_ = 0;
};

struct Successor {
  PackedMove mv;
  std::uint32_t parent;
  std::uint32_t byte_off;
  std::uint8_t n;
};

struct SuccBuffer {
  std::vector<Successor> items;
  std::vector<std::uint8_t> bytes;

  void add(std::uint32_t parent, PackedMove mv, const Cells& c) {
    items.push_back({mv, parent, static_cast<std::uint32_t>(bytes.size()),
                     static_cast<std::uint8_t>(c.n())});
    bytes.insert(bytes.end(), c.bytes(), c.bytes() + c.byte_size());
  }

  Cells cells_at(size_t k) const {
    Cells c;
    c.rows.resize(items[k].n);
    std::memcpy(c.rows.data(), bytes.data() + items[k].byte_off, 2 * items[k].n);
    return c;
  }
};

void expand_node(const NodeStore& store, std::uint32_t id, bool cyclic,
                 SuccBuffer& out) {
  Cells c = store.cells_of(id);
  cells::for_each_monotone_move(c, cyclic, [&](PackedMove mv, const Cells& succ) {
    out.add(id, mv, succ);
  });
}

std::vector<Move> unpack_chain(const NodeStore& store, std::uint32_t id) {
  std::vector<Move> out;
  while (store.parent_of(id) != id) {
    out.push_back(cells::unpack_move(store.move_of(id)));
    id = store.parent_of(id);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

SimplifyResult finish_with_certificate(const GridDiagram& g, std::vector<Move> cert,
                                       Verdict verdict, SearchStats stats) {
  SimplifyResult res;
  res.verdict = verdict;
  SequenceResult replay = apply_sequence(g, cert);
  stats.max_certificate_crossings = replay.max_crossings;
  stats.initial_complexity = g.size();
  stats.final_complexity = replay.final.size();
  stats.ledger_totals = replay.totals;
  stats.unmodeled_moves = replay.unmodeled_moves;
  stats.flagged_moves = replay.flagged_moves;
  res.final = std::move(replay.final);
  res.certificate = std::move(cert);
  res.stats = std::move(stats);
  return res;
}

SimplifyResult simplify_exhaustive(const GridDiagram& g, const SearchConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const int n0 = g.size();
  Cells root = cells::from_diagram(g);
  SearchStats stats;
  if (cells_hit_target(root, cfg.target)) {
    stats.nodes_discovered = 1;
    auto res = finish_with_certificate(
        g, {}, cfg.target == SearchTarget::Trivial ? Verdict::Trivialized
                                                   : Verdict::TargetFound,
        stats);
    res.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
  }
  NodeStore store;
  auto [root_id, ins] = store.find_or_insert(root, 0, PackedMove{});
  (void)ins;
  // one FIFO per complexity level; always drain the lowest populated one
  std::vector<std::vector<std::uint32_t>> queue(n0 + 1);
  queue[n0].push_back(root_id);
  std::uint64_t discovered = 1, expanded = 0;
  const int threads = std::max(1, cfg.threads);

  while (true) {
    int level = -1;
    for (int k = 2; k <= n0; ++k) {
      if (!queue[k].empty()) { level = k; break; }
    }
    if (level < 0) break;  // reachable set exhausted
    std::vector<std::uint32_t> batch;
    batch.swap(queue[level]);
    expanded += batch.size();

    // expand the whole wave; buffers are merged in batch order so results do
    // not depend on the thread count
    std::vector<SuccBuffer> buffers;
    if (threads == 1 || batch.size() < 64) {
      buffers.resize(1);
      for (std::uint32_t id : batch) expand_node(store, id, cfg.cyclic_moves, buffers[0]);
    } else {
      const int nw = std::min<size_t>(threads, batch.size());
      buffers.resize(nw);
      std::vector<std::thread> pool;
      pool.reserve(nw);
      for (int w = 0; w < nw; ++w) {
        pool.emplace_back([&, w] {
          size_t lo = batch.size() * w / nw, hi = batch.size() * (w + 1) / nw;
          for (size_t i = lo; i < hi; ++i)
            expand_node(store, batch[i], cfg.cyclic_moves, buffers[w]);
        });
      }
      for (auto& t : pool) t.join();
    }

    for (const SuccBuffer& buf : buffers) {
      for (size_t k = 0; k < buf.items.size(); ++k) {
        Cells succ = buf.cells_at(k);
        auto [id, inserted] = store.find_or_insert(succ, buf.items[k].parent,
                                                   buf.items[k].mv);
        if (!inserted) continue;
        ++discovered;
        if (cells_hit_target(succ, cfg.target)) {
          stats.nodes_discovered = discovered;
          stats.nodes_expanded = expanded;
          auto res = finish_with_certificate(
              g, unpack_chain(store, id),
              cfg.target == SearchTarget::Trivial ? Verdict::Trivialized
                                                  : Verdict::TargetFound,
              stats);
          res.stats.wall_seconds =
              std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                  .count();
          return res;
        }
        queue[succ.n()].push_back(id);
      }
    }
    if (cfg.max_nodes && discovered >= *cfg.max_nodes) {
      stats.nodes_discovered = discovered;
      stats.nodes_expanded = expanded;
      auto res = finish_with_certificate(g, {}, Verdict::Inconclusive, stats);
      res.stats.wall_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      return res;
    }
  }
  stats.nodes_discovered = discovered;
  stats.nodes_expanded = expanded;
  auto res = finish_with_certificate(g, {}, Verdict::Irreducible, stats);
  res.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

SimplifyResult simplify_greedy(const GridDiagram& g, const SearchConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  Cells cur = cells::from_diagram(g);
  std::unordered_set<std::string> visited;
  auto key_of = [](const Cells& c) {
    return std::string(reinterpret_cast<const char*>(c.bytes()), c.byte_size());
  };
  visited.insert(key_of(cur));
  std::vector<Move> path;
  SearchStats stats;
  std::uint64_t discovered = 1;
  Verdict verdict = Verdict::Inconclusive;
  while (true) {
    if (cells_hit_target(cur, cfg.target)) {
      verdict = cfg.target == SearchTarget::Trivial ? Verdict::Trivialized
                                                    : Verdict::TargetFound;
      break;
    }
    // best next step: lowest complexity, then fewest crossings, then move order
    bool found = false;
    Cells best;
    PackedMove best_mv{};
    std::pair<int, int> best_rank{0, 0};
    cells::for_each_monotone_move(cur, cfg.cyclic_moves,
                                  [&](PackedMove mv, const Cells& succ) {
      if (visited.count(key_of(succ))) return;
      std::pair<int, int> rank{succ.n(), cells::crossing_count(succ)};
      if (!found || rank < best_rank) {
        found = true;
        best = succ;
        best_mv = mv;
        best_rank = rank;
      }
    });
    if (!found) break;  // dead end: the greedy path gives up
    cur = best;
    visited.insert(key_of(cur));
    ++discovered;
    path.push_back(cells::unpack_move(best_mv));
    if (cfg.max_nodes && discovered >= *cfg.max_nodes) break;
  }
  stats.nodes_discovered = discovered;
  stats.nodes_expanded = discovered;
  auto res = finish_with_certificate(g, std::move(path), verdict, stats);
  res.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace

SimplifyResult simplify(const GridDiagram& g, const SearchConfig& cfg) {
  if (auto v = validate(g); !v.empty()) throw ValidationError(std::move(v));
  if (g.size() > 255) throw Error("search supports complexity up to 255");
  return cfg.mode == SearchMode::Exhaustive ? simplify_exhaustive(g, cfg)
                                            : simplify_greedy(g, cfg);
}

VerifyReport verify_certificate(const GridDiagram& g, std::span<const Move> seq,
                                ClaimedForm claimed) {
  VerifyReport rep;
  if (auto v = validate(g); !v.empty()) {
    rep.failures.push_back("input diagram invalid: " + v.front());
    return rep;
  }
  const int n0 = g.size();
  GridDiagram cur = g;
  rep.max_crossings = crossing_count(cur);
  rep.max_complexity = n0;
  rep.complexity_monotone = true;
  rep.replay_ok = true;
  int pos = 0;
  for (const Move& m : seq) {
    auto chk = is_legal(cur, m);
    if (!chk.legal) {
      rep.failures.push_back("move " + std::to_string(pos) + " (" + format_move(m) +
                             ") illegal: " + chk.reason);
      rep.replay_ok = false;
      break;
    }
    auto cost = reidemeister_cost(cur, m);
    GridDiagram next = apply_move(cur, m);
    if (next.size() > cur.size()) {
      rep.complexity_monotone = false;
      rep.failures.push_back("move " + std::to_string(pos) + " (" + format_move(m) +
                             ") increases complexity");
    }
    rep.totals.r1 += cost.r1;
    rep.totals.r2 += cost.r2;
    rep.totals.r3 += cost.r3;
    rep.totals.crossing_delta += cost.crossing_delta;
    if (cost.unmodeled) ++rep.unmodeled_moves;
    if (cost.delta_flag) ++rep.flagged_moves;
    cur = std::move(next);
    rep.max_crossings = std::max(rep.max_crossings, crossing_count(cur));
    rep.max_complexity = std::max(rep.max_complexity, cur.size());
    ++pos;
  }
  rep.moves = pos;
  rep.final_grid = serialize_grid(cur);
  if (rep.replay_ok) {
    switch (claimed) {
      case ClaimedForm::Trivialized: rep.final_matches = is_trivial(cur); break;
      case ClaimedForm::Split: rep.final_matches = is_split_form(cur).has_value(); break;
      case ClaimedForm::Composite:
        rep.final_matches = is_composite_form(cur).has_value();
        break;
    }
    if (!rep.final_matches)
      rep.failures.push_back("final diagram does not match the claimed verdict");
  }
  rep.sequence_length_bound_value = sequence_length_bound(n0);
  rep.within_sequence_bound = BigInt(rep.moves) <= rep.sequence_length_bound_value;
  if (!rep.within_sequence_bound)
    rep.failures.push_back("certificate length exceeds the sequence-length bound");
  rep.reidemeister_total_bound_value = reidemeister_total_bound(n0);
  rep.within_reidemeister_bound =
      BigInt(rep.totals.total()) <= rep.reidemeister_total_bound_value;
  if (!rep.within_reidemeister_bound)
    rep.failures.push_back("modeled Reidemeister total exceeds the bound");
  rep.max_crossings_bound_value = max_crossings_bound(n0);
  rep.within_crossings_bound = rep.max_crossings <= rep.max_crossings_bound_value;
  if (!rep.within_crossings_bound)
    rep.failures.push_back("max crossings along the certificate exceed the bound");
  rep.pass = rep.failures.empty();
  return rep;
}

std::string format_verify_report(const VerifyReport& r) {
  std::string out;
  out += std::string("replay ") + (r.replay_ok ? "ok" : "failed") + "\n";
  out += std::string("complexity_monotone ") + (r.complexity_monotone ? "yes" : "no") + "\n";
  out += std::string("final_matches_verdict ") + (r.final_matches ? "yes" : "no") + "\n";
  out += "m " + std::to_string(r.moves) + "\n";
  out += "max_crossings " + std::to_string(r.max_crossings) + "\n";
  out += "reidemeister r1=" + std::to_string(r.totals.r1) +
         " r2=" + std::to_string(r.totals.r2) + " r3=" + std::to_string(r.totals.r3) +
         " unmodeled=" + std::to_string(r.unmodeled_moves) + "\n";
  out += "sequence_length_bound " + r.sequence_length_bound_value.str() +
         (r.within_sequence_bound ? " ok" : " EXCEEDED") + "\n";
  out += "reidemeister_total_bound " + r.reidemeister_total_bound_value.str() +
         (r.within_reidemeister_bound ? " ok" : " EXCEEDED") + "\n";
  out += "max_crossings_bound " + std::to_string(r.max_crossings_bound_value) +
         (r.within_crossings_bound ? " ok" : " EXCEEDED") + "\n";
  for (const auto& f : r.failures) out += "failure " + f + "\n";
  out += std::string("verdict ") + (r.pass ? "PASS" : "FAIL") + "\n";
  return out;
}

namespace {

std::string inline_grid(const GridDiagram& g) {
  std::string out = "grid " + std::to_string(g.size()) + " X";
  for (int c : g.x_cols) out += " " + std::to_string(c);
  out += " O";
  for (int c : g.o_cols) out += " " + std::to_string(c);
  return out;
}

const char* target_name(SearchTarget t) {
  switch (t) {
    case SearchTarget::Trivial: return "trivial";
    case SearchTarget::Split: return "split";
    case SearchTarget::Composite: return "composite";
  }
  return "?";
}

}  // namespace

std::string format_certificate(const GridDiagram& from, const SimplifyResult& res,
                               SearchTarget target) {
  std::string out = "from " + inline_grid(from) + "\n";
  out += std::string("target ") + target_name(target) + "\n";
  out += std::string("verdict ") + verdict_name(res.verdict) + "\n";
  for (const Move& m : res.certificate) out += format_move(m) + "\n";
  return out;
}

Certificate parse_certificate(std::string_view text) {
  Certificate cert;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++number;
    size_t b = line.find_first_not_of(" \t\r");
    if (b != std::string_view::npos && line[b] != '#') {
      std::string_view body = line.substr(b);
      if (body.starts_with("from ")) {
        // inline form: grid <n> X <cols> O <cols>
        std::string flat(body.substr(5));
        size_t xp = flat.find(" X ");
        size_t op = flat.find(" O ");
        if (xp == std::string::npos || op == std::string::npos)
          throw ParseError("bad 'from' header", number, 1);
        std::string text3 = flat.substr(0, xp) + "\nX" +
                            flat.substr(xp + 2, op - xp - 2) + "\nO" +
                            flat.substr(op + 2) + "\n";
        cert.from = parse_grid(text3);
      } else if (body.starts_with("verdict ")) {
        cert.verdict_word = std::string(body.substr(8));
      } else if (body.starts_with("target ")) {
        cert.target_word = std::string(body.substr(7));
      } else {
        cert.moves.push_back(parse_move(body, number));
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return cert;
}

std::optional<CompositeLine> composite_form_recursive(const GridDiagram& g,
                                                      const SearchConfig& cfg) {
  const int n = g.size();
  auto cr = crossing_cells(g);
  auto spans = column_spans(g);
  auto nontrivial = [&](const GridDiagram& factor) {
    if (component_count(factor) != 1) return true;  // a link factor
    SearchConfig sub = cfg;
    sub.target = SearchTarget::Trivial;
    sub.mode = SearchMode::Exhaustive;
    return simplify(factor, sub).verdict != Verdict::Trivialized;
  };
  auto try_line = [&](CompositeLine line) -> bool {
    auto [a, b] = composite_factors(g, line);
    return nontrivial(a) && nontrivial(b);
  };
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
    CompositeLine line{Axis::Vertical, k, left, right};
    if (try_line(line)) return line;
  }
  for (int k = 0; k < n - 1; ++k) {
    int arcs = 0;
    for (auto [lo, hi] : spans)
      if (lo <= k && k < hi) ++arcs;
    if (arcs != 2) continue;
    int above = 0, below = 0;
    for (auto [r, c] : cr) (r <= k ? above : below)++;
    CompositeLine line{Axis::Horizontal, k, above, below};
    if (try_line(line)) return line;
  }
  return std::nullopt;
}

}  // namespace gridknot
