#include "gridknot.h"

#include <cstring>
#include <string>

#include "bounds.hpp"
#include "census.hpp"
#include "grid.hpp"
#include "morse.hpp"
#include "moves.hpp"
#include "render.hpp"
#include "simplify.hpp"

using namespace gridknot;

struct gk_grid {
  GridDiagram g;
};
struct gk_morse {
  MorseWord w;
};
struct gk_moves {
  std::vector<Move> seq;
};
struct gk_result {
  GridDiagram from;
  SearchTarget target;
  SimplifyResult res;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

gk_status set_error(gk_status st, const std::string& msg) {
  t_last_error = msg;
  return st;
}

template <typename F>
gk_status guarded(F&& fn) {
  try {
    fn();
    return GK_OK;
  } catch (const ParseError& e) {
    return set_error(GK_ERR_PARSE, e.what());
  } catch (const ValidationError& e) {
    return set_error(GK_ERR_INVALID, e.what());
  } catch (const IllegalMoveError& e) {
    return set_error(GK_ERR_MOVE, e.what());
  } catch (const Error& e) {
    return set_error(GK_ERR_ARG, e.what());
  } catch (const std::exception& e) {
    return set_error(GK_ERR_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

const char* gk_version(void) { return "0.1.0"; }

const char* gk_last_error(void) { return t_last_error.c_str(); }

void gk_string_free(char* s) { delete[] s; }

gk_status gk_grid_parse(const char* text, gk_grid** out) {
  if (!text || !out) return set_error(GK_ERR_ARG, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new gk_grid{parse_grid(text)}; });
}

gk_status gk_grid_from_arrays(int n, const int* x_cols, const int* o_cols,
                              gk_grid** out) {
  if (!x_cols || !o_cols || !out) return set_error(GK_ERR_ARG, "null argument");
  *out = nullptr;
  return guarded([&] {
    GridDiagram g(std::vector<int>(x_cols, x_cols + n),
                  std::vector<int>(o_cols, o_cols + n));
    if (auto v = validate(g); !v.empty()) throw ValidationError(std::move(v));
    *out = new gk_grid{std::move(g)};
  });
}

void gk_grid_free(gk_grid* g) { delete g; }

int gk_grid_size(const gk_grid* g) { return g->g.size(); }

void gk_grid_markers(const gk_grid* g, int* x_cols, int* o_cols) {
  for (int r = 0; r < g->g.size(); ++r) {
    if (x_cols) x_cols[r] = g->g.x_cols[r];
    if (o_cols) o_cols[r] = g->g.o_cols[r];
  }
}

char* gk_grid_serialize(const gk_grid* g) { return dup_string(serialize_grid(g->g)); }

char* gk_grid_key(const gk_grid* g) {
  return dup_string(unoriented_key(g->g).to_string());
}

gk_status gk_grid_validate_text(const char* text, char** report) {
  if (!text) return set_error(GK_ERR_ARG, "null argument");
  if (report) *report = nullptr;
  try {
    parse_grid(text);
    return GK_OK;
  } catch (const ValidationError& e) {
    if (report) {
      std::string joined;
      for (const auto& v : e.violations) {
        joined += v;
        joined += '\n';
      }
      *report = dup_string(joined);
    }
    return set_error(GK_ERR_INVALID, e.what());
  } catch (const ParseError& e) {
    if (report) *report = dup_string(std::string(e.what()) + "\n");
    return set_error(GK_ERR_PARSE, e.what());
  }
}

int gk_grid_crossings(const gk_grid* g) { return crossing_count(g->g); }

int gk_grid_components(const gk_grid* g) { return component_count(g->g); }

int gk_grid_is_trivial(const gk_grid* g) { return is_trivial(g->g) ? 1 : 0; }

int gk_grid_split_line(const gk_grid* g, int* axis, int* index) {
  auto line = is_split_form(g->g);
  if (!line) return 0;
  if (axis) *axis = line->axis == Axis::Vertical ? 0 : 1;
  if (index) *index = line->index;
  return 1;
}

int gk_grid_composite_line(const gk_grid* g, int* axis, int* index,
                           int* crossings_before, int* crossings_after) {
  auto line = is_composite_form(g->g);
  if (!line) return 0;
  if (axis) *axis = line->axis == Axis::Vertical ? 0 : 1;
  if (index) *index = line->index;
  if (crossings_before) *crossings_before = line->crossings_before;
  if (crossings_after) *crossings_after = line->crossings_after;
  return 1;
}

int gk_grid_composite_line_recursive(const gk_grid* g, int* axis, int* index,
                                     int* crossings_before, int* crossings_after) {
  auto line = composite_form_recursive(g->g);
  if (!line) return 0;
  if (axis) *axis = line->axis == Axis::Vertical ? 0 : 1;
  if (index) *index = line->index;
  if (crossings_before) *crossings_before = line->crossings_before;
  if (crossings_after) *crossings_after = line->crossings_after;
  return 1;
}

gk_status gk_grid_disjoint_union(const gk_grid* a, const gk_grid* b, gk_grid** out) {
  *out = nullptr;
  return guarded([&] { *out = new gk_grid{disjoint_union(a->g, b->g)}; });
}

gk_status gk_grid_connect_sum(const gk_grid* a, const gk_grid* b, gk_grid** out) {
  *out = nullptr;
  return guarded([&] { *out = new gk_grid{connect_sum(a->g, b->g)}; });
}

char* gk_grid_render(const gk_grid* g, int format) {
  return dup_string(format == 1 ? render_svg(g->g) : render_ascii(g->g));
}

gk_status gk_morse_parse(const char* text, gk_morse** out) {
  if (!text || !out) return set_error(GK_ERR_ARG, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new gk_morse{parse_morse(text)}; });
}

void gk_morse_free(gk_morse* w) { delete w; }

void gk_morse_stats(const gk_morse* w, int* maxima, int* crossings, int* complexity) {
  auto s = morse_stats(w->w);
  if (maxima) *maxima = s.maxima;
  if (crossings) *crossings = s.crossings;
  if (complexity) *complexity = s.complexity;
}

int gk_morse_components(const gk_morse* w) { return morse_component_count(w->w); }

gk_status gk_morse_to_grid(const gk_morse* w, gk_grid** out) {
  *out = nullptr;
  return guarded([&] { *out = new gk_grid{morse_to_grid(w->w)}; });
}

gk_status gk_moves_parse(const char* text, gk_moves** out) {
  if (!text || !out) return set_error(GK_ERR_ARG, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new gk_moves{parse_moves(text)}; });
}

gk_status gk_moves_parse_certificate(const char* text, gk_moves** out,
                                     char** verdict_word, gk_grid** from_out) {
  if (!text || !out) return set_error(GK_ERR_ARG, "null argument");
  *out = nullptr;
  if (verdict_word) *verdict_word = nullptr;
  if (from_out) *from_out = nullptr;
  return guarded([&] {
    Certificate cert = parse_certificate(text);
    *out = new gk_moves{std::move(cert.moves)};
    if (verdict_word && cert.verdict_word) *verdict_word = dup_string(*cert.verdict_word);
    if (from_out && cert.from) *from_out = new gk_grid{std::move(*cert.from)};
  });
}

void gk_moves_free(gk_moves* m) { delete m; }

int gk_moves_count(const gk_moves* m) { return static_cast<int>(m->seq.size()); }

gk_status gk_apply(const gk_grid* g, const gk_moves* m, gk_grid** final_out,
                   char** ledger_out) {
  if (final_out) *final_out = nullptr;
  if (ledger_out) *ledger_out = nullptr;
  return guarded([&] {
    SequenceResult res = apply_sequence(g->g, m->seq);
    if (ledger_out) *ledger_out = dup_string(format_ledger(res));
    if (final_out) *final_out = new gk_grid{std::move(res.final)};
  });
}

void gk_search_config_init(gk_search_config* cfg) {
  cfg->target = 0;
  cfg->mode = 0;
  cfg->cyclic_moves = 1;
  cfg->max_nodes = 0;
  cfg->threads = 1;
}

gk_status gk_simplify(const gk_grid* g, const gk_search_config* cfg, gk_result** out) {
  if (!out) return set_error(GK_ERR_ARG, "null argument");
  *out = nullptr;
  return guarded([&] {
    SearchConfig sc;
    if (cfg) {
      if (cfg->target < 0 || cfg->target > 2) throw Error("bad target");
      if (cfg->mode < 0 || cfg->mode > 1) throw Error("bad mode");
      sc.target = static_cast<SearchTarget>(cfg->target);
      sc.mode = static_cast<SearchMode>(cfg->mode);
      sc.cyclic_moves = cfg->cyclic_moves != 0;
      if (cfg->max_nodes > 0) sc.max_nodes = static_cast<std::uint64_t>(cfg->max_nodes);
      sc.threads = cfg->threads;
    }
    *out = new gk_result{g->g, sc.target, simplify(g->g, sc)};
  });
}

void gk_result_free(gk_result* r) { delete r; }

int gk_result_verdict(const gk_result* r) { return static_cast<int>(r->res.verdict); }

int gk_result_move_count(const gk_result* r) {
  return static_cast<int>(r->res.certificate.size());
}

long long gk_result_nodes(const gk_result* r) {
  return static_cast<long long>(r->res.stats.nodes_discovered);
}

long long gk_result_expanded(const gk_result* r) {
  return static_cast<long long>(r->res.stats.nodes_expanded);
}

int gk_result_max_crossings(const gk_result* r) {
  return r->res.stats.max_certificate_crossings;
}

double gk_result_wall_seconds(const gk_result* r) { return r->res.stats.wall_seconds; }

gk_status gk_result_final_grid(const gk_result* r, gk_grid** out) {
  *out = nullptr;
  return guarded([&] { *out = new gk_grid{r->res.final}; });
}

char* gk_result_certificate(const gk_result* r) {
  return dup_string(format_certificate(r->from, r->res, r->target));
}

char* gk_result_ledger(const gk_result* r) {
  return dup_string(format_ledger(apply_sequence(r->from, r->res.certificate)));
}

char* gk_result_stats(const gk_result* r) {
  const auto& s = r->res.stats;
  std::string out;
  out += std::string("verdict ") + verdict_name(r->res.verdict) + "\n";
  out += "complexity " + std::to_string(s.initial_complexity) + " -> " +
         std::to_string(s.final_complexity) + "\n";
  out += "moves " + std::to_string(r->res.certificate.size()) + "\n";
  out += "nodes " + std::to_string(s.nodes_discovered) + "\n";
  out += "expanded " + std::to_string(s.nodes_expanded) + "\n";
  out += "max_crossings_certificate " + std::to_string(s.max_certificate_crossings) + "\n";
  out += "reidemeister r1=" + std::to_string(s.ledger_totals.r1) +
         " r2=" + std::to_string(s.ledger_totals.r2) +
         " r3=" + std::to_string(s.ledger_totals.r3) +
         " unmodeled=" + std::to_string(s.unmodeled_moves) + "\n";
  if (s.flagged_moves) out += "flagged " + std::to_string(s.flagged_moves) + "\n";
  return dup_string(out);
}

gk_status gk_verify(const gk_grid* g, const gk_moves* m, int claimed, char** report,
                    int* pass) {
  if (report) *report = nullptr;
  if (pass) *pass = 0;
  return guarded([&] {
    if (claimed < 0 || claimed > 2) throw Error("bad claimed verdict");
    VerifyReport rep =
        verify_certificate(g->g, m->seq, static_cast<ClaimedForm>(claimed));
    if (report) *report = dup_string(format_verify_report(rep));
    if (pass) *pass = rep.pass ? 1 : 0;
  });
}

gk_status gk_bound_complexity(int maxima, int crossings, long long* out) {
  return guarded([&] { *out = complexity_from_stats(maxima, crossings); });
}

gk_status gk_bound_max_crossings(long long complexity, long long* out) {
  return guarded([&] { *out = max_crossings_bound(complexity); });
}

char* gk_bound_presentation_count(int n) {
  try {
    return dup_string(presentation_count_bound(n).str());
  } catch (const std::exception& e) {
    set_error(GK_ERR_ARG, e.what());
    return nullptr;
  }
}

char* gk_bound_sequence_length(int n) {
  try {
    return dup_string(sequence_length_bound(n).str());
  } catch (const std::exception& e) {
    set_error(GK_ERR_ARG, e.what());
    return nullptr;
  }
}

char* gk_bound_reidemeister_total(int m) {
  try {
    return dup_string(reidemeister_total_bound(m).str());
  } catch (const std::exception& e) {
    set_error(GK_ERR_ARG, e.what());
    return nullptr;
  }
}

char* gk_bound_report_stats(int maxima, int crossings) {
  try {
    return dup_string(format_bound_report(bound_report_from_stats(maxima, crossings)));
  } catch (const std::exception& e) {
    set_error(GK_ERR_ARG, e.what());
    return nullptr;
  }
}

char* gk_bound_report_complexity(int n) {
  try {
    return dup_string(format_bound_report(bound_report_from_complexity(n)));
  } catch (const std::exception& e) {
    set_error(GK_ERR_ARG, e.what());
    return nullptr;
  }
}

gk_status gk_census(int n, int ceiling, int threads, char** table_out,
                    char** records_out) {
  if (table_out) *table_out = nullptr;
  if (records_out) *records_out = nullptr;
  return guarded([&] {
    CensusConfig cfg;
    cfg.n = n;
    if (ceiling > 0) cfg.ceiling = ceiling;
    cfg.threads = threads > 0 ? threads : 1;
    CensusReport rep = census(cfg);
    if (table_out) *table_out = dup_string(census_table(rep));
    if (records_out) *records_out = dup_string(census_records_jsonl(rep));
  });
}

}  // extern "C"
