/* gridknot: arc-presentation (grid diagram) toolkit.
 *
 * C interface to the shared library. All objects are opaque handles owned by
 * the library; strings returned through char** or as char* are heap-allocated
 * and must be released with gk_string_free. On failure, functions return a
 * nonzero gk_status and gk_last_error() describes the problem (thread-local).
 */
#ifndef GRIDKNOT_H
#define GRIDKNOT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define GK_API __declspec(dllexport)
#else
#define GK_API __attribute__((visibility("default")))
#endif

typedef enum gk_status {
  GK_OK = 0,
  GK_ERR_PARSE = 1,   /* malformed input text */
  GK_ERR_INVALID = 2, /* structural validation failed */
  GK_ERR_ARG = 3,     /* bad argument / domain violation */
  GK_ERR_MOVE = 4,    /* illegal move */
  GK_ERR_LIMIT = 5,   /* resource guard tripped */
  GK_ERR_INTERNAL = 6
} gk_status;

GK_API const char* gk_version(void);
GK_API const char* gk_last_error(void); /* valid until the next call on this thread */
GK_API void gk_string_free(char* s);

/* ---- grid diagrams ---- */

typedef struct gk_grid gk_grid;

GK_API gk_status gk_grid_parse(const char* text, gk_grid** out);
GK_API gk_status gk_grid_from_arrays(int n, const int* x_cols, const int* o_cols,
                                     gk_grid** out);
GK_API void gk_grid_free(gk_grid* g);
GK_API int gk_grid_size(const gk_grid* g);
GK_API void gk_grid_markers(const gk_grid* g, int* x_cols, int* o_cols);
GK_API char* gk_grid_serialize(const gk_grid* g);
GK_API char* gk_grid_key(const gk_grid* g);

/* Returns GK_OK with *report == NULL when valid; GK_ERR_INVALID with a
 * newline-separated violation list otherwise. */
GK_API gk_status gk_grid_validate_text(const char* text, char** report);

GK_API int gk_grid_crossings(const gk_grid* g);
GK_API int gk_grid_components(const gk_grid* g);
GK_API int gk_grid_is_trivial(const gk_grid* g);

/* axis: 0 vertical, 1 horizontal. Return 1 when a line exists, else 0. */
GK_API int gk_grid_split_line(const gk_grid* g, int* axis, int* index);
GK_API int gk_grid_composite_line(const gk_grid* g, int* axis, int* index,
                                  int* crossings_before, int* crossings_after);
/* Like gk_grid_composite_line, but decides each side's non-triviality by an
 * exhaustive search on the closed-up factor instead of the crossing-count
 * proxy. Costs a full search per candidate side. */
GK_API int gk_grid_composite_line_recursive(const gk_grid* g, int* axis, int* index,
                                            int* crossings_before,
                                            int* crossings_after);

GK_API gk_status gk_grid_disjoint_union(const gk_grid* a, const gk_grid* b,
                                        gk_grid** out);
GK_API gk_status gk_grid_connect_sum(const gk_grid* a, const gk_grid* b,
                                     gk_grid** out);

/* format: 0 ASCII raster, 1 SVG document */
GK_API char* gk_grid_render(const gk_grid* g, int format);

/* ---- Morse words ---- */

typedef struct gk_morse gk_morse;

GK_API gk_status gk_morse_parse(const char* text, gk_morse** out);
GK_API void gk_morse_free(gk_morse* w);
GK_API void gk_morse_stats(const gk_morse* w, int* maxima, int* crossings,
                           int* complexity);
GK_API int gk_morse_components(const gk_morse* w);
GK_API gk_status gk_morse_to_grid(const gk_morse* w, gk_grid** out);

/* ---- move sequences ---- */

typedef struct gk_moves gk_moves;

GK_API gk_status gk_moves_parse(const char* text, gk_moves** out);
/* Certificate files carry `from`/`target`/`verdict` headers before the moves;
 * this parser accepts both plain move lists and certificates. *verdict_word
 * receives the header verdict when present (else NULL); *from_out the header
 * grid (else NULL). Both outputs are optional. */
GK_API gk_status gk_moves_parse_certificate(const char* text, gk_moves** out,
                                            char** verdict_word, gk_grid** from_out);
GK_API void gk_moves_free(gk_moves* m);
GK_API int gk_moves_count(const gk_moves* m);

/* Applies the sequence; *ledger_out (optional) receives the per-move cost
 * ledger text. */
GK_API gk_status gk_apply(const gk_grid* g, const gk_moves* m, gk_grid** final_out,
                          char** ledger_out);

/* ---- monotone simplification ---- */

typedef struct gk_search_config {
  int target;            /* 0 trivial, 1 split, 2 composite */
  int mode;              /* 0 exhaustive, 1 greedy */
  int cyclic_moves;      /* nonzero: cyclic translations enabled */
  long long max_nodes;   /* <= 0: no cap */
  int threads;
} gk_search_config;

GK_API void gk_search_config_init(gk_search_config* cfg);

typedef enum gk_verdict {
  GK_TRIVIALIZED = 0,
  GK_IRREDUCIBLE = 1,
  GK_TARGET_FOUND = 2,
  GK_INCONCLUSIVE = 3
} gk_verdict;

typedef struct gk_result gk_result;

GK_API gk_status gk_simplify(const gk_grid* g, const gk_search_config* cfg,
                             gk_result** out);
GK_API void gk_result_free(gk_result* r);
GK_API int gk_result_verdict(const gk_result* r);
GK_API int gk_result_move_count(const gk_result* r);
GK_API long long gk_result_nodes(const gk_result* r);
GK_API long long gk_result_expanded(const gk_result* r);
GK_API int gk_result_max_crossings(const gk_result* r);
GK_API double gk_result_wall_seconds(const gk_result* r);
GK_API gk_status gk_result_final_grid(const gk_result* r, gk_grid** out);
/* Certificate file text (headers + moves). */
GK_API char* gk_result_certificate(const gk_result* r);
/* Per-move cost ledger text for the certificate. */
GK_API char* gk_result_ledger(const gk_result* r);
/* Deterministic stats block (excludes wall-clock). */
GK_API char* gk_result_stats(const gk_result* r);

/* claimed: 0 trivialized, 1 split, 2 composite. *pass set to 1/0. */
GK_API gk_status gk_verify(const gk_grid* g, const gk_moves* m, int claimed,
                           char** report, int* pass);

/* ---- bounds (decimal strings, never scientific notation) ---- */

GK_API gk_status gk_bound_complexity(int maxima, int crossings, long long* out);
GK_API gk_status gk_bound_max_crossings(long long complexity, long long* out);
GK_API char* gk_bound_presentation_count(int n);
GK_API char* gk_bound_sequence_length(int n);
GK_API char* gk_bound_reidemeister_total(int m);
/* Full report text for stats (maxima >= 1) or a bare complexity. */
GK_API char* gk_bound_report_stats(int maxima, int crossings);
GK_API char* gk_bound_report_complexity(int n);

/* ---- census ---- */

GK_API gk_status gk_census(int n, int ceiling, int threads, char** table_out,
                           char** records_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GRIDKNOT_H */
