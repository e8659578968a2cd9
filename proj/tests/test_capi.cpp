#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "gridknot.h"

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  gk_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string source_dir() {
  if (const char* env = std::getenv("GRIDKNOT_SOURCE_DIR")) return env;
#ifdef GRIDKNOT_SOURCE_DIR
  return GRIDKNOT_SOURCE_DIR;
#else
  return ".";
#endif
}

}  // namespace

TEST_CASE("grid lifecycle through the C interface") {
  gk_grid* g = nullptr;
  REQUIRE(gk_grid_parse("grid 5\nX 0 1 2 3 4\nO 2 3 4 0 1\n", &g) == GK_OK);
  CHECK(gk_grid_size(g) == 5);
  CHECK(gk_grid_crossings(g) == 3);
  CHECK(gk_grid_components(g) == 1);
  CHECK(gk_grid_is_trivial(g) == 0);
  CHECK(take(gk_grid_serialize(g)) == "grid 5\nX 0 1 2 3 4\nO 2 3 4 0 1\n");
  CHECK(take(gk_grid_key(g)) == "0-2,1-3,2-4,0-3,1-4");
  int x[5], o[5];
  gk_grid_markers(g, x, o);
  CHECK(x[0] == 0);
  CHECK(o[0] == 2);
  gk_grid_free(g);
}

TEST_CASE("parse and validation errors surface as status codes") {
  gk_grid* g = nullptr;
  CHECK(gk_grid_parse("grid 2\nX 0 1\nO 0 1\n", &g) == GK_ERR_INVALID);
  CHECK(g == nullptr);
  CHECK(std::string(gk_last_error()).find("collision") != std::string::npos);
  CHECK(gk_grid_parse("nonsense", &g) == GK_ERR_PARSE);

  char* report = nullptr;
  CHECK(gk_grid_validate_text("grid 2\nX 0 1\nO 1 0\n", &report) == GK_OK);
  CHECK(report == nullptr);
  CHECK(gk_grid_validate_text("grid 2\nX 0 1\nO 0 1\n", &report) == GK_ERR_INVALID);
  CHECK(take(report).find("row 0") != std::string::npos);

  int xs[2] = {0, 1}, os[2] = {1, 0};
  CHECK(gk_grid_from_arrays(2, xs, os, &g) == GK_OK);
  CHECK(gk_grid_is_trivial(g) == 1);
  gk_grid_free(g);
}

TEST_CASE("split, composite, union, sum") {
  gk_grid* trivial = nullptr;
  REQUIRE(gk_grid_parse("grid 2\nX 0 1\nO 1 0\n", &trivial) == GK_OK);
  gk_grid* two = nullptr;
  REQUIRE(gk_grid_disjoint_union(trivial, trivial, &two) == GK_OK);
  int axis = -1, index = -1;
  CHECK(gk_grid_split_line(two, &axis, &index) == 1);
  CHECK(axis == 0);
  CHECK(index == 1);
  gk_grid* trefoil = nullptr;
  REQUIRE(gk_grid_parse("grid 5\nX 0 1 2 3 4\nO 2 3 4 0 1\n", &trefoil) == GK_OK);
  CHECK(gk_grid_split_line(trefoil, &axis, &index) == 0);
  gk_grid* sum = nullptr;
  REQUIRE(gk_grid_connect_sum(trefoil, trefoil, &sum) == GK_OK);
  int before = 0, after = 0;
  CHECK(gk_grid_composite_line(sum, &axis, &index, &before, &after) == 1);
  CHECK(before >= 1);
  CHECK(after >= 1);
  CHECK(gk_grid_composite_line_recursive(sum, &axis, &index, &before, &after) == 1);
  CHECK(gk_grid_composite_line_recursive(trefoil, nullptr, nullptr, nullptr, nullptr) == 0);
  gk_grid_free(sum);
  gk_grid_free(trefoil);
  gk_grid_free(two);
  gk_grid_free(trivial);
}

TEST_CASE("renders") {
  gk_grid* g = nullptr;
  REQUIRE(gk_grid_parse("grid 2\nX 0 1\nO 1 0\n", &g) == GK_OK);
  CHECK(take(gk_grid_render(g, 0)) == "x-o\n| |\no-x\n");
  CHECK(take(gk_grid_render(g, 1)).find("<svg") == 0);
  gk_grid_free(g);
}

TEST_CASE("morse pipeline") {
  gk_morse* w = nullptr;
  REQUIRE(gk_morse_parse("cup 0\ncup 2\nxo 1\nxo 1\nxo 1\ncap 0\ncap 0\n", &w) == GK_OK);
  int b = 0, cr = 0, m = 0;
  gk_morse_stats(w, &b, &cr, &m);
  CHECK(b == 2);
  CHECK(cr == 3);
  CHECK(m == 7);
  CHECK(gk_morse_components(w) == 1);
  gk_grid* g = nullptr;
  REQUIRE(gk_morse_to_grid(w, &g) == GK_OK);
  CHECK(gk_grid_size(g) == 7);
  CHECK(gk_grid_crossings(g) == 3);
  gk_grid_free(g);
  gk_morse_free(w);
  CHECK(gk_morse_parse("cup 0\ncap 1\n", &w) == GK_ERR_ARG);
}

TEST_CASE("moves, apply, simplify, verify") {
  gk_grid* g3 = nullptr;
  REQUIRE(gk_grid_parse("grid 3\nX 0 1 2\nO 1 2 0\n", &g3) == GK_OK);
  gk_moves* seq = nullptr;
  REQUIRE(gk_moves_parse("ds 0 0\n", &seq) == GK_OK);
  CHECK(gk_moves_count(seq) == 1);
  gk_grid* fin = nullptr;
  char* ledger = nullptr;
  REQUIRE(gk_apply(g3, seq, &fin, &ledger) == GK_OK);
  CHECK(gk_grid_is_trivial(fin) == 1);
  CHECK(take(ledger).find("total ") != std::string::npos);
  gk_grid_free(fin);

  gk_search_config cfg;
  gk_search_config_init(&cfg);
  CHECK(cfg.cyclic_moves == 1);
  gk_result* res = nullptr;
  REQUIRE(gk_simplify(g3, &cfg, &res) == GK_OK);
  CHECK(gk_result_verdict(res) == GK_TRIVIALIZED);
  CHECK(gk_result_move_count(res) == 1);
  CHECK(gk_result_nodes(res) >= 2);
  std::string cert = take(gk_result_certificate(res));
  CHECK(cert.find("from grid 3") == 0);
  CHECK(cert.find("verdict TRIVIALIZED") != std::string::npos);
  gk_grid* fin2 = nullptr;
  REQUIRE(gk_result_final_grid(res, &fin2) == GK_OK);
  CHECK(gk_grid_is_trivial(fin2) == 1);
  gk_grid_free(fin2);
  take(gk_result_stats(res));
  take(gk_result_ledger(res));
  gk_result_free(res);

  gk_moves* cert_moves = nullptr;
  char* verdict_word = nullptr;
  REQUIRE(gk_moves_parse_certificate(cert.c_str(), &cert_moves, &verdict_word) == GK_OK);
  CHECK(take(verdict_word) == "TRIVIALIZED");
  char* report = nullptr;
  int pass = 0;
  REQUIRE(gk_verify(g3, cert_moves, 0, &report, &pass) == GK_OK);
  CHECK(pass == 1);
  CHECK(take(report).find("verdict PASS") != std::string::npos);
  gk_moves_free(cert_moves);
  gk_moves_free(seq);
  gk_grid_free(g3);
}

TEST_CASE("illegal moves come back as GK_ERR_MOVE") {
  gk_grid* trivial = nullptr;
  REQUIRE(gk_grid_parse("grid 2\nX 0 1\nO 1 0\n", &trivial) == GK_OK);
  gk_moves* seq = nullptr;
  REQUIRE(gk_moves_parse("ds 0 0\n", &seq) == GK_OK);
  gk_grid* fin = nullptr;
  CHECK(gk_apply(trivial, seq, &fin, nullptr) == GK_ERR_MOVE);
  CHECK(fin == nullptr);
  gk_moves_free(seq);
  gk_grid_free(trivial);
}

TEST_CASE("bounds") {
  long long v = 0;
  REQUIRE(gk_bound_complexity(5, 10, &v) == GK_OK);
  CHECK(v == 20);
  REQUIRE(gk_bound_max_crossings(20, &v) == GK_OK);
  CHECK(v == 324);
  CHECK(gk_bound_complexity(0, 1, &v) == GK_ERR_ARG);
  CHECK(take(gk_bound_presentation_count(5)) == "1440");
  CHECK(take(gk_bound_sequence_length(5)) == "1519");
  CHECK(take(gk_bound_reidemeister_total(3)) == "7");
  CHECK(gk_bound_sequence_length(1) == nullptr);
  std::string rep = take(gk_bound_report_stats(5, 10));
  CHECK(rep.find("max_crossings_bound 324") != std::string::npos);
}

TEST_CASE("census through the C interface") {
  char* table = nullptr;
  char* records = nullptr;
  REQUIRE(gk_census(3, 0, 1, &table, &records) == GK_OK);
  CHECK(take(table).find("connected 6") != std::string::npos);
  std::string recs = take(records);
  CHECK(std::count(recs.begin(), recs.end(), '\n') == 6);
  CHECK(gk_census(7, 0, 1, &table, nullptr) == GK_ERR_ARG);
}

TEST_CASE("corpus grids drive the search end to end via the C interface") {
  std::string word = read_file(source_dir() + "/corpus/hard-small-2.morse");
  gk_morse* w = nullptr;
  REQUIRE(gk_morse_parse(word.c_str(), &w) == GK_OK);
  gk_grid* g = nullptr;
  REQUIRE(gk_morse_to_grid(w, &g) == GK_OK);
  gk_search_config cfg;
  gk_search_config_init(&cfg);
  cfg.threads = 4;
  gk_result* res = nullptr;
  REQUIRE(gk_simplify(g, &cfg, &res) == GK_OK);
  CHECK(gk_result_verdict(res) == GK_TRIVIALIZED);
  CHECK(gk_result_max_crossings(res) <= 225);  // (17-2)^2
  gk_result_free(res);
  gk_grid_free(g);
  gk_morse_free(w);
}
