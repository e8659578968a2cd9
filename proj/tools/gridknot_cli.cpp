// Command-line front end. Everything goes through the public C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gridknot.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitInconclusive = 3;

struct StringDeleter {
  void operator()(char* s) const { gk_string_free(s); }
};
using CStr = std::unique_ptr<char, StringDeleter>;

struct GridDeleter {
  void operator()(gk_grid* g) const { gk_grid_free(g); }
};
using Grid = std::unique_ptr<gk_grid, GridDeleter>;

struct MorseDeleter {
  void operator()(gk_morse* w) const { gk_morse_free(w); }
};
using Morse = std::unique_ptr<gk_morse, MorseDeleter>;

struct MovesDeleter {
  void operator()(gk_moves* m) const { gk_moves_free(m); }
};
using Moves = std::unique_ptr<gk_moves, MovesDeleter>;

struct ResultDeleter {
  void operator()(gk_result* r) const { gk_result_free(r); }
};
using Result = std::unique_ptr<gk_result, ResultDeleter>;

int fail(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kExitInvalid;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << data;
  return out.good();
}

Grid load_grid(const std::string& path, int& rc) {
  std::string text;
  if (!read_file(path, text)) {
    rc = fail("cannot read " + path);
    return nullptr;
  }
  gk_grid* g = nullptr;
  if (gk_grid_parse(text.c_str(), &g) != GK_OK) {
    rc = fail(gk_last_error());
    return nullptr;
  }
  rc = kExitOk;
  return Grid(g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arc-presentation toolkit: validate, render, convert, simplify, "
               "apply, verify, bounds, census"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("--verbose", verbose, "timing diagnostics on stderr");

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "check a grid file");
  std::string validate_path;
  validate_cmd->add_option("grid", validate_path, "grid file")->required();

  // render
  auto* render_cmd = app.add_subcommand("render", "draw a grid diagram");
  std::string render_path, render_format = "ascii", render_out;
  render_cmd->add_option("grid", render_path, "grid file")->required();
  render_cmd->add_option("--format", render_format, "ascii|svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  render_cmd->add_option("-o,--output", render_out, "output file (default stdout)");

  // convert
  auto* convert_cmd = app.add_subcommand("convert", "compile a Morse word into a grid");
  std::string convert_morse, convert_out;
  convert_cmd->add_option("--morse", convert_morse, "Morse word file")->required();
  convert_cmd->add_option("-o,--output", convert_out, "grid output file");

  // simplify
  auto* simplify_cmd = app.add_subcommand("simplify", "monotone simplification search");
  std::string simplify_path, simplify_mode = "exhaustive", simplify_target = "trivial";
  std::string emit_sequence, emit_ledger;
  long long max_nodes = 0;
  int threads = 1;
  bool no_cyclic = false;
  simplify_cmd->add_option("grid", simplify_path, "grid file")->required();
  simplify_cmd->add_option("--mode", simplify_mode, "exhaustive|greedy")
      ->check(CLI::IsMember({"exhaustive", "greedy"}));
  simplify_cmd->add_option("--target", simplify_target, "trivial|split|composite")
      ->check(CLI::IsMember({"trivial", "split", "composite"}));
  simplify_cmd->add_option("--max-nodes", max_nodes, "node cap (0 = none)");
  simplify_cmd->add_flag("--no-cyclic", no_cyclic, "disable cyclic translations");
  simplify_cmd->add_option("--threads", threads, "worker threads");
  simplify_cmd->add_option("--emit-sequence", emit_sequence, "write the certificate");
  simplify_cmd->add_option("--emit-ledger", emit_ledger, "write the cost ledger");

  // apply
  auto* apply_cmd = app.add_subcommand("apply", "replay a move sequence");
  std::string apply_path, apply_moves, apply_out;
  apply_cmd->add_option("grid", apply_path, "grid file")->required();
  apply_cmd->add_option("--moves", apply_moves, "move sequence file")->required();
  apply_cmd->add_option("-o,--output", apply_out, "final grid output file");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check a certificate");
  std::string verify_path, verify_moves, verify_verdict;
  verify_cmd->add_option("grid", verify_path, "grid file")->required();
  verify_cmd->add_option("--moves", verify_moves, "certificate / move file")->required();
  verify_cmd->add_option("--verdict", verify_verdict, "trivialized|split|composite")
      ->required()
      ->check(CLI::IsMember({"trivialized", "split", "composite", "TRIVIALIZED",
                             "SPLIT", "COMPOSITE"}));

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "exact bound values");
  int bounds_b = 0, bounds_cr = -1, bounds_n = 0;
  std::string bounds_grid;
  bounds_cmd->add_option("--b", bounds_b, "number of maxima");
  bounds_cmd->add_option("--cr", bounds_cr, "number of crossings");
  bounds_cmd->add_option("--n", bounds_n, "complexity");
  bounds_cmd->add_option("--grid", bounds_grid, "take complexity from a grid file");

  // census
  auto* census_cmd = app.add_subcommand("census", "enumerate and classify diagrams");
  int census_n = 4, census_ceiling = 6, census_threads = 1;
  std::string census_records;
  census_cmd->add_option("--n", census_n, "complexity to enumerate")->required();
  census_cmd->add_option("--ceiling", census_ceiling, "resource guard (default 6)");
  census_cmd->add_option("--threads", census_threads, "worker threads");
  census_cmd->add_option("--records", census_records, "write per-class records (jsonl)");

  CLI11_PARSE(app, argc, argv);

  if (*validate_cmd) {
    std::string text;
    if (!read_file(validate_path, text)) return fail("cannot read " + validate_path);
    char* report = nullptr;
    gk_status st = gk_grid_validate_text(text.c_str(), &report);
    CStr rep(report);
    if (st == GK_OK) {
      std::cout << "ok\n";
      return kExitOk;
    }
    if (rep) std::cout << rep.get();
    return kExitInvalid;
  }

  if (*render_cmd) {
    int rc;
    Grid g = load_grid(render_path, rc);
    if (!g) return rc;
    CStr text(gk_grid_render(g.get(), render_format == "svg" ? 1 : 0));
    if (!write_output(render_out, text.get())) return fail("cannot write output");
    return kExitOk;
  }

  if (*convert_cmd) {
    std::string text;
    if (!read_file(convert_morse, text)) return fail("cannot read " + convert_morse);
    gk_morse* wp = nullptr;
    if (gk_morse_parse(text.c_str(), &wp) != GK_OK) return fail(gk_last_error());
    Morse w(wp);
    int b = 0, cr = 0, m = 0;
    gk_morse_stats(w.get(), &b, &cr, &m);
    gk_grid* gp = nullptr;
    if (gk_morse_to_grid(w.get(), &gp) != GK_OK) return fail(gk_last_error());
    Grid g(gp);
    std::cout << "b " << b << "\ncr " << cr << "\nM " << m << "\nn "
              << gk_grid_size(g.get()) << "\ncomponents "
              << gk_grid_components(g.get()) << "\n";
    CStr grid_text(gk_grid_serialize(g.get()));
    if (!convert_out.empty()) {
      if (!write_output(convert_out, grid_text.get())) return fail("cannot write output");
    } else {
      std::cout << grid_text.get();
    }
    return kExitOk;
  }

  if (*simplify_cmd) {
    int rc;
    Grid g = load_grid(simplify_path, rc);
    if (!g) return rc;
    gk_search_config cfg;
    gk_search_config_init(&cfg);
    cfg.target = simplify_target == "trivial" ? 0 : simplify_target == "split" ? 1 : 2;
    cfg.mode = simplify_mode == "exhaustive" ? 0 : 1;
    cfg.cyclic_moves = no_cyclic ? 0 : 1;
    cfg.max_nodes = max_nodes;
    cfg.threads = threads;
    gk_result* rp = nullptr;
    if (gk_simplify(g.get(), &cfg, &rp) != GK_OK) return fail(gk_last_error());
    Result r(rp);
    CStr stats(gk_result_stats(r.get()));
    std::cout << stats.get();
    if (verbose)
      std::cerr << "wall_seconds " << gk_result_wall_seconds(r.get()) << "\n";
    if (!emit_sequence.empty()) {
      CStr cert(gk_result_certificate(r.get()));
      if (!write_output(emit_sequence, cert.get())) return fail("cannot write certificate");
    }
    if (!emit_ledger.empty()) {
      CStr ledger(gk_result_ledger(r.get()));
      if (!write_output(emit_ledger, ledger.get())) return fail("cannot write ledger");
    }
    return gk_result_verdict(r.get()) == GK_INCONCLUSIVE ? kExitInconclusive : kExitOk;
  }

  if (*apply_cmd) {
    int rc;
    Grid g = load_grid(apply_path, rc);
    if (!g) return rc;
    std::string text;
    if (!read_file(apply_moves, text)) return fail("cannot read " + apply_moves);
    gk_moves* mp = nullptr;
    if (gk_moves_parse_certificate(text.c_str(), &mp, nullptr) != GK_OK)
      return fail(gk_last_error());
    Moves m(mp);
    gk_grid* fp = nullptr;
    char* ledger = nullptr;
    if (gk_apply(g.get(), m.get(), &fp, &ledger) != GK_OK) return fail(gk_last_error());
    Grid final_grid(fp);
    CStr led(ledger);
    std::cout << led.get();
    CStr out_text(gk_grid_serialize(final_grid.get()));
    if (!apply_out.empty()) {
      if (!write_output(apply_out, out_text.get())) return fail("cannot write output");
    } else {
      std::cout << out_text.get();
    }
    return kExitOk;
  }

  if (*verify_cmd) {
    int rc;
    Grid g = load_grid(verify_path, rc);
    if (!g) return rc;
    std::string text;
    if (!read_file(verify_moves, text)) return fail("cannot read " + verify_moves);
    gk_moves* mp = nullptr;
    gk_grid* fromp = nullptr;
    if (gk_moves_parse_certificate(text.c_str(), &mp, nullptr, &fromp) != GK_OK)
      return fail(gk_last_error());
    Moves m(mp);
    if (fromp) {
      Grid from(fromp);
      CStr a(gk_grid_serialize(from.get()));
      CStr b(gk_grid_serialize(g.get()));
      if (std::string(a.get()) != b.get())
        return fail("certificate 'from' header names a different diagram");
    }
    std::string v = verify_verdict;
    for (auto& ch : v) ch = static_cast<char>(std::tolower(ch));
    int claimed = v == "trivialized" ? 0 : v == "split" ? 1 : 2;
    char* report = nullptr;
    int pass = 0;
    if (gk_verify(g.get(), m.get(), claimed, &report, &pass) != GK_OK)
      return fail(gk_last_error());
    CStr rep(report);
    std::cout << rep.get();
    return pass ? kExitOk : kExitInvalid;
  }

  if (*bounds_cmd) {
    char* report = nullptr;
    if (!bounds_grid.empty()) {
      int rc;
      Grid g = load_grid(bounds_grid, rc);
      if (!g) return rc;
      report = gk_bound_report_complexity(gk_grid_size(g.get()));
    } else if (bounds_n > 0) {
      report = gk_bound_report_complexity(bounds_n);
    } else if (bounds_b > 0 && bounds_cr >= 0) {
      report = gk_bound_report_stats(bounds_b, bounds_cr);
    } else {
      return fail("bounds needs --b and --cr, or --n, or --grid");
    }
    if (!report) return fail(gk_last_error());
    CStr rep(report);
    std::cout << rep.get();
    return kExitOk;
  }

  if (*census_cmd) {
    char* table = nullptr;
    char* records = nullptr;
    if (gk_census(census_n, census_ceiling, census_threads, &table,
                  census_records.empty() ? nullptr : &records) != GK_OK)
      return fail(gk_last_error());
    CStr tab(table);
    CStr recs(records);
    std::cout << tab.get();
    if (!census_records.empty() && recs) {
      if (!write_output(census_records, recs.get())) return fail("cannot write records");
    }
    return kExitOk;
  }

  return fail("no subcommand");
}
