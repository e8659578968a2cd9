#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "helpers.hpp"

using namespace gridknot;
using namespace gridknot::testing;

TEST_CASE("corpus loads with the recorded stats") {
  auto corpus = load_corpus(source_dir() + "/corpus");
  REQUIRE(corpus.size() == 5);
  CHECK(corpus[0].name == "culprit");
  CHECK(corpus[0].expected.maxima == 5);
  CHECK(corpus[0].expected.crossings == 10);
  CHECK(corpus[0].expected.complexity == 20);
  CHECK(corpus[0].expected_verdict == Verdict::Trivialized);
  CHECK(!corpus[0].note.empty());
  for (const auto& e : corpus) {
    CAPTURE(e.name);
    auto s = morse_stats(e.word);
    CHECK(s.maxima == e.expected.maxima);
    CHECK(s.crossings == e.expected.crossings);
    CHECK(s.complexity == e.expected.complexity);
    CHECK(morse_component_count(e.word) == 1);
  }
}

TEST_CASE("checked-in grid files match their Morse conversions") {
  auto corpus = load_corpus(source_dir() + "/corpus");
  for (const auto& e : corpus) {
    CAPTURE(e.name);
    std::string grid_text = read_file(source_dir() + "/corpus/" + e.name + ".grid");
    GridDiagram from_file = parse_grid(grid_text);
    GridDiagram converted = morse_to_grid(e.word);
    CHECK(from_file == converted);
    CHECK(serialize_grid(converted) == grid_text);
  }
}

TEST_CASE("corpus loader fails loudly on a stat mismatch") {
  // build a broken corpus in the build directory
  std::string dir = "corpus_broken";
  REQUIRE(std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str()) == 0);
  {
    std::ofstream idx(dir + "/index.txt");
    idx << "loop loop.morse 2 0 4 TRIVIALIZED note\n";  // wrong: file has b=1
    std::ofstream mf(dir + "/loop.morse");
    mf << "cup 0\ncap 0\n";
  }
  try {
    load_corpus(dir);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("loop") != std::string::npos);
    CHECK(std::string(e.what()).find("disagree") != std::string::npos);
  }
  std::string dir2 = "corpus_missing";
  REQUIRE(std::system(("rm -rf " + dir2 + " && mkdir -p " + dir2).c_str()) == 0);
  {
    std::ofstream idx(dir2 + "/index.txt");
    idx << "gone gone.morse 1 0 2 TRIVIALIZED note\n";
  }
  try {
    load_corpus(dir2);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("gone") != std::string::npos);
  }
}
