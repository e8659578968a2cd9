#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "render.hpp"

using namespace gridknot;
using namespace gridknot::testing;

namespace {
const GridDiagram kTrivial({0, 1}, {1, 0});
const GridDiagram kTrefoil({0, 1, 2, 3, 4}, {2, 3, 4, 0, 1});

int count_glyph(const std::string& s, char ch) {
  return static_cast<int>(std::count(s.begin(), s.end(), ch));
}
}  // namespace

TEST_CASE("trivial diagram matches its golden raster") {
  std::string golden = read_file(source_dir() + "/corpus/golden/trivial.ascii.txt");
  CHECK(render_ascii(kTrivial) == golden);
}

TEST_CASE("trefoil matches its golden raster") {
  std::string golden = read_file(source_dir() + "/corpus/golden/trefoil5.ascii.txt");
  CHECK(render_ascii(kTrefoil) == golden);
}

TEST_CASE("raster geometry: size, markers, crossings") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 150; ++i) {
    GridDiagram g = random_diagram(rng, 2 + static_cast<int>(rng() % 7));
    std::string art = render_ascii(g);
    const int n = g.size();
    const int side = 2 * n - 1;
    CHECK(count_glyph(art, '\n') == side);
    CHECK(count_glyph(art, 'x') == n);
    CHECK(count_glyph(art, 'o') == n);
    // crossing cells: even-even positions drawn '|' where a dash run passes
    std::vector<std::string> lines;
    size_t pos = 0;
    while (pos < art.size()) {
      size_t nl = art.find('\n', pos);
      lines.push_back(art.substr(pos, nl - pos));
      pos = nl + 1;
    }
    // a crossing cell shows '|' with the broken dash run on both sides
    int crossing_cells = 0;
    for (int r = 0; r < n; ++r)
      for (int c = 1; c + 1 < n; ++c)
        if (lines[2 * r][2 * c] == '|' && lines[2 * r][2 * c - 1] == '-' &&
            lines[2 * r][2 * c + 1] == '-')
          ++crossing_cells;
    CHECK(crossing_cells == crossing_count(g));
  }
}

TEST_CASE("orientation swap moves only the marker glyphs") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 80; ++i) {
    GridDiagram g = random_diagram(rng, 2 + static_cast<int>(rng() % 6));
    std::string a = render_ascii(g);
    std::string b = render_ascii(swap_xo(g));
    REQUIRE(a.size() == b.size());
    for (size_t k = 0; k < a.size(); ++k) {
      if (a[k] == b[k]) continue;
      bool marker_pair = (a[k] == 'x' && b[k] == 'o') || (a[k] == 'o' && b[k] == 'x');
      CHECK(marker_pair);
    }
  }
}

TEST_CASE("svg output is deterministic and break-counts match crossings") {
  std::string one = render_svg(kTrefoil);
  std::string two = render_svg(kTrefoil);
  CHECK(one == two);
  // horizontal arcs: one <line> per uncut run; n rows plus one extra segment
  // per crossing; vertical arcs: n lines
  int lines = 0;
  for (size_t pos = 0; (pos = one.find("<line ", pos)) != std::string::npos; ++pos)
    ++lines;
  const int n = kTrefoil.size();
  CHECK(lines == n + crossing_count(kTrefoil) + n);
  CHECK(one.find("<svg") == 0);
  CHECK(one.rfind("</svg>\n") == one.size() - 7);
}
