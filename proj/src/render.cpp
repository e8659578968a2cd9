#include "render.hpp"

#include <algorithm>

namespace gridknot {

std::string render_ascii(const GridDiagram& g) {
  const int n = g.size();
  const int side = 2 * n - 1;
  std::vector<std::string> raster(side, std::string(side, ' '));
  for (int r = 0; r < n; ++r) {
    int lo = std::min(g.x_cols[r], g.o_cols[r]);
    int hi = std::max(g.x_cols[r], g.o_cols[r]);
    for (int k = 2 * lo + 1; k < 2 * hi; ++k) raster[2 * r][k] = '-';
  }
  auto spans = column_spans(g);
  for (int c = 0; c < n; ++c) {
    auto [lo, hi] = spans[c];
    // interior cells get '|'; at even rows this overwrites '-' (vertical over)
    for (int k = 2 * lo + 1; k < 2 * hi; ++k) raster[k][2 * c] = '|';
  }
  for (int r = 0; r < n; ++r) {
    raster[2 * r][2 * g.x_cols[r]] = 'x';
    raster[2 * r][2 * g.o_cols[r]] = 'o';
  }
  std::string out;
  for (const auto& line : raster) {
    out += line;
    out += '\n';
  }
  return out;
}

namespace {

constexpr int kCell = 24;
constexpr int kMargin = 24;
constexpr int kGap = 7;  // half-width of the underpass break

int px(int grid_coord) { return kMargin + kCell * grid_coord; }

}  // namespace

std::string render_svg(const GridDiagram& g) {
  const int n = g.size();
  const int side = 2 * kMargin + kCell * (n - 1);
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(side) + "\" height=\"" + std::to_string(side) +
         "\" viewBox=\"0 0 " + std::to_string(side) + " " + std::to_string(side) +
         "\">\n";
  out += "<g stroke=\"black\" stroke-width=\"2\" fill=\"none\" "
         "stroke-linecap=\"round\">\n";
  auto spans = column_spans(g);
  auto cross = crossing_cells(g);
  // horizontal arcs, broken at each crossing column
  for (int r = 0; r < n; ++r) {
    int lo = std::min(g.x_cols[r], g.o_cols[r]);
    int hi = std::max(g.x_cols[r], g.o_cols[r]);
    std::vector<int> breaks;
    for (auto [cr, cc] : cross)
      if (cr == r) breaks.push_back(cc);
    std::sort(breaks.begin(), breaks.end());
    int start = px(lo);
    const int y = px(r);
    for (int bc : breaks) {
      out += "<line x1=\"" + std::to_string(start) + "\" y1=\"" + std::to_string(y) +
             "\" x2=\"" + std::to_string(px(bc) - kGap) + "\" y2=\"" +
             std::to_string(y) + "\"/>\n";
      start = px(bc) + kGap;
    }
    out += "<line x1=\"" + std::to_string(start) + "\" y1=\"" + std::to_string(y) +
           "\" x2=\"" + std::to_string(px(hi)) + "\" y2=\"" + std::to_string(y) +
           "\"/>\n";
  }
  for (int c = 0; c < n; ++c) {
    auto [lo, hi] = spans[c];
    out += "<line x1=\"" + std::to_string(px(c)) + "\" y1=\"" + std::to_string(px(lo)) +
           "\" x2=\"" + std::to_string(px(c)) + "\" y2=\"" + std::to_string(px(hi)) +
           "\"/>\n";
  }
  out += "</g>\n<g font-family=\"monospace\" font-size=\"12\" "
         "text-anchor=\"middle\">\n";
  for (int r = 0; r < n; ++r) {
    auto mark = [&](int c, const char* glyph, const char* fill) {
      out += std::string("<circle cx=\"") + std::to_string(px(c)) + "\" cy=\"" +
             std::to_string(px(r)) + "\" r=\"6\" fill=\"" + fill +
             "\" stroke=\"black\"/>\n";
      out += std::string("<text x=\"") + std::to_string(px(c)) + "\" y=\"" +
             std::to_string(px(r) - 9) + "\">" + glyph + "</text>\n";
    };
    mark(g.x_cols[r], "x", "black");
    mark(g.o_cols[r], "o", "white");
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace gridknot
