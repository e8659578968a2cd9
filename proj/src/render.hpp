#pragma once

#include <string>

#include "grid.hpp"

namespace gridknot {

// (2n-1) x (2n-1) character raster: markers 'x'/'o', horizontal runs '-',
// vertical runs '|'; at a crossing the vertical arc wins the cell.
std::string render_ascii(const GridDiagram& g);

// One polyline per arc; horizontal arcs are gap-broken at each crossing.
// Output is byte-deterministic for a given diagram.
std::string render_svg(const GridDiagram& g);

}  // namespace gridknot
