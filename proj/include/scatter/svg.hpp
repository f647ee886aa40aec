#pragma once

#include <string>
#include <vector>

#include "scatter/space.hpp"

namespace scatter {

// Rug plot of ranked points on [0, 1]: a 1000-unit baseline, one vertical
// tick per point, taller ticks for higher ranks.  Every emitted coordinate is
// an integer (points are rounded exactly, never through floating point).
std::string render_svg(const std::vector<RankedPoint>& points);

// Exact dump: one "num,den,rank" row per point, ascending.
std::string render_csv(const std::vector<RankedPoint>& points);

}  // namespace scatter
