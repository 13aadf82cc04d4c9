#pragma once

#include <string>
#include <string_view>

#include "visgraph/core.hpp"

namespace vg {

// Series text: one "index value\n" per point. Values are printed with the
// shortest representation that round-trips.
std::string format_series(const TimeSeries& series);

// Blank lines are ignored. Points must already be in ascending index order;
// failures throw Error(Parse) with the offending line number, or
// Error(DuplicateIndex) / Error(InvalidSeries) from the series constructor.
TimeSeries parse_series(std::string_view text);

// Edge-list text: one "u v\n" per edge, u < v, lexicographic order.
std::string format_edges(const VisibilityGraph& graph);

std::string format_double(double v);

}  // namespace vg
