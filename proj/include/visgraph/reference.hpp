#pragma once

#include <cstdint>

#include "visgraph/core.hpp"

namespace vg {

enum class AlgorithmId { Basic, DivideConquer, BstCodec };

// Basic pairwise method. Each point sweeps rightwards keeping the last point
// it could see; that point is the only candidate blocker for the next one, so
// every pair costs a single criterion evaluation. When `pair_evaluations` is
// given it receives the number of evaluated pairs, n(n-1)/2.
VisibilityGraph basic_nvg(const TimeSeries& series,
                          std::uint64_t* pair_evaluations = nullptr);

// Stops each rightward scan at the first value >= the scan origin.
VisibilityGraph basic_hvg(const TimeSeries& series);

VisibilityGraph basic(const TimeSeries& series, Criterion criterion);

// Divide & Conquer: split at the segment maximum (smallest index on ties),
// connect it to what it sees on both sides, recurse on the halves. Uses an
// explicit work stack.
VisibilityGraph dc_build(const TimeSeries& series, Criterion criterion);

}  // namespace vg
