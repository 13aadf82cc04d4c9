#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "visgraph/core.hpp"

namespace vg {

enum class SeriesKind {
  UniformNoise,
  RandomWalk,
  Conway,
  MonotonicIncreasing,
  MonotonicDecreasing,
  Constant,
  BalancedTree,
};

struct SeriesSpec {
  SeriesKind kind = SeriesKind::UniformNoise;
  std::size_t length = 0;
  std::uint64_t seed = 0;
};

// Identifier of the pseudo-random source, recorded in benchmark output.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64";

std::string_view to_string(SeriesKind kind) noexcept;
std::optional<SeriesKind> parse_series_kind(std::string_view name) noexcept;

// Deterministic for a fixed spec; indices are 0..length-1.
//   UniformNoise  i.i.d. values in [0, 1), 53-bit resolution
//   RandomWalk    running sum of i.i.d. +/-1 steps
//   Conway        Hofstadter-Conway a(1)=a(2)=1, a(k)=a(a(k-1))+a(k-a(k-1))
//   Monotonic*    1..n ascending / descending
//   Constant      all 1.0
//   BalancedTree  see balanced_tree_values; length must be 2^k - 1
// Throws Error(InvalidSpec) for a BalancedTree length that is not 2^k - 1.
TimeSeries generate(const SeriesSpec& spec);

// 2^k - 1 distinct values whose encoded tree is perfect with height k-1: the
// largest value sits at the middle index and each half is built the same way.
// Throws Error(InvalidSpec) for k < 1 or k > 40.
TimeSeries balanced_tree_values(int k);

// Stateless seed derivation (splitmix64) for per-trial series.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept;

}  // namespace vg
