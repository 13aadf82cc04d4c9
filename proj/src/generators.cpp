#include "visgraph/generators.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "visgraph/error.hpp"

namespace vg {

namespace {

constexpr std::pair<SeriesKind, std::string_view> kKindNames[] = {
    {SeriesKind::UniformNoise, "uniform"},
    {SeriesKind::RandomWalk, "walk"},
    {SeriesKind::Conway, "conway"},
    {SeriesKind::MonotonicIncreasing, "increasing"},
    {SeriesKind::MonotonicDecreasing, "decreasing"},
    {SeriesKind::Constant, "constant"},
    {SeriesKind::BalancedTree, "balanced"},
};

std::vector<double> conway(std::size_t n) {
  // a[0] unused so the recurrence reads 1-based.
  std::vector<std::size_t> a(n + 1, 1);
  for (std::size_t k = 3; k <= n; ++k) a[k] = a[a[k - 1]] + a[k - a[k - 1]];
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) out.push_back(static_cast<double>(a[k]));
  return out;
}

bool is_all_ones(std::size_t n) noexcept { return n != 0 && ((n + 1) & n) == 0; }

}  // namespace

std::string_view to_string(SeriesKind kind) noexcept {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<SeriesKind> parse_series_kind(std::string_view name) noexcept {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

TimeSeries balanced_tree_values(int k) {
  if (k < 1 || k > 40) {
    throw Error(ErrorCode::InvalidSpec, "balanced tree depth out of range: " + std::to_string(k));
  }
  const std::size_t n = (std::size_t{1} << k) - 1;
  std::vector<double> values(n);
  // Breadth-first over index ranges; ranks handed out in that order are
  // strictly decreasing, so every range's middle outranks its sub-ranges.
  std::vector<std::pair<std::size_t, std::size_t>> queue{{0, n}};
  queue.reserve(n);
  double next = static_cast<double>(n);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [lo, hi] = queue[head];  // half-open
    if (lo >= hi) continue;
    const std::size_t mid = lo + (hi - lo) / 2;
    values[mid] = next;
    next -= 1.0;
    queue.push_back({lo, mid});
    queue.push_back({mid + 1, hi});
  }
  return TimeSeries::from_values(values);
}

TimeSeries generate(const SeriesSpec& spec) {
  const std::size_t n = spec.length;
  std::vector<double> values;
  values.reserve(n);
  std::mt19937_64 rng(spec.seed);

  switch (spec.kind) {
    case SeriesKind::UniformNoise:
      // Top 53 bits scaled into [0, 1); std::uniform_real_distribution is
      // not reproducible across standard libraries.
      for (std::size_t i = 0; i < n; ++i) {
        values.push_back(static_cast<double>(rng() >> 11) * 0x1.0p-53);
      }
      break;
    case SeriesKind::RandomWalk: {
      double y = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        y += (rng() >> 63) ? 1.0 : -1.0;
        values.push_back(y);
      }
      break;
    }
    case SeriesKind::Conway:
      values = conway(n);
      break;
    case SeriesKind::MonotonicIncreasing:
      for (std::size_t i = 0; i < n; ++i) values.push_back(static_cast<double>(i + 1));
      break;
    case SeriesKind::MonotonicDecreasing:
      for (std::size_t i = 0; i < n; ++i) values.push_back(static_cast<double>(n - i));
      break;
    case SeriesKind::Constant:
      values.assign(n, 1.0);
      break;
    case SeriesKind::BalancedTree: {
      if (!is_all_ones(n)) {
        throw Error(ErrorCode::InvalidSpec,
                    "balanced tree length must be 2^k - 1, got " + std::to_string(n));
      }
      int k = 0;
      while ((std::size_t{1} << k) - 1 < n) ++k;
      return balanced_tree_values(k);
    }
  }
  return TimeSeries::from_values(values);
}

}  // namespace vg
