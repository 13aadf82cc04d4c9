#pragma once

// Test-only reference implementations. These evaluate the definitions
// directly and share no code with the library's sweeps or tree walks.

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "visgraph/codec.hpp"
#include "visgraph/core.hpp"

namespace oracle {

// Every pair, every intermediate point: O(n^3).
inline vg::VisibilityGraph brute_graph(const vg::TimeSeries& s, vg::Criterion c) {
  std::vector<vg::Index> nodes;
  std::vector<vg::Edge> edges;
  const auto pts = s.points();
  for (std::size_t a = 0; a < pts.size(); ++a) {
    nodes.push_back(pts[a].index);
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      const auto between = pts.subspan(a + 1, b - a - 1);
      if (vg::visible(c, pts[a], pts[b], between)) edges.push_back({pts[a].index, pts[b].index});
    }
  }
  return vg::VisibilityGraph(std::move(nodes), std::move(edges));
}

// Recursive description of the max tree: the root of a range is its largest
// value (first occurrence), children are the roots of the two sub-ranges.
// Emits pre-order (depth, index, value) triples for structural comparison.
struct Triple {
  std::size_t depth;
  vg::Index index;
  double value;
  friend bool operator==(const Triple&, const Triple&) = default;
};

inline void cartesian_pre_order(std::span<const vg::Point> pts, std::size_t depth,
                                std::vector<Triple>& out) {
  if (pts.empty()) return;
  std::size_t m = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].value > pts[m].value) m = i;
  }
  out.push_back({depth, pts[m].index, pts[m].value});
  cartesian_pre_order(pts.first(m), depth + 1, out);
  cartesian_pre_order(pts.subspan(m + 1), depth + 1, out);
}

inline std::vector<Triple> cartesian_pre_order(const vg::TimeSeries& s) {
  std::vector<Triple> out;
  cartesian_pre_order(s.points(), 0, out);
  return out;
}

inline std::vector<Triple> tree_pre_order(const vg::MaxBst& t) {
  std::vector<Triple> out;
  std::vector<std::pair<vg::MaxBst::NodeId, std::size_t>> stack;
  if (t.root() != vg::MaxBst::kNil) stack.push_back({t.root(), 0});
  while (!stack.empty()) {
    auto [id, d] = stack.back();
    stack.pop_back();
    const auto& n = t.node(id);
    out.push_back({d, n.point.index, n.point.value});
    if (n.right != vg::MaxBst::kNil) stack.push_back({n.right, d + 1});
    if (n.left != vg::MaxBst::kNil) stack.push_back({n.left, d + 1});
  }
  return out;
}

// Series families used by the property tests.
inline vg::TimeSeries random_integer_series(std::mt19937_64& rng, std::size_t n, int range) {
  std::uniform_int_distribution<int> v(0, range);
  std::vector<double> vals(n);
  for (auto& x : vals) x = v(rng);
  return vg::TimeSeries::from_values(vals);
}

inline vg::TimeSeries random_real_series(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> v(-1.0, 1.0);
  std::vector<double> vals(n);
  for (auto& x : vals) x = v(rng);
  return vg::TimeSeries::from_values(vals);
}

// Distinct values (a shuffled permutation) on sparse, increasing indices.
inline vg::TimeSeries random_distinct_series(std::mt19937_64& rng, std::size_t n) {
  std::vector<double> vals(n);
  for (std::size_t i = 0; i < n; ++i) vals[i] = static_cast<double>(i);
  std::shuffle(vals.begin(), vals.end(), rng);
  std::vector<vg::Point> pts(n);
  vg::Index idx = static_cast<vg::Index>(rng() % 5);
  for (std::size_t i = 0; i < n; ++i) {
    pts[i] = {idx, vals[i]};
    idx += 1 + static_cast<vg::Index>(rng() % 3);
  }
  return vg::TimeSeries(std::move(pts));
}

}  // namespace oracle
