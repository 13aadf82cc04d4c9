#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace vg {

using Index = std::int64_t;

struct Point {
  Index index = 0;
  double value = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

enum class Criterion { Horizontal, Natural };

// An ordered sequence of points with strictly increasing, unique indices and
// finite values. The invariants are checked once at construction.
class TimeSeries {
 public:
  TimeSeries() = default;

  // Throws Error(InvalidSeries) on non-finite values and
  // Error(DuplicateIndex) / Error(InvalidSeries) on repeated or unordered
  // indices.
  explicit TimeSeries(std::vector<Point> points);

  // Indices 0..n-1.
  static TimeSeries from_values(std::span<const double> values);

  // Sorts by index first; duplicates still throw.
  static TimeSeries from_unordered(std::vector<Point> points);

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const Point& operator[](std::size_t i) const noexcept { return points_[i]; }
  std::span<const Point> points() const noexcept { return points_; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  friend bool operator==(const TimeSeries&, const TimeSeries&) = default;

 private:
  std::vector<Point> points_;
};

struct Edge {
  Index u = 0;
  Index v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph on point indices. Edges are kept normalised
// (u < v), sorted lexicographically and deduplicated, which makes equality a
// plain vector comparison and gives reproducible edge-list output.
class VisibilityGraph {
 public:
  VisibilityGraph() = default;

  // Nodes must be distinct; edges may be given in any order/orientation.
  // Self-loops and edges touching unknown nodes throw Error(InvalidArgument).
  VisibilityGraph(std::vector<Index> nodes, std::vector<Edge> edges);

  const std::vector<Index>& nodes() const noexcept { return nodes_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_node(Index i) const noexcept;
  bool has_edge(Index a, Index b) const noexcept;
  std::vector<Index> neighbors(Index i) const;

  friend bool operator==(const VisibilityGraph&,
                         const VisibilityGraph&) = default;

 private:
  friend class GraphBuilder;

  std::vector<Index> nodes_;
  std::vector<Edge> edges_;
};

// Collects edges from the construction algorithms without validation; the
// finished graph is normalised once in build().
class GraphBuilder {
 public:
  explicit GraphBuilder(const TimeSeries& series);

  void add(Index a, Index b) { edges_.push_back(a < b ? Edge{a, b} : Edge{b, a}); }
  void reserve(std::size_t n) { edges_.reserve(n); }
  VisibilityGraph build() &&;

 private:
  std::vector<Index> nodes_;
  std::vector<Edge> edges_;
};

// True when c lies strictly below the chord from a to b. Callers must pass
// points in any order with c between a and b by index; the test is evaluated
// in cross-multiplied form on the index-ordered endpoints so it is symmetric.
inline bool below_chord(const Point& a, const Point& b, const Point& c) noexcept {
  const Point& lo = a.index < b.index ? a : b;
  const Point& hi = a.index < b.index ? b : a;
  return (c.value - lo.value) * static_cast<double>(hi.index - lo.index) <
         (hi.value - lo.value) * static_cast<double>(c.index - lo.index);
}

inline bool below_horizon(const Point& a, const Point& b, const Point& c) noexcept {
  return c.value < a.value && c.value < b.value;
}

bool visible_nv(const Point& a, const Point& b, std::span<const Point> between) noexcept;
bool visible_hv(const Point& a, const Point& b, std::span<const Point> between) noexcept;
bool visible(Criterion criterion, const Point& a, const Point& b,
             std::span<const Point> between) noexcept;

bool graph_equal(const VisibilityGraph& g1, const VisibilityGraph& g2) noexcept;

}  // namespace vg
