#include "visgraph/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "visgraph/error.hpp"

namespace vg {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::InvalidSeries: return "invalid series";
    case ErrorCode::DuplicateIndex: return "duplicate index";
    case ErrorCode::HeapViolation: return "heap violation";
    case ErrorCode::InvalidSpec: return "invalid spec";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::Io: return "i/o error";
  }
  return "unknown error";
}

TimeSeries::TimeSeries(std::vector<Point> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i].value)) {
      throw Error(ErrorCode::InvalidSeries,
                  "non-finite value at index " + std::to_string(points_[i].index));
    }
    if (i == 0) continue;
    if (points_[i].index == points_[i - 1].index) {
      throw Error(ErrorCode::DuplicateIndex,
                  "duplicate index " + std::to_string(points_[i].index));
    }
    if (points_[i].index < points_[i - 1].index) {
      throw Error(ErrorCode::InvalidSeries,
                  "indices not ascending at " + std::to_string(points_[i].index));
    }
  }
}

TimeSeries TimeSeries::from_values(std::span<const double> values) {
  std::vector<Point> pts;
  pts.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    pts.push_back({static_cast<Index>(i), values[i]});
  }
  return TimeSeries(std::move(pts));
}

TimeSeries TimeSeries::from_unordered(std::vector<Point> points) {
  std::sort(points.begin(), points.end(),
            [](const Point& a, const Point& b) { return a.index < b.index; });
  return TimeSeries(std::move(points));
}

VisibilityGraph::VisibilityGraph(std::vector<Index> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  std::sort(nodes_.begin(), nodes_.end());
  if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end()) {
    throw Error(ErrorCode::InvalidArgument, "duplicate graph node");
  }
  for (Edge& e : edges_) {
    if (e.u == e.v) {
      throw Error(ErrorCode::InvalidArgument,
                  "self-loop on node " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!has_node(e.u) || !has_node(e.v)) {
      throw Error(ErrorCode::InvalidArgument, "edge endpoint is not a node");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool VisibilityGraph::has_node(Index i) const noexcept {
  return std::binary_search(nodes_.begin(), nodes_.end(), i);
}

bool VisibilityGraph::has_edge(Index a, Index b) const noexcept {
  const Edge e = a < b ? Edge{a, b} : Edge{b, a};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<Index> VisibilityGraph::neighbors(Index i) const {
  std::vector<Index> out;
  for (const Edge& e : edges_) {
    if (e.u == i) out.push_back(e.v);
    if (e.v == i) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GraphBuilder::GraphBuilder(const TimeSeries& series) {
  nodes_.reserve(series.size());
  for (const Point& p : series) nodes_.push_back(p.index);
}

VisibilityGraph GraphBuilder::build() && {
  // Builders are fed by the algorithms in this library, which only emit
  // distinct endpoints drawn from the series, so skip the validating ctor.
  VisibilityGraph g;
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  g.nodes_ = std::move(nodes_);
  g.edges_ = std::move(edges_);
  return g;
}

bool visible_nv(const Point& a, const Point& b, std::span<const Point> between) noexcept {
  return std::all_of(between.begin(), between.end(),
                     [&](const Point& c) { return below_chord(a, b, c); });
}

bool visible_hv(const Point& a, const Point& b, std::span<const Point> between) noexcept {
  return std::all_of(between.begin(), between.end(),
                     [&](const Point& c) { return below_horizon(a, b, c); });
}

bool visible(Criterion criterion, const Point& a, const Point& b,
             std::span<const Point> between) noexcept {
  return criterion == Criterion::Natural ? visible_nv(a, b, between)
                                         : visible_hv(a, b, between);
}

bool graph_equal(const VisibilityGraph& g1, const VisibilityGraph& g2) noexcept {
  return g1 == g2;
}

}  // namespace vg
