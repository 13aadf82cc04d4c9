#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "visgraph/core.hpp"

namespace vg {

// Binary search tree on indices that is max-heap ordered on values: the
// encoded form of a series. Nodes live in a flat arena and refer to their
// children by id, so deep (degenerate) trees never recurse on destruction.
class MaxBst {
 public:
  using NodeId = std::size_t;
  static constexpr NodeId kNil = std::numeric_limits<NodeId>::max();

  struct Node {
    Point point;
    NodeId left = kNil;
    NodeId right = kNil;
  };

  MaxBst() = default;

  std::size_t size() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }
  NodeId root() const noexcept { return root_; }
  const Node& node(NodeId id) const noexcept { return nodes_[id]; }

  // Edges on the longest root-to-leaf path; -1 for an empty tree.
  std::int64_t height() const;
  bool contains(Index index) const noexcept;

  // Node ids in ascending index order.
  std::vector<NodeId> in_order() const;
  TimeSeries to_series() const;

  // Full traversal: BST order on indices and max-heap order on values.
  bool satisfies_invariants() const;

  // Same shape with the same (index, value) at every position.
  friend bool operator==(const MaxBst& a, const MaxBst& b);

 private:
  friend MaxBst encode(const TimeSeries& series);
  friend MaxBst add_point(MaxBst&& tree, const Point& p);
  friend MaxBst merge(MaxBst&& a, MaxBst&& b);

  std::vector<Node> nodes_;
  NodeId root_ = kNil;
};

struct CheckCounter {
  std::uint64_t rule_edges = 0;
  std::uint64_t residual_checks = 0;
};

// Stable sort by descending value (ties keep ascending index order), then
// plain BST insertion on index in that order.
MaxBst encode(const TimeSeries& series);

// Both decoders require `tree` to encode exactly `series` and throw
// Error(InvalidArgument) otherwise. When `counter` is non-null it receives
// the totals for this decode (it is overwritten, not accumulated).
VisibilityGraph decode_hvg(const MaxBst& tree, const TimeSeries& series,
                           CheckCounter* counter = nullptr);

// `residual_by_position`, when non-null, is resized to series.size() and
// receives the residual check count charged to each node.
VisibilityGraph decode_nvg(const MaxBst& tree, const TimeSeries& series,
                           CheckCounter* counter = nullptr,
                           std::vector<std::uint64_t>* residual_by_position = nullptr);

VisibilityGraph decode(const MaxBst& tree, const TimeSeries& series, Criterion criterion,
                       CheckCounter* counter = nullptr);

// Expected residual checks for a perfect tree of height h_max:
//   sum_{h=2}^{h_max} 2^(h_max-h) * (2^(h+1) - 2h - 1)
// Zero for h_max in {0, 1}; negative heights throw Error(InvalidArgument).
std::uint64_t residual_check_formula_balanced(std::int64_t h_max);

// 2^(h+1) - 1 - 2h for a node at height h. Throws on negative h.
std::uint64_t per_node_residual_count(std::int64_t h);

// Inserts a single point at the first free slot on its index path.
// Error(DuplicateIndex) if the index is present, Error(HeapViolation) if the
// point outranks a node on that path. The input tree is consumed on success
// and left untouched on error.
MaxBst add_point(MaxBst&& tree, const Point& p);

// Merges two trees with disjoint index sets. At every slot the higher-valued
// root wins (the smaller index on equal values); the loser descends towards
// the side its index belongs on, and any part of its subtree that belongs on
// the other side of the winner is cut off and routed there. Handles both
// append and interleaved inserts. Both inputs are consumed on success;
// Error(DuplicateIndex) on overlap leaves them untouched.
MaxBst merge(MaxBst&& a, MaxBst&& b);

// Pre-order "depth index value\n" lines, for debugging.
std::string snapshot(const MaxBst& tree);

}  // namespace vg
