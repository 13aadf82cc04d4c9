#include "visgraph/codec.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "sweep.hpp"
#include "visgraph/error.hpp"
#include "visgraph/text_io.hpp"

namespace vg {

namespace {

using NodeId = MaxBst::NodeId;
constexpr NodeId kNil = MaxBst::kNil;

// Strict priority used by both encode and merge: higher value first, then
// smaller index. A parent always outranks its children under this order.
bool outranks(const Point& a, const Point& b) noexcept {
  return a.value > b.value || (a.value == b.value && a.index < b.index);
}

// Node ids in pre-order.
std::vector<NodeId> pre_order(const MaxBst& tree) {
  std::vector<NodeId> out;
  out.reserve(tree.size());
  std::vector<NodeId> stack;
  if (tree.root() != kNil) stack.push_back(tree.root());
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    out.push_back(id);
    const auto& n = tree.node(id);
    if (n.right != kNil) stack.push_back(n.right);
    if (n.left != kNil) stack.push_back(n.left);
  }
  return out;
}

}  // namespace

std::int64_t MaxBst::height() const {
  if (root_ == kNil) return -1;
  std::int64_t best = 0;
  std::vector<std::pair<NodeId, std::int64_t>> stack{{root_, 0}};
  while (!stack.empty()) {
    const auto [id, depth] = stack.back();
    stack.pop_back();
    best = std::max(best, depth);
    const Node& n = nodes_[id];
    if (n.left != kNil) stack.push_back({n.left, depth + 1});
    if (n.right != kNil) stack.push_back({n.right, depth + 1});
  }
  return best;
}

bool MaxBst::contains(Index index) const noexcept {
  NodeId cur = root_;
  while (cur != kNil) {
    const Node& n = nodes_[cur];
    if (index == n.point.index) return true;
    cur = index < n.point.index ? n.left : n.right;
  }
  return false;
}

std::vector<MaxBst::NodeId> MaxBst::in_order() const {
  std::vector<NodeId> out;
  out.reserve(nodes_.size());
  std::vector<NodeId> stack;
  NodeId cur = root_;
  while (cur != kNil || !stack.empty()) {
    while (cur != kNil) {
      stack.push_back(cur);
      cur = nodes_[cur].left;
    }
    cur = stack.back();
    stack.pop_back();
    out.push_back(cur);
    cur = nodes_[cur].right;
  }
  return out;
}

TimeSeries MaxBst::to_series() const {
  std::vector<Point> pts;
  pts.reserve(nodes_.size());
  for (NodeId id : in_order()) pts.push_back(nodes_[id].point);
  return TimeSeries(std::move(pts));
}

bool MaxBst::satisfies_invariants() const {
  const auto order = in_order();
  if (order.size() != nodes_.size()) return false;
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (!(nodes_[order[i - 1]].point.index < nodes_[order[i]].point.index)) return false;
  }
  for (const Node& n : nodes_) {
    if (n.left != kNil && nodes_[n.left].point.value > n.point.value) return false;
    if (n.right != kNil && nodes_[n.right].point.value > n.point.value) return false;
  }
  return true;
}

bool operator==(const MaxBst& a, const MaxBst& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::pair<NodeId, NodeId>> stack;
  if (a.root_ != kNil) stack.push_back({a.root_, b.root_});
  while (!stack.empty()) {
    const auto [x, y] = stack.back();
    stack.pop_back();
    if ((x == kNil) != (y == kNil)) return false;
    if (x == kNil) continue;
    const auto& nx = a.nodes_[x];
    const auto& ny = b.nodes_[y];
    if (!(nx.point == ny.point)) return false;
    stack.push_back({nx.left, ny.left});
    stack.push_back({nx.right, ny.right});
  }
  return true;
}

MaxBst encode(const TimeSeries& series) {
  const auto pts = series.points();
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pts[a].value > pts[b].value;
  });

  MaxBst tree;
  tree.nodes_.reserve(pts.size());
  for (std::size_t pos : order) {
    const Point& p = pts[pos];
    const NodeId id = tree.nodes_.size();
    tree.nodes_.push_back({p, kNil, kNil});
    if (tree.root_ == kNil) {
      tree.root_ = id;
      continue;
    }
    NodeId cur = tree.root_;
    for (;;) {
      auto& n = tree.nodes_[cur];
      NodeId& slot = p.index < n.point.index ? n.left : n.right;
      if (slot == kNil) {
        slot = id;
        break;
      }
      cur = slot;
    }
  }
  return tree;
}

namespace {

// Position of every node in the series plus the extent of its subtree, after
// checking that the tree's in-order walk reproduces the series.
struct Layout {
  std::vector<std::size_t> pos;   // by node id
  std::vector<std::size_t> size;  // subtree size, by node id
};

Layout layout_of(const MaxBst& tree, const TimeSeries& series) {
  if (tree.size() != series.size()) {
    throw Error(ErrorCode::InvalidArgument, "tree does not encode the series (size mismatch)");
  }
  Layout lay;
  lay.pos.resize(tree.size());
  lay.size.assign(tree.size(), 1);
  const auto order = tree.in_order();
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!(tree.node(order[i]).point == series[i])) {
      throw Error(ErrorCode::InvalidArgument, "tree does not encode the series");
    }
    lay.pos[order[i]] = i;
  }
  const auto pre = pre_order(tree);
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
    const auto& n = tree.node(*it);
    if (n.left != kNil) lay.size[*it] += lay.size[n.left];
    if (n.right != kNil) lay.size[*it] += lay.size[n.right];
  }
  return lay;
}

// Connectivity rules. A node sees the left-most branch of its right subtree
// and the right-most branch of its left subtree (tree edges are the first
// element of each branch). On the right-most branch a node is hidden when its
// own right child has the same value: that run of equal values only exposes
// its largest index to viewers on the right.
template <class Emit>
void for_each_right_view(const MaxBst& tree, NodeId id, Emit emit) {
  for (NodeId r = tree.node(id).right; r != kNil; r = tree.node(r).left) emit(r);
}

template <class Emit>
void for_each_left_view(const MaxBst& tree, NodeId id, Emit emit) {
  for (NodeId l = tree.node(id).left; l != kNil; l = tree.node(l).right) {
    const auto& n = tree.node(l);
    if (n.right == kNil || tree.node(n.right).point.value < n.point.value) emit(l);
  }
}

}  // namespace

VisibilityGraph decode_hvg(const MaxBst& tree, const TimeSeries& series,
                           CheckCounter* counter) {
  layout_of(tree, series);
  GraphBuilder out(series);
  out.reserve(series.size() * 2);
  for (NodeId id = 0; id < tree.size(); ++id) {
    const Index self = tree.node(id).point.index;
    auto emit = [&](NodeId other) { out.add(self, tree.node(other).point.index); };
    for_each_right_view(tree, id, emit);
    for_each_left_view(tree, id, emit);
  }
  VisibilityGraph g = std::move(out).build();
  if (counter) *counter = {g.edge_count(), 0};
  return g;
}

VisibilityGraph decode_nvg(const MaxBst& tree, const TimeSeries& series,
                           CheckCounter* counter,
                           std::vector<std::uint64_t>* residual_by_position) {
  const Layout lay = layout_of(tree, series);
  const auto pts = series.points();
  GraphBuilder out(series);
  out.reserve(series.size() * 3);
  if (residual_by_position) residual_by_position->assign(series.size(), 0);

  std::uint64_t rule_edges = 0;
  std::uint64_t residual = 0;
  std::vector<std::size_t> branch;

  for (NodeId id = 0; id < tree.size(); ++id) {
    const auto& self = tree.node(id);
    const std::size_t p = lay.pos[id];
    std::uint64_t local = 0;

    // Walk one side of the subtree outward from p. Positions on the visible
    // branch are connected without testing; every other position costs one
    // criterion evaluation against the steepest point seen so far.
    auto walk = [&](std::ptrdiff_t first, std::ptrdiff_t last) {
      const std::ptrdiff_t step = first <= last ? 1 : -1;
      std::size_t next = branch.size();
      std::size_t blocker = detail::kNone;
      for (std::ptrdiff_t j = first; j != last; j += step) {
        const auto ju = static_cast<std::size_t>(j);
        bool vis;
        if (next > 0 && branch[next - 1] == ju) {
          --next;
          ++rule_edges;
          vis = true;
        } else {
          ++local;
          vis = blocker == detail::kNone || below_chord(pts[p], pts[ju], pts[blocker]);
        }
        if (vis) {
          blocker = ju;
          out.add(pts[p].index, pts[ju].index);
        }
      }
    };

    if (self.right != kNil) {
      // Left-most branch: positions decrease along it, so the nearest to p
      // ends up at the back.
      branch.clear();
      for_each_right_view(tree, id, [&](NodeId r) { branch.push_back(lay.pos[r]); });
      const auto first = static_cast<std::ptrdiff_t>(p) + 1;
      walk(first, first + static_cast<std::ptrdiff_t>(lay.size[self.right]));
    }
    if (self.left != kNil) {
      branch.clear();
      for_each_left_view(tree, id, [&](NodeId l) { branch.push_back(lay.pos[l]); });
      const auto first = static_cast<std::ptrdiff_t>(p) - 1;
      walk(first, first - static_cast<std::ptrdiff_t>(lay.size[self.left]));
    }

    residual += local;
    if (residual_by_position) (*residual_by_position)[p] = local;
  }

  if (counter) *counter = {rule_edges, residual};
  return std::move(out).build();
}

VisibilityGraph decode(const MaxBst& tree, const TimeSeries& series, Criterion criterion,
                       CheckCounter* counter) {
  return criterion == Criterion::Natural ? decode_nvg(tree, series, counter)
                                         : decode_hvg(tree, series, counter);
}

std::uint64_t per_node_residual_count(std::int64_t h) {
  if (h < 0 || h > 62) {
    throw Error(ErrorCode::InvalidArgument, "node height out of range: " + std::to_string(h));
  }
  const auto uh = static_cast<std::uint64_t>(h);
  return (std::uint64_t{1} << (uh + 1)) - 1 - 2 * uh;
}

std::uint64_t residual_check_formula_balanced(std::int64_t h_max) {
  if (h_max < 0 || h_max > 57) {
    throw Error(ErrorCode::InvalidArgument, "tree height out of range: " + std::to_string(h_max));
  }
  std::uint64_t total = 0;
  for (std::int64_t h = 2; h <= h_max; ++h) {
    total += (std::uint64_t{1} << (h_max - h)) * per_node_residual_count(h);
  }
  return total;
}

MaxBst add_point(MaxBst&& tree, const Point& p) {
  NodeId parent = kNil;
  bool go_left = false;
  for (NodeId cur = tree.root_; cur != kNil;) {
    const auto& n = tree.nodes_[cur];
    if (n.point.index == p.index) {
      throw Error(ErrorCode::DuplicateIndex, "index " + std::to_string(p.index) + " already in tree");
    }
    if (p.value > n.point.value) {
      throw Error(ErrorCode::HeapViolation,
                  "value at index " + std::to_string(p.index) + " exceeds ancestor at index " +
                      std::to_string(n.point.index));
    }
    parent = cur;
    go_left = p.index < n.point.index;
    cur = go_left ? n.left : n.right;
  }
  const NodeId id = tree.nodes_.size();
  tree.nodes_.push_back({p, kNil, kNil});
  if (parent == kNil) {
    tree.root_ = id;
  } else {
    (go_left ? tree.nodes_[parent].left : tree.nodes_[parent].right) = id;
  }
  return std::move(tree);
}

MaxBst merge(MaxBst&& a, MaxBst&& b) {
  if (b.empty()) return std::move(a);
  if (a.empty()) return std::move(b);

  {
    const auto ia = a.in_order();
    const auto ib = b.in_order();
    std::size_t i = 0, j = 0;
    while (i < ia.size() && j < ib.size()) {
      const Index x = a.nodes_[ia[i]].point.index;
      const Index y = b.nodes_[ib[j]].point.index;
      if (x == y) {
        throw Error(ErrorCode::DuplicateIndex, "index " + std::to_string(x) + " in both trees");
      }
      if (x < y) ++i; else ++j;
    }
  }

  MaxBst out = std::move(a);
  const std::size_t offset = out.nodes_.size();
  out.nodes_.reserve(offset + b.nodes_.size());
  for (const auto& n : b.nodes_) {
    out.nodes_.push_back({n.point, n.left == kNil ? kNil : n.left + offset,
                          n.right == kNil ? kNil : n.right + offset});
  }
  const NodeId other_root = b.root_ + offset;
  b = MaxBst{};
  auto& nodes = out.nodes_;

  // Detaches everything in `t` below `key` and above `key` into two trees,
  // following the search path for `key`; heap order is preserved.
  auto split = [&](NodeId t, Index key) {
    NodeId lo = kNil, hi = kNil;
    NodeId* lo_hook = &lo;
    NodeId* hi_hook = &hi;
    while (t != kNil) {
      if (nodes[t].point.index < key) {
        *lo_hook = t;
        lo_hook = &nodes[t].right;
        t = nodes[t].right;
      } else {
        *hi_hook = t;
        hi_hook = &nodes[t].left;
        t = nodes[t].left;
      }
    }
    *lo_hook = kNil;
    *hi_hook = kNil;
    return std::pair{lo, hi};
  };

  struct Task {
    NodeId* slot;
    NodeId x, y;
  };
  std::vector<Task> work{{&out.root_, out.root_, other_root}};
  while (!work.empty()) {
    auto [slot, x, y] = work.back();
    work.pop_back();
    if (x == kNil || y == kNil) {
      *slot = x == kNil ? y : x;
      continue;
    }
    if (outranks(nodes[y].point, nodes[x].point)) std::swap(x, y);
    const auto [lo, hi] = split(y, nodes[x].point.index);
    *slot = x;
    work.push_back({&nodes[x].left, nodes[x].left, lo});
    work.push_back({&nodes[x].right, nodes[x].right, hi});
  }
  return out;
}

std::string snapshot(const MaxBst& tree) {
  std::string out;
  std::vector<std::pair<NodeId, std::size_t>> stack;
  if (tree.root() != kNil) stack.push_back({tree.root(), 0});
  while (!stack.empty()) {
    const auto [id, depth] = stack.back();
    stack.pop_back();
    const auto& n = tree.node(id);
    out += std::to_string(depth);
    out += ' ';
    out += std::to_string(n.point.index);
    out += ' ';
    out += format_double(n.point.value);
    out += '\n';
    if (n.right != kNil) stack.push_back({n.right, depth + 1});
    if (n.left != kNil) stack.push_back({n.left, depth + 1});
  }
  return out;
}

}  // namespace vg
