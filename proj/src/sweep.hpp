#pragma once

#include <cstddef>
#include <limits>
#include <span>

#include "visgraph/core.hpp"

namespace vg::detail {

inline constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Natural visibility from pts[origin] to every position in [first, last),
// walking away from the origin. The last visible point is the steepest one
// seen so far, so it is the only blocker that needs testing. Returns the
// number of criterion evaluations (pairs with something in between).
template <class OnVisible>
std::size_t sweep_nv(std::span<const Point> pts, std::size_t origin,
                     std::ptrdiff_t first, std::ptrdiff_t last, OnVisible on_visible) {
  const Point& o = pts[origin];
  std::size_t blocker = kNone;
  std::size_t evaluations = 0;
  const std::ptrdiff_t step = first <= last ? 1 : -1;
  for (std::ptrdiff_t j = first; j != last; j += step) {
    const Point& p = pts[static_cast<std::size_t>(j)];
    bool vis = true;
    if (blocker != kNone) {
      ++evaluations;
      vis = below_chord(o, p, pts[blocker]);
    }
    if (vis) {
      blocker = static_cast<std::size_t>(j);
      on_visible(p.index);
    }
  }
  return evaluations;
}

// Horizontal visibility, same walk. Stops once something at least as high as
// the origin has been passed.
template <class OnVisible>
void sweep_hv(std::span<const Point> pts, std::size_t origin, std::ptrdiff_t first,
              std::ptrdiff_t last, OnVisible on_visible) {
  const double top = pts[origin].value;
  double running = -std::numeric_limits<double>::infinity();
  const std::ptrdiff_t step = first <= last ? 1 : -1;
  for (std::ptrdiff_t j = first; j != last; j += step) {
    const double v = pts[static_cast<std::size_t>(j)].value;
    if (running < v && running < top) on_visible(pts[static_cast<std::size_t>(j)].index);
    if (v > running) running = v;
    if (running >= top) break;
  }
}

}  // namespace vg::detail
