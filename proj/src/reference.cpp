#include "visgraph/reference.hpp"

#include <vector>

#include "sweep.hpp"

namespace vg {

VisibilityGraph basic_nvg(const TimeSeries& series, std::uint64_t* pair_evaluations) {
  const auto pts = series.points();
  const auto n = static_cast<std::ptrdiff_t>(pts.size());
  GraphBuilder out(series);
  std::uint64_t pairs = 0;
  for (std::ptrdiff_t a = 0; a < n; ++a) {
    const Index ia = pts[static_cast<std::size_t>(a)].index;
    detail::sweep_nv(pts, static_cast<std::size_t>(a), a + 1, n,
                     [&](Index b) { out.add(ia, b); });
    pairs += static_cast<std::uint64_t>(n - a - 1);
  }
  if (pair_evaluations) *pair_evaluations = pairs;
  return std::move(out).build();
}

VisibilityGraph basic_hvg(const TimeSeries& series) {
  const auto pts = series.points();
  const auto n = static_cast<std::ptrdiff_t>(pts.size());
  GraphBuilder out(series);
  out.reserve(pts.size() * 2);
  for (std::ptrdiff_t a = 0; a < n; ++a) {
    const Index ia = pts[static_cast<std::size_t>(a)].index;
    detail::sweep_hv(pts, static_cast<std::size_t>(a), a + 1, n,
                     [&](Index b) { out.add(ia, b); });
  }
  return std::move(out).build();
}

VisibilityGraph basic(const TimeSeries& series, Criterion criterion) {
  return criterion == Criterion::Natural ? basic_nvg(series) : basic_hvg(series);
}

VisibilityGraph dc_build(const TimeSeries& series, Criterion criterion) {
  const auto pts = series.points();
  GraphBuilder out(series);
  out.reserve(pts.size() * 2);

  struct Segment {
    std::ptrdiff_t lo, hi;  // inclusive
  };
  std::vector<Segment> work;
  if (!pts.empty()) work.push_back({0, static_cast<std::ptrdiff_t>(pts.size()) - 1});

  while (!work.empty()) {
    const Segment seg = work.back();
    work.pop_back();

    std::ptrdiff_t m = seg.lo;
    for (std::ptrdiff_t j = seg.lo + 1; j <= seg.hi; ++j) {
      if (pts[static_cast<std::size_t>(j)].value > pts[static_cast<std::size_t>(m)].value) m = j;
    }
    const auto mu = static_cast<std::size_t>(m);
    const Index im = pts[mu].index;
    auto connect = [&](Index j) { out.add(im, j); };

    if (criterion == Criterion::Natural) {
      detail::sweep_nv(pts, mu, m + 1, seg.hi + 1, connect);
      detail::sweep_nv(pts, mu, m - 1, seg.lo - 1, connect);
    } else {
      detail::sweep_hv(pts, mu, m + 1, seg.hi + 1, connect);
      detail::sweep_hv(pts, mu, m - 1, seg.lo - 1, connect);
    }

    if (m - 1 > seg.lo) work.push_back({seg.lo, m - 1});
    if (m + 1 < seg.hi) work.push_back({m + 1, seg.hi});
  }
  return std::move(out).build();
}

}  // namespace vg
