#include <random>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "visgraph/core.hpp"
#include "visgraph/error.hpp"
#include "visgraph/text_io.hpp"

using vg::Point;

namespace {

std::vector<Point> reversed(std::vector<Point> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("visible_nv examples") {
  CHECK(vg::visible_nv({0, 3}, {2, 3}, std::vector<Point>{{1, 1}}));
  // collinear middle point is not strictly below the chord
  CHECK_FALSE(vg::visible_nv({0, 1}, {2, 3}, std::vector<Point>{{1, 2}}));
  // 4.9 < 5 - 1/3 is false
  CHECK_FALSE(vg::visible_nv({0, 5}, {3, 4}, std::vector<Point>{{1, 4.9}, {2, 1}}));
  CHECK(vg::visible_nv({0, 5}, {1, -5}, {}));
}

TEST_CASE("visible_hv examples") {
  CHECK(vg::visible_hv({0, 3}, {2, 3}, std::vector<Point>{{1, 1}}));
  CHECK_FALSE(vg::visible_hv({0, 2}, {2, 2}, std::vector<Point>{{1, 2}}));
  CHECK_FALSE(vg::visible_hv({0, 1}, {2, 3}, std::vector<Point>{{1, 2}}));
  CHECK(vg::visible_hv({4, 0}, {5, 0}, {}));
}

TEST_CASE("graph_equal compares unordered pairs and node sets") {
  CHECK(vg::graph_equal(vg::VisibilityGraph({0, 1}, {{0, 1}}), vg::VisibilityGraph({0, 1}, {{1, 0}})));
  CHECK_FALSE(vg::graph_equal(vg::VisibilityGraph({0, 1}, {}), vg::VisibilityGraph({0, 1}, {{0, 1}})));
  CHECK(vg::graph_equal(vg::VisibilityGraph{}, vg::VisibilityGraph{}));
  CHECK_FALSE(vg::graph_equal(vg::VisibilityGraph({0}, {}), vg::VisibilityGraph({1}, {})));
}

TEST_CASE("VisibilityGraph rejects malformed input") {
  CHECK_THROWS_AS(vg::VisibilityGraph({0, 1}, {{1, 1}}), vg::Error);
  CHECK_THROWS_AS(vg::VisibilityGraph({0, 1}, {{0, 2}}), vg::Error);
  CHECK_THROWS_AS(vg::VisibilityGraph({0, 0}, {}), vg::Error);
  const vg::VisibilityGraph g({3, 1, 2}, {{2, 1}, {1, 2}, {3, 1}});
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(2, 1));
  CHECK(g.neighbors(1) == std::vector<vg::Index>{2, 3});
}

TEST_CASE("TimeSeries invariants") {
  CHECK_NOTHROW(vg::TimeSeries({{0, 1}, {5, 2}}));
  try {
    vg::TimeSeries({{0, 1}, {0, 2}});
    FAIL("expected throw");
  } catch (const vg::Error& e) {
    CHECK(e.code() == vg::ErrorCode::DuplicateIndex);
  }
  CHECK_THROWS_AS(vg::TimeSeries({{1, 1}, {0, 2}}), vg::Error);
  CHECK_THROWS_AS(vg::TimeSeries({{0, std::numeric_limits<double>::quiet_NaN()}}), vg::Error);
  CHECK_THROWS_AS(vg::TimeSeries({{0, std::numeric_limits<double>::infinity()}}), vg::Error);
  const auto s = vg::TimeSeries::from_unordered({{4, 1}, {-2, 3}});
  CHECK(s[0].index == -2);
}

TEST_CASE("predicate properties on random triples") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> val(-20, 20);
  for (int iter = 0; iter < 3000; ++iter) {
    const std::size_t n = 2 + rng() % 6;
    std::vector<Point> pts;
    vg::Index idx = static_cast<vg::Index>(rng() % 7) - 3;
    for (std::size_t i = 0; i < n; ++i) {
      pts.push_back({idx, static_cast<double>(val(rng))});
      idx += 1 + static_cast<vg::Index>(rng() % 3);
    }
    const Point a = pts.front(), b = pts.back();
    const std::vector<Point> mid(pts.begin() + 1, pts.end() - 1);

    const bool nv = vg::visible_nv(a, b, mid);
    const bool hv = vg::visible_hv(a, b, mid);
    if (hv) CHECK(nv);

    // symmetry
    CHECK(vg::visible_nv(b, a, reversed(mid)) == nv);
    CHECK(vg::visible_hv(b, a, reversed(mid)) == hv);

    // affine value map, exact on small integers
    const double scale = 1 + static_cast<double>(rng() % 9);
    const double offset = static_cast<double>(val(rng));
    auto map = [&](Point p) { return Point{p.index, scale * p.value + offset}; };
    std::vector<Point> mid2;
    for (const auto& p : mid) mid2.push_back(map(p));
    CHECK(vg::visible_nv(map(a), map(b), mid2) == nv);
    CHECK(vg::visible_hv(map(a), map(b), mid2) == hv);

    // index translation
    const vg::Index shift = static_cast<vg::Index>(rng() % 1000) - 500;
    auto move = [&](Point p) { return Point{p.index + shift, p.value}; };
    std::vector<Point> mid3;
    for (const auto& p : mid) mid3.push_back(move(p));
    CHECK(vg::visible_nv(move(a), move(b), mid3) == nv);
    CHECK(vg::visible_hv(move(a), move(b), mid3) == hv);
  }
}

TEST_CASE("series text format") {
  const vg::TimeSeries s({{-3, 0.1}, {0, 2.0}, {7, -1e-300}});
  const std::string text = vg::format_series(s);
  CHECK(text == "-3 0.1\n0 2\n7 -1e-300\n");
  CHECK(vg::parse_series(text) == s);
  CHECK(vg::parse_series("\n  1 2.5 \r\n\n3 4\n").size() == 2);
  CHECK(vg::parse_series("").empty());

  auto code_of = [](std::string_view t) {
    try {
      vg::parse_series(t);
    } catch (const vg::Error& e) {
      return e.code();
    }
    return vg::ErrorCode::Io;  // sentinel: no throw
  };
  CHECK(code_of("1\n") == vg::ErrorCode::Parse);
  CHECK(code_of("a 1\n") == vg::ErrorCode::Parse);
  CHECK(code_of("1 2 3\n") == vg::ErrorCode::Parse);
  CHECK(code_of("1 2\n1 3\n") == vg::ErrorCode::DuplicateIndex);
}

TEST_CASE("series text round-trips random doubles") {
  std::mt19937_64 rng(3);
  const auto s = oracle::random_real_series(rng, 200);
  CHECK(vg::parse_series(vg::format_series(s)) == s);
}

TEST_CASE("edge list text is sorted with u < v") {
  const vg::VisibilityGraph g({0, 1, 2, 10}, {{10, 2}, {1, 0}, {0, 2}});
  CHECK(vg::format_edges(g) == "0 1\n0 2\n2 10\n");
  CHECK(vg::format_edges(vg::VisibilityGraph{}).empty());
}
