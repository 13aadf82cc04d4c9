#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "visgraph.h"

namespace {

vg_series* make(const std::vector<vg_point>& pts) {
  vg_series* s = nullptr;
  REQUIRE(vg_series_create(pts.data(), pts.size(), &s) == VG_OK);
  return s;
}

vg_tree* encode(const std::vector<vg_point>& pts) {
  vg_series* s = make(pts);
  vg_tree* t = nullptr;
  REQUIRE(vg_tree_encode(s, &t) == VG_OK);
  vg_series_destroy(s);
  return t;
}

std::string snapshot(const vg_tree* t) {
  char* raw = nullptr;
  size_t len = 0;
  REQUIRE(vg_tree_snapshot(t, &raw, &len) == VG_OK);
  std::string out(raw, len);
  vg_string_free(raw);
  return out;
}

}  // namespace

TEST_CASE("series and graph lifecycle") {
  vg_series* s = make({{0, 3}, {1, 1}, {2, 3}});
  CHECK(vg_series_size(s) == 3);

  for (vg_algorithm algo : {VG_ALGO_BASIC, VG_ALGO_DIVIDE_CONQUER, VG_ALGO_BST}) {
    vg_graph* g = nullptr;
    REQUIRE(vg_graph_build(s, algo, VG_NATURAL, nullptr, &g) == VG_OK);
    CHECK(vg_graph_node_count(g) == 3);
    CHECK(vg_graph_edge_count(g) == 3);
    std::vector<vg_edge> edges(3);
    REQUIRE(vg_graph_edges(g, edges.data(), edges.size()) == VG_OK);
    CHECK(edges[1].u == 0);
    CHECK(edges[1].v == 2);

    char* text = nullptr;
    size_t len = 0;
    REQUIRE(vg_graph_format(g, &text, &len) == VG_OK);
    CHECK(std::string(text, len) == "0 1\n0 2\n1 2\n");
    CHECK(std::strlen(text) == len);
    vg_string_free(text);
    vg_graph_destroy(g);
  }
  vg_series_destroy(s);

  // destroying null handles is a no-op
  vg_series_destroy(nullptr);
  vg_graph_destroy(nullptr);
  vg_tree_destroy(nullptr);
  vg_string_free(nullptr);
}

TEST_CASE("status codes and last error") {
  vg_series* s = nullptr;
  const vg_point bad_order[] = {{1, 1}, {0, 2}};
  CHECK(vg_series_create(bad_order, 2, &s) == VG_ERR_INVALID_SERIES);
  CHECK(s == nullptr);
  CHECK(std::strlen(vg_last_error()) > 0);

  const vg_point dup[] = {{0, 1}, {0, 2}};
  CHECK(vg_series_create(dup, 2, &s) == VG_ERR_DUPLICATE_INDEX);
  CHECK(vg_series_create_unordered(dup, 2, &s) == VG_ERR_DUPLICATE_INDEX);

  const vg_point nan[] = {{0, std::nan("")}};
  CHECK(vg_series_create(nan, 1, &s) == VG_ERR_INVALID_SERIES);

  CHECK(vg_series_create(nullptr, 0, nullptr) == VG_ERR_INVALID_ARGUMENT);
  CHECK(vg_series_parse("1 x\n", 4, &s) == VG_ERR_PARSE);
  CHECK(std::string(vg_last_error()).find("line 1") != std::string::npos);
  CHECK(vg_series_generate(VG_KIND_BALANCED_TREE, 6, 0, &s) == VG_ERR_INVALID_SPEC);
  CHECK(vg_series_generate(static_cast<vg_series_kind>(99), 6, 0, &s) ==
        VG_ERR_INVALID_ARGUMENT);

  vg_series_kind kind{};
  CHECK(vg_series_kind_from_name("walk", &kind) == VG_OK);
  CHECK(kind == VG_KIND_RANDOM_WALK);
  CHECK(vg_series_kind_from_name("nope", &kind) == VG_ERR_INVALID_SPEC);
  CHECK(std::string(vg_series_kind_name(VG_KIND_CONWAY)) == "conway");
  CHECK(std::string(vg_rng_algorithm()) == "mt19937_64");
  CHECK(std::string(vg_status_string(VG_ERR_HEAP_VIOLATION)).size() > 0);

  s = make({{0, 1}});
  vg_graph* g = nullptr;
  CHECK(vg_graph_build(s, static_cast<vg_algorithm>(7), VG_NATURAL, nullptr, &g) ==
        VG_ERR_INVALID_ARGUMENT);
  CHECK(vg_graph_build(s, VG_ALGO_BST, static_cast<vg_criterion>(7), nullptr, &g) ==
        VG_ERR_INVALID_ARGUMENT);
  vg_series_destroy(s);
}

TEST_CASE("parse and format round-trip through handles") {
  const std::string text = "0 1.5\n4 -2\n9 3\n";
  vg_series* s = nullptr;
  REQUIRE(vg_series_parse(text.data(), text.size(), &s) == VG_OK);
  char* out = nullptr;
  size_t len = 0;
  REQUIRE(vg_series_format(s, &out, &len) == VG_OK);
  CHECK(std::string(out, len) == text);
  vg_string_free(out);
  std::vector<vg_point> pts(vg_series_size(s));
  REQUIRE(vg_series_points(s, pts.data(), pts.size()) == VG_OK);
  CHECK(pts[1].index == 4);
  CHECK(pts[1].value == -2.0);
  vg_series_destroy(s);
}

TEST_CASE("tree handles: merge, add_point, decode") {
  vg_tree* a = encode({{0, 1}, {2, 5}, {4, 2}});
  vg_tree* b = encode({{1, 4}, {3, 3}});
  vg_tree* whole = encode({{0, 1}, {1, 4}, {2, 5}, {3, 3}, {4, 2}});

  REQUIRE(vg_tree_merge(a, b) == VG_OK);
  CHECK(vg_tree_size(b) == 0);
  CHECK(vg_tree_size(a) == 5);
  CHECK(vg_tree_equal(a, whole));
  CHECK(vg_tree_is_valid(a));
  CHECK(vg_tree_contains(a, 3));
  CHECK_FALSE(vg_tree_contains(a, 5));

  vg_series* s = nullptr;
  REQUIRE(vg_tree_series(a, &s) == VG_OK);
  vg_check_counter c{};
  vg_graph* g = nullptr;
  REQUIRE(vg_tree_decode(a, s, VG_NATURAL, &c, &g) == VG_OK);
  vg_graph* ref = nullptr;
  REQUIRE(vg_graph_build(s, VG_ALGO_BASIC, VG_NATURAL, nullptr, &ref) == VG_OK);
  CHECK(vg_graph_equal(g, ref));
  CHECK(c.rule_edges > 0);
  vg_graph_destroy(g);
  vg_graph_destroy(ref);

  // decoding against a different series is refused
  vg_series* other = make({{0, 1}});
  CHECK(vg_tree_decode(a, other, VG_HORIZONTAL, nullptr, &g) == VG_ERR_INVALID_ARGUMENT);
  vg_series_destroy(other);
  vg_series_destroy(s);

  REQUIRE(vg_tree_add_point(a, {5, 0.5}) == VG_OK);
  CHECK(vg_tree_height(a) >= 2);
  CHECK(vg_tree_add_point(a, {6, 100.0}) == VG_ERR_HEAP_VIOLATION);
  CHECK(vg_tree_add_point(a, {5, 0.1}) == VG_ERR_DUPLICATE_INDEX);
  CHECK(vg_tree_add_point(a, {7, INFINITY}) == VG_ERR_INVALID_SERIES);
  CHECK(vg_tree_size(a) == 6);

  vg_tree_destroy(a);
  vg_tree_destroy(b);
  vg_tree_destroy(whole);
}

TEST_CASE("failed merge leaves both trees unchanged") {
  vg_tree* a = encode({{0, 1}, {2, 5}, {4, 2}});
  vg_tree* b = encode({{1, 4}, {2, 3}});
  const std::string before_a = snapshot(a), before_b = snapshot(b);

  CHECK(vg_tree_merge(a, b) == VG_ERR_DUPLICATE_INDEX);
  CHECK(snapshot(a) == before_a);
  CHECK(snapshot(b) == before_b);
  CHECK(vg_tree_merge(a, a) == VG_ERR_DUPLICATE_INDEX);
  CHECK(snapshot(a) == before_a);

  vg_tree* copy = nullptr;
  REQUIRE(vg_tree_clone(a, &copy) == VG_OK);
  CHECK(vg_tree_equal(copy, a));
  vg_tree_destroy(copy);
  vg_tree_destroy(a);
  vg_tree_destroy(b);
}

TEST_CASE("empty tree handles") {
  vg_tree* t = encode({});
  CHECK(vg_tree_size(t) == 0);
  CHECK(vg_tree_height(t) == -1);
  CHECK(vg_tree_is_valid(t));
  vg_series* s = nullptr;
  REQUIRE(vg_tree_series(t, &s) == VG_OK);
  vg_graph* g = nullptr;
  REQUIRE(vg_tree_decode(t, s, VG_NATURAL, nullptr, &g) == VG_OK);
  CHECK(vg_graph_node_count(g) == 0);
  CHECK(vg_graph_edge_count(g) == 0);
  CHECK(snapshot(t).empty());
  vg_graph_destroy(g);
  vg_series_destroy(s);
  vg_tree_destroy(t);
}

TEST_CASE("formula entry points") {
  uint64_t v = 0;
  CHECK(vg_residual_formula_balanced(3, &v) == VG_OK);
  CHECK(v == 15);
  CHECK(vg_per_node_residual_count(2, &v) == VG_OK);
  CHECK(v == 3);
  CHECK(vg_per_node_residual_count(-1, &v) == VG_ERR_INVALID_ARGUMENT);
  CHECK(vg_residual_formula_balanced(3, nullptr) == VG_ERR_INVALID_ARGUMENT);
}
