#include "visgraph.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "visgraph/codec.hpp"
#include "visgraph/core.hpp"
#include "visgraph/error.hpp"
#include "visgraph/generators.hpp"
#include "visgraph/reference.hpp"
#include "visgraph/text_io.hpp"

struct vg_series {
  vg::TimeSeries impl;
};
struct vg_graph {
  vg::VisibilityGraph impl;
};
struct vg_tree {
  vg::MaxBst impl;
};

namespace {

thread_local std::string g_last_error;

vg_status code_of(vg::ErrorCode c) {
  switch (c) {
    case vg::ErrorCode::InvalidArgument: return VG_ERR_INVALID_ARGUMENT;
    case vg::ErrorCode::InvalidSeries: return VG_ERR_INVALID_SERIES;
    case vg::ErrorCode::DuplicateIndex: return VG_ERR_DUPLICATE_INDEX;
    case vg::ErrorCode::HeapViolation: return VG_ERR_HEAP_VIOLATION;
    case vg::ErrorCode::InvalidSpec: return VG_ERR_INVALID_SPEC;
    case vg::ErrorCode::Parse: return VG_ERR_PARSE;
    case vg::ErrorCode::Io: return VG_ERR_IO;
  }
  return VG_ERR_INTERNAL;
}

vg_status fail(vg_status s, const char* msg) {
  g_last_error = msg;
  return s;
}

// Runs body, translating exceptions into status codes.
template <class F>
vg_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return VG_OK;
  } catch (const vg::Error& e) {
    return fail(code_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(VG_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(VG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(VG_ERR_INTERNAL, "unknown exception");
  }
}

#define VG_REQUIRE(cond)                                                   \
  do {                                                                     \
    if (!(cond)) return fail(VG_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

vg::Criterion to_criterion(vg_criterion c) {
  switch (c) {
    case VG_HORIZONTAL: return vg::Criterion::Horizontal;
    case VG_NATURAL: return vg::Criterion::Natural;
  }
  throw vg::Error(vg::ErrorCode::InvalidArgument, "unknown criterion");
}

vg::SeriesKind to_kind(vg_series_kind k) {
  switch (k) {
    case VG_KIND_UNIFORM_NOISE: return vg::SeriesKind::UniformNoise;
    case VG_KIND_RANDOM_WALK: return vg::SeriesKind::RandomWalk;
    case VG_KIND_CONWAY: return vg::SeriesKind::Conway;
    case VG_KIND_MONOTONIC_INCREASING: return vg::SeriesKind::MonotonicIncreasing;
    case VG_KIND_MONOTONIC_DECREASING: return vg::SeriesKind::MonotonicDecreasing;
    case VG_KIND_CONSTANT: return vg::SeriesKind::Constant;
    case VG_KIND_BALANCED_TREE: return vg::SeriesKind::BalancedTree;
  }
  throw vg::Error(vg::ErrorCode::InvalidArgument, "unknown series kind");
}

void copy_out(const std::string& text, char** out, size_t* len) {
  char* buf = static_cast<char*>(std::malloc(text.size() + 1));
  if (!buf) throw std::bad_alloc();
  std::memcpy(buf, text.data(), text.size());
  buf[text.size()] = '\0';
  *out = buf;
  if (len) *len = text.size();
}

std::vector<vg::Point> to_points(const vg_point* points, size_t n) {
  std::vector<vg::Point> pts(n);
  for (size_t i = 0; i < n; ++i) pts[i] = {points[i].index, points[i].value};
  return pts;
}

}  // namespace

extern "C" {

const char* vg_status_string(vg_status status) {
  switch (status) {
    case VG_OK: return "ok";
    case VG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case VG_ERR_INVALID_SERIES: return "invalid series";
    case VG_ERR_DUPLICATE_INDEX: return "duplicate index";
    case VG_ERR_HEAP_VIOLATION: return "heap violation";
    case VG_ERR_INVALID_SPEC: return "invalid spec";
    case VG_ERR_PARSE: return "parse error";
    case VG_ERR_IO: return "i/o error";
    case VG_ERR_OUT_OF_MEMORY: return "out of memory";
    case VG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* vg_last_error(void) { return g_last_error.c_str(); }

void vg_string_free(char* s) { std::free(s); }

vg_status vg_series_kind_from_name(const char* name, vg_series_kind* out) {
  VG_REQUIRE(name && out);
  const auto k = vg::parse_series_kind(name);
  if (!k) return fail(VG_ERR_INVALID_SPEC, "unknown series kind name");
  *out = static_cast<vg_series_kind>(static_cast<int>(*k));
  return VG_OK;
}

const char* vg_series_kind_name(vg_series_kind kind) {
  try {
    return vg::to_string(to_kind(kind)).data();
  } catch (...) {
    return "unknown";
  }
}

const char* vg_rng_algorithm(void) { return vg::kRngAlgorithm.data(); }

uint64_t vg_derive_seed(uint64_t base, uint64_t stream) { return vg::derive_seed(base, stream); }

vg_status vg_series_create(const vg_point* points, size_t n, vg_series** out) {
  VG_REQUIRE(out && (points || n == 0));
  return guarded([&] { *out = new vg_series{vg::TimeSeries(to_points(points, n))}; });
}

vg_status vg_series_create_unordered(const vg_point* points, size_t n, vg_series** out) {
  VG_REQUIRE(out && (points || n == 0));
  return guarded(
      [&] { *out = new vg_series{vg::TimeSeries::from_unordered(to_points(points, n))}; });
}

vg_status vg_series_generate(vg_series_kind kind, size_t n, uint64_t seed, vg_series** out) {
  VG_REQUIRE(out);
  return guarded([&] { *out = new vg_series{vg::generate({to_kind(kind), n, seed})}; });
}

vg_status vg_series_balanced(int k, vg_series** out) {
  VG_REQUIRE(out);
  return guarded([&] { *out = new vg_series{vg::balanced_tree_values(k)}; });
}

vg_status vg_series_parse(const char* text, size_t len, vg_series** out) {
  VG_REQUIRE(out && (text || len == 0));
  return guarded(
      [&] { *out = new vg_series{vg::parse_series(std::string_view(text ? text : "", len))}; });
}

vg_status vg_series_format(const vg_series* s, char** out, size_t* len) {
  VG_REQUIRE(s && out);
  return guarded([&] { copy_out(vg::format_series(s->impl), out, len); });
}

size_t vg_series_size(const vg_series* s) { return s ? s->impl.size() : 0; }

vg_status vg_series_points(const vg_series* s, vg_point* out, size_t cap) {
  VG_REQUIRE(s && (out || cap == 0));
  const size_t n = std::min(cap, s->impl.size());
  for (size_t i = 0; i < n; ++i) out[i] = {s->impl[i].index, s->impl[i].value};
  return VG_OK;
}

void vg_series_destroy(vg_series* s) { delete s; }

vg_status vg_graph_build(const vg_series* s, vg_algorithm algo, vg_criterion crit,
                         vg_check_counter* counter, vg_graph** out) {
  VG_REQUIRE(s && out);
  return guarded([&] {
    const vg::Criterion c = to_criterion(crit);
    vg::CheckCounter cc;
    vg::VisibilityGraph g;
    switch (algo) {
      case VG_ALGO_BASIC:
        g = vg::basic(s->impl, c);
        break;
      case VG_ALGO_DIVIDE_CONQUER:
        g = vg::dc_build(s->impl, c);
        break;
      case VG_ALGO_BST:
        g = vg::decode(vg::encode(s->impl), s->impl, c, counter ? &cc : nullptr);
        break;
      default:
        throw vg::Error(vg::ErrorCode::InvalidArgument, "unknown algorithm");
    }
    if (counter) *counter = {cc.rule_edges, cc.residual_checks};
    *out = new vg_graph{std::move(g)};
  });
}

size_t vg_graph_node_count(const vg_graph* g) { return g ? g->impl.node_count() : 0; }
size_t vg_graph_edge_count(const vg_graph* g) { return g ? g->impl.edge_count() : 0; }

vg_status vg_graph_edges(const vg_graph* g, vg_edge* out, size_t cap) {
  VG_REQUIRE(g && (out || cap == 0));
  const auto& edges = g->impl.edges();
  const size_t n = std::min(cap, edges.size());
  for (size_t i = 0; i < n; ++i) out[i] = {edges[i].u, edges[i].v};
  return VG_OK;
}

int vg_graph_equal(const vg_graph* a, const vg_graph* b) {
  if (!a || !b) return a == b;
  return vg::graph_equal(a->impl, b->impl) ? 1 : 0;
}

vg_status vg_graph_format(const vg_graph* g, char** out, size_t* len) {
  VG_REQUIRE(g && out);
  return guarded([&] { copy_out(vg::format_edges(g->impl), out, len); });
}

void vg_graph_destroy(vg_graph* g) { delete g; }

vg_status vg_tree_encode(const vg_series* s, vg_tree** out) {
  VG_REQUIRE(s && out);
  return guarded([&] { *out = new vg_tree{vg::encode(s->impl)}; });
}

vg_status vg_tree_clone(const vg_tree* t, vg_tree** out) {
  VG_REQUIRE(t && out);
  return guarded([&] { *out = new vg_tree{t->impl}; });
}

size_t vg_tree_size(const vg_tree* t) { return t ? t->impl.size() : 0; }
int64_t vg_tree_height(const vg_tree* t) { return t ? t->impl.height() : -1; }
int vg_tree_contains(const vg_tree* t, int64_t index) {
  return t && t->impl.contains(index) ? 1 : 0;
}

int vg_tree_equal(const vg_tree* a, const vg_tree* b) {
  if (!a || !b) return a == b;
  return a->impl == b->impl ? 1 : 0;
}

int vg_tree_is_valid(const vg_tree* t) { return t && t->impl.satisfies_invariants() ? 1 : 0; }

vg_status vg_tree_add_point(vg_tree* t, vg_point p) {
  VG_REQUIRE(t);
  return guarded([&] {
    if (!std::isfinite(p.value)) {
      throw vg::Error(vg::ErrorCode::InvalidSeries, "non-finite value");
    }
    t->impl = vg::add_point(std::move(t->impl), {p.index, p.value});
  });
}

vg_status vg_tree_merge(vg_tree* dst, vg_tree* src) {
  VG_REQUIRE(dst && src);
  if (dst == src) return fail(VG_ERR_DUPLICATE_INDEX, "cannot merge a tree into itself");
  return guarded([&] {
    dst->impl = vg::merge(std::move(dst->impl), std::move(src->impl));
    src->impl = vg::MaxBst{};
  });
}

vg_status vg_tree_series(const vg_tree* t, vg_series** out) {
  VG_REQUIRE(t && out);
  return guarded([&] { *out = new vg_series{t->impl.to_series()}; });
}

vg_status vg_tree_decode(const vg_tree* t, const vg_series* s, vg_criterion crit,
                         vg_check_counter* counter, vg_graph** out) {
  VG_REQUIRE(t && s && out);
  return guarded([&] {
    vg::CheckCounter cc;
    auto g = vg::decode(t->impl, s->impl, to_criterion(crit), counter ? &cc : nullptr);
    if (counter) *counter = {cc.rule_edges, cc.residual_checks};
    *out = new vg_graph{std::move(g)};
  });
}

vg_status vg_tree_snapshot(const vg_tree* t, char** out, size_t* len) {
  VG_REQUIRE(t && out);
  return guarded([&] { copy_out(vg::snapshot(t->impl), out, len); });
}

void vg_tree_destroy(vg_tree* t) { delete t; }

vg_status vg_residual_formula_balanced(int64_t h_max, uint64_t* out) {
  VG_REQUIRE(out);
  return guarded([&] { *out = vg::residual_check_formula_balanced(h_max); });
}

vg_status vg_per_node_residual_count(int64_t h, uint64_t* out) {
  VG_REQUIRE(out);
  return guarded([&] { *out = vg::per_node_residual_count(h); });
}

}  // extern "C"
