/*
 * visgraph C interface.
 *
 * Series, graphs and trees are opaque handles owned by the caller and
 * released with the matching *_destroy function. Every fallible call returns
 * a vg_status; on failure a human-readable message for the calling thread is
 * available from vg_last_error(). Strings returned through char** out
 * parameters are heap-allocated and released with vg_string_free().
 */
#ifndef VISGRAPH_H
#define VISGRAPH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define VG_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define VG_API __attribute__((visibility("default")))
#else
#  define VG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vg_status {
  VG_OK = 0,
  VG_ERR_INVALID_ARGUMENT = 1,
  VG_ERR_INVALID_SERIES = 2,
  VG_ERR_DUPLICATE_INDEX = 3,
  VG_ERR_HEAP_VIOLATION = 4,
  VG_ERR_INVALID_SPEC = 5,
  VG_ERR_PARSE = 6,
  VG_ERR_IO = 7,
  VG_ERR_OUT_OF_MEMORY = 8,
  VG_ERR_INTERNAL = 9
} vg_status;

typedef enum vg_criterion { VG_HORIZONTAL = 0, VG_NATURAL = 1 } vg_criterion;

typedef enum vg_algorithm {
  VG_ALGO_BASIC = 0,
  VG_ALGO_DIVIDE_CONQUER = 1,
  VG_ALGO_BST = 2
} vg_algorithm;

typedef enum vg_series_kind {
  VG_KIND_UNIFORM_NOISE = 0,
  VG_KIND_RANDOM_WALK = 1,
  VG_KIND_CONWAY = 2,
  VG_KIND_MONOTONIC_INCREASING = 3,
  VG_KIND_MONOTONIC_DECREASING = 4,
  VG_KIND_CONSTANT = 5,
  VG_KIND_BALANCED_TREE = 6
} vg_series_kind;

typedef struct vg_point {
  int64_t index;
  double value;
} vg_point;

typedef struct vg_edge {
  int64_t u;
  int64_t v;
} vg_edge;

typedef struct vg_check_counter {
  uint64_t rule_edges;
  uint64_t residual_checks;
} vg_check_counter;

typedef struct vg_series vg_series;
typedef struct vg_graph vg_graph;
typedef struct vg_tree vg_tree;

VG_API const char* vg_status_string(vg_status status);
VG_API const char* vg_last_error(void);
VG_API void vg_string_free(char* s);

/* Names used on the command line: "uniform", "walk", "conway", "increasing",
 * "decreasing", "constant", "balanced". */
VG_API vg_status vg_series_kind_from_name(const char* name, vg_series_kind* out);
VG_API const char* vg_series_kind_name(vg_series_kind kind);
VG_API const char* vg_rng_algorithm(void);
VG_API uint64_t vg_derive_seed(uint64_t base, uint64_t stream);

/* ---- series ---- */

/* Points must be in strictly ascending index order with finite values. */
VG_API vg_status vg_series_create(const vg_point* points, size_t n, vg_series** out);
/* Same, but the points may come in any order. */
VG_API vg_status vg_series_create_unordered(const vg_point* points, size_t n,
                                            vg_series** out);
VG_API vg_status vg_series_generate(vg_series_kind kind, size_t n, uint64_t seed,
                                    vg_series** out);
VG_API vg_status vg_series_balanced(int k, vg_series** out);
VG_API vg_status vg_series_parse(const char* text, size_t len, vg_series** out);
VG_API vg_status vg_series_format(const vg_series* s, char** out, size_t* len);
VG_API size_t vg_series_size(const vg_series* s);
VG_API vg_status vg_series_points(const vg_series* s, vg_point* out, size_t cap);
VG_API void vg_series_destroy(vg_series* s);

/* ---- graphs ---- */

/* counter may be NULL (no instrumentation). Only BST/natural fills
 * residual_checks; BST fills rule_edges. */
VG_API vg_status vg_graph_build(const vg_series* s, vg_algorithm algo, vg_criterion crit,
                                vg_check_counter* counter, vg_graph** out);
VG_API size_t vg_graph_node_count(const vg_graph* g);
VG_API size_t vg_graph_edge_count(const vg_graph* g);
/* Copies up to cap edges in lexicographic order (u < v). */
VG_API vg_status vg_graph_edges(const vg_graph* g, vg_edge* out, size_t cap);
VG_API int vg_graph_equal(const vg_graph* a, const vg_graph* b);
VG_API vg_status vg_graph_format(const vg_graph* g, char** out, size_t* len);
VG_API void vg_graph_destroy(vg_graph* g);

/* ---- trees ---- */

VG_API vg_status vg_tree_encode(const vg_series* s, vg_tree** out);
VG_API vg_status vg_tree_clone(const vg_tree* t, vg_tree** out);
VG_API size_t vg_tree_size(const vg_tree* t);
/* -1 for an empty tree. */
VG_API int64_t vg_tree_height(const vg_tree* t);
VG_API int vg_tree_contains(const vg_tree* t, int64_t index);
/* Structural identity. */
VG_API int vg_tree_equal(const vg_tree* a, const vg_tree* b);
VG_API int vg_tree_is_valid(const vg_tree* t);
VG_API vg_status vg_tree_add_point(vg_tree* t, vg_point p);
/* Moves every node of src into dst; src is left empty. Both are unchanged on
 * VG_ERR_DUPLICATE_INDEX. */
VG_API vg_status vg_tree_merge(vg_tree* dst, vg_tree* src);
/* The series of the tree's points in index order. */
VG_API vg_status vg_tree_series(const vg_tree* t, vg_series** out);
/* s must be the series the tree encodes (see vg_tree_series). */
VG_API vg_status vg_tree_decode(const vg_tree* t, const vg_series* s, vg_criterion crit,
                                vg_check_counter* counter, vg_graph** out);
VG_API vg_status vg_tree_snapshot(const vg_tree* t, char** out, size_t* len);
VG_API void vg_tree_destroy(vg_tree* t);

/* ---- check-count formulas ---- */

VG_API vg_status vg_residual_formula_balanced(int64_t h_max, uint64_t* out);
VG_API vg_status vg_per_node_residual_count(int64_t h, uint64_t* out);

#ifdef __cplusplus
}
#endif

#endif /* VISGRAPH_H */
