#pragma once

// Thin RAII layer over the visgraph C interface for the command-line tools.

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "visgraph.h"

namespace vgcli {

class CliError : public std::runtime_error {
 public:
  CliError(vg_status status, const std::string& what)
      : std::runtime_error(what), status_(status) {}
  vg_status status() const noexcept { return status_; }

 private:
  vg_status status_;
};

inline void check(vg_status s, std::string_view context) {
  if (s != VG_OK) {
    std::string msg(context);
    msg += ": ";
    msg += vg_status_string(s);
    const char* detail = vg_last_error();
    if (detail && *detail) {
      msg += " (";
      msg += detail;
      msg += ")";
    }
    throw CliError(s, msg);
  }
}

struct SeriesDeleter {
  void operator()(vg_series* s) const noexcept { vg_series_destroy(s); }
};
struct GraphDeleter {
  void operator()(vg_graph* g) const noexcept { vg_graph_destroy(g); }
};
struct TreeDeleter {
  void operator()(vg_tree* t) const noexcept { vg_tree_destroy(t); }
};
struct StringDeleter {
  void operator()(char* s) const noexcept { vg_string_free(s); }
};

using Series = std::unique_ptr<vg_series, SeriesDeleter>;
using Graph = std::unique_ptr<vg_graph, GraphDeleter>;
using Tree = std::unique_ptr<vg_tree, TreeDeleter>;

inline std::string take_string(char* raw, size_t len) {
  std::unique_ptr<char, StringDeleter> owned(raw);
  return std::string(raw, len);
}

inline Series make_series(const std::vector<vg_point>& pts, bool ordered = true) {
  vg_series* s = nullptr;
  check(ordered ? vg_series_create(pts.data(), pts.size(), &s)
                : vg_series_create_unordered(pts.data(), pts.size(), &s),
        "create series");
  return Series(s);
}

inline Series generate_series(vg_series_kind kind, size_t n, uint64_t seed) {
  vg_series* s = nullptr;
  check(vg_series_generate(kind, n, seed, &s), "generate series");
  return Series(s);
}

inline Series parse_series(std::string_view text) {
  vg_series* s = nullptr;
  check(vg_series_parse(text.data(), text.size(), &s), "parse series");
  return Series(s);
}

inline std::vector<vg_point> points_of(const vg_series* s) {
  std::vector<vg_point> pts(vg_series_size(s));
  check(vg_series_points(s, pts.data(), pts.size()), "read series");
  return pts;
}

inline std::string format(const vg_series* s) {
  char* raw = nullptr;
  size_t len = 0;
  check(vg_series_format(s, &raw, &len), "format series");
  return take_string(raw, len);
}

inline std::string format(const vg_graph* g) {
  char* raw = nullptr;
  size_t len = 0;
  check(vg_graph_format(g, &raw, &len), "format graph");
  return take_string(raw, len);
}

inline Graph build_graph(const vg_series* s, vg_algorithm algo, vg_criterion crit,
                         vg_check_counter* counter = nullptr) {
  vg_graph* g = nullptr;
  check(vg_graph_build(s, algo, crit, counter, &g), "build graph");
  return Graph(g);
}

inline Tree encode(const vg_series* s) {
  vg_tree* t = nullptr;
  check(vg_tree_encode(s, &t), "encode");
  return Tree(t);
}

inline Tree clone(const vg_tree* t) {
  vg_tree* c = nullptr;
  check(vg_tree_clone(t, &c), "clone tree");
  return Tree(c);
}

inline Series series_of(const vg_tree* t) {
  vg_series* s = nullptr;
  check(vg_tree_series(t, &s), "tree series");
  return Series(s);
}

inline Graph decode(const vg_tree* t, const vg_series* s, vg_criterion crit,
                    vg_check_counter* counter = nullptr) {
  vg_graph* g = nullptr;
  check(vg_tree_decode(t, s, crit, counter, &g), "decode");
  return Graph(g);
}

}  // namespace vgcli
