#include "visgraph/text_io.hpp"

#include <charconv>
#include <system_error>
#include <vector>

#include "visgraph/error.hpp"

namespace vg {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_series(const TimeSeries& series) {
  std::string out;
  out.reserve(series.size() * 24);
  char buf[64];
  for (const Point& p : series) {
    auto r = std::to_chars(buf, buf + sizeof buf, p.index);
    out.append(buf, r.ptr);
    out.push_back(' ');
    r = std::to_chars(buf, buf + sizeof buf, p.value);
    out.append(buf, r.ptr);
    out.push_back('\n');
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_fail(std::size_t line_no, std::string_view line) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) +
                                    ": expected 'index value', got '" +
                                    std::string(line) + "'");
}

}  // namespace

TimeSeries parse_series(std::string_view text) {
  std::vector<Point> points;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty()) continue;

    const auto sep = line.find_first_of(" \t");
    if (sep == std::string_view::npos) parse_fail(line_no, line);
    const std::string_view idx_tok = line.substr(0, sep);
    const std::string_view val_tok = trim(line.substr(sep));

    Point p;
    auto r1 = std::from_chars(idx_tok.data(), idx_tok.data() + idx_tok.size(), p.index);
    if (r1.ec != std::errc{} || r1.ptr != idx_tok.data() + idx_tok.size()) {
      parse_fail(line_no, line);
    }
    auto r2 = std::from_chars(val_tok.data(), val_tok.data() + val_tok.size(), p.value);
    if (r2.ec != std::errc{} || r2.ptr != val_tok.data() + val_tok.size()) {
      parse_fail(line_no, line);
    }
    points.push_back(p);
  }
  return TimeSeries(std::move(points));
}

std::string format_edges(const VisibilityGraph& graph) {
  std::string out;
  out.reserve(graph.edge_count() * 16);
  char buf[32];
  for (const Edge& e : graph.edges()) {
    auto r = std::to_chars(buf, buf + sizeof buf, e.u);
    out.append(buf, r.ptr);
    out.push_back(' ');
    r = std::to_chars(buf, buf + sizeof buf, e.v);
    out.append(buf, r.ptr);
    out.push_back('\n');
  }
  return out;
}

}  // namespace vg
