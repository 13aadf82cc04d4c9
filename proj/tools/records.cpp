#include "records.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "handles.hpp"

namespace vgcli {

namespace {

template <class T>
T parse_number(std::string_view tok, std::size_t line) {
  T v{};
  auto r = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (r.ec != std::errc{} || r.ptr != tok.data() + tok.size()) {
    throw CliError(VG_ERR_PARSE, "csv line " + std::to_string(line) + ": bad number '" +
                                     std::string(tok) + "'");
  }
  return v;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto comma = line.find(',');
    out.push_back(line.substr(0, comma));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return out;
}

template <class T>
std::string fmt(T v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

// Calls row(fields, line_no) for every data line after checking the header.
template <class Row>
void for_each_row(std::string_view text, std::string_view header, Row row) {
  std::size_t line_no = 0;
  bool seen_header = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!seen_header) {
      if (line != header) {
        throw CliError(VG_ERR_PARSE, "csv header mismatch: '" + std::string(line) + "'");
      }
      seen_header = true;
      continue;
    }
    row(split_fields(line), line_no);
  }
}

[[noreturn]] void bad_field(std::size_t line, std::string_view what) {
  throw CliError(VG_ERR_PARSE, "csv line " + std::to_string(line) + ": " + std::string(what));
}

}  // namespace

std::string_view algorithm_name(vg_algorithm a) {
  switch (a) {
    case VG_ALGO_BASIC: return "basic";
    case VG_ALGO_DIVIDE_CONQUER: return "dc";
    case VG_ALGO_BST: return "bst";
  }
  return "unknown";
}

std::optional<vg_algorithm> parse_algorithm(std::string_view s) {
  if (s == "basic") return VG_ALGO_BASIC;
  if (s == "dc") return VG_ALGO_DIVIDE_CONQUER;
  if (s == "bst") return VG_ALGO_BST;
  return std::nullopt;
}

std::string_view criterion_name(vg_criterion c) {
  return c == VG_NATURAL ? "nvg" : "hvg";
}

std::optional<vg_criterion> parse_criterion(std::string_view s) {
  if (s == "hvg") return VG_HORIZONTAL;
  if (s == "nvg") return VG_NATURAL;
  return std::nullopt;
}

std::string_view mode_name(MergeMode m) { return m == MergeMode::Append ? "append" : "insert"; }

std::optional<MergeMode> parse_mode(std::string_view s) {
  if (s == "append") return MergeMode::Append;
  if (s == "insert") return MergeMode::Insert;
  return std::nullopt;
}

std::string emit_bench_csv(const std::vector<BenchRecord>& records) {
  std::string out(kBenchHeader);
  out += '\n';
  for (const auto& r : records) {
    out += algorithm_name(r.algorithm);
    out += ',';
    out += criterion_name(r.criterion);
    out += ',';
    out += vg_series_kind_name(r.kind);
    out += ',' + fmt(r.n) + ',' + fmt(r.trial) + ',' + fmt(r.elapsed_s) + ',';
    if (r.residual_checks) out += fmt(*r.residual_checks);
    out += '\n';
  }
  return out;
}

std::vector<BenchRecord> parse_bench_csv(std::string_view text) {
  std::vector<BenchRecord> out;
  for_each_row(text, kBenchHeader, [&](const std::vector<std::string_view>& f, std::size_t ln) {
    if (f.size() != 7) bad_field(ln, "expected 7 fields");
    BenchRecord r;
    const auto algo = parse_algorithm(f[0]);
    const auto crit = parse_criterion(f[1]);
    if (!algo) bad_field(ln, "unknown algorithm");
    if (!crit) bad_field(ln, "unknown criterion");
    r.algorithm = *algo;
    r.criterion = *crit;
    const std::string kind(f[2]);
    if (vg_series_kind_from_name(kind.c_str(), &r.kind) != VG_OK) bad_field(ln, "unknown kind");
    r.n = parse_number<std::size_t>(f[3], ln);
    r.trial = parse_number<std::size_t>(f[4], ln);
    r.elapsed_s = parse_number<double>(f[5], ln);
    if (!f[6].empty()) r.residual_checks = parse_number<std::uint64_t>(f[6], ln);
    out.push_back(r);
  });
  return out;
}

std::string emit_online_csv(const std::vector<OnlineRatioRecord>& records) {
  std::string out(kOnlineHeader);
  out += '\n';
  for (const auto& r : records) {
    out += mode_name(r.mode);
    out += ',' + fmt(r.L) + ',' + fmt(r.N) + ',' + fmt(r.trial) + ',' + fmt(r.t_offline_s) +
           ',' + fmt(r.t_online_s) + '\n';
  }
  return out;
}

std::vector<OnlineRatioRecord> parse_online_csv(std::string_view text) {
  std::vector<OnlineRatioRecord> out;
  for_each_row(text, kOnlineHeader, [&](const std::vector<std::string_view>& f, std::size_t ln) {
    if (f.size() != 6) bad_field(ln, "expected 6 fields");
    OnlineRatioRecord r;
    const auto mode = parse_mode(f[0]);
    if (!mode) bad_field(ln, "unknown mode");
    r.mode = *mode;
    r.L = parse_number<std::size_t>(f[1], ln);
    r.N = parse_number<std::size_t>(f[2], ln);
    r.trial = parse_number<std::size_t>(f[3], ln);
    r.t_offline_s = parse_number<double>(f[4], ln);
    r.t_online_s = parse_number<double>(f[5], ln);
    out.push_back(r);
  });
  return out;
}

MeanStd mean_std(const std::vector<double>& xs) {
  MeanStd s;
  s.count = xs.size();
  if (xs.empty()) return s;
  double sum = 0.0;
  for (double x : xs) sum += x;
  s.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return s;
}

std::optional<double> loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  double first_x = 0;
  bool distinct = false;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (!(x[i] > 0) || !(y[i] > 0)) continue;
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    if (m == 0) first_x = lx;
    else if (lx != first_x) distinct = true;
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  if (m < 2 || !distinct) return std::nullopt;
  const double mm = static_cast<double>(m);
  return (mm * sxy - sx * sy) / (mm * sxx - sx * sx);
}

}  // namespace vgcli
