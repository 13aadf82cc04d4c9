#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "visgraph.h"

namespace vgcli {

inline constexpr std::string_view kBenchHeader =
    "algorithm,criterion,kind,n,trial,elapsed_s,residual_checks";
inline constexpr std::string_view kOnlineHeader = "mode,L,N,trial,t_offline_s,t_online_s";

enum class MergeMode { Append, Insert };

struct BenchRecord {
  vg_algorithm algorithm = VG_ALGO_BASIC;
  vg_criterion criterion = VG_HORIZONTAL;
  vg_series_kind kind = VG_KIND_UNIFORM_NOISE;
  std::size_t n = 0;
  std::size_t trial = 0;
  double elapsed_s = 0.0;
  std::optional<std::uint64_t> residual_checks;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

struct OnlineRatioRecord {
  MergeMode mode = MergeMode::Append;
  std::size_t L = 0;
  std::size_t N = 0;
  std::size_t trial = 0;
  double t_offline_s = 0.0;
  double t_online_s = 0.0;

  friend bool operator==(const OnlineRatioRecord&, const OnlineRatioRecord&) = default;
};

std::string_view algorithm_name(vg_algorithm a);
std::optional<vg_algorithm> parse_algorithm(std::string_view s);
std::string_view criterion_name(vg_criterion c);
std::optional<vg_criterion> parse_criterion(std::string_view s);
std::string_view mode_name(MergeMode m);
std::optional<MergeMode> parse_mode(std::string_view s);

// CSV with the fixed header line; elapsed times use shortest round-trip
// formatting so parse(emit(r)) == r.
std::string emit_bench_csv(const std::vector<BenchRecord>& records);
std::vector<BenchRecord> parse_bench_csv(std::string_view text);
std::string emit_online_csv(const std::vector<OnlineRatioRecord>& records);
std::vector<OnlineRatioRecord> parse_online_csv(std::string_view text);

struct MeanStd {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation; 0 for a single value
  std::size_t count = 0;
};
MeanStd mean_std(const std::vector<double>& xs);

// Least-squares slope of log(y) against log(x). Points with non-positive
// coordinates are skipped; returns nullopt with fewer than two distinct x.
std::optional<double> loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace vgcli
