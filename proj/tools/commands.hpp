#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "records.hpp"
#include "visgraph.h"

namespace vgcli {

struct GenerateOptions {
  std::string kind = "uniform";
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string out;  // empty: stdout
};

struct BuildOptions {
  std::string series;  // path, "-" for stdin
  vg_algorithm algorithm = VG_ALGO_BST;
  vg_criterion criterion = VG_HORIZONTAL;
  bool instrument = false;
  std::string out;
};

struct BenchOptions {
  std::vector<std::string> kinds{"uniform", "conway", "walk"};
  std::vector<std::size_t> sizes{1024, 2048, 4096, 8192, 16384};
  std::vector<vg_algorithm> algorithms{VG_ALGO_BASIC, VG_ALGO_DIVIDE_CONQUER, VG_ALGO_BST};
  std::vector<vg_criterion> criteria{VG_NATURAL, VG_HORIZONTAL};
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  bool instrument = false;
  std::string out;
};

struct OnlineBenchOptions {
  std::vector<std::size_t> L{1000, 10000, 100000};
  std::vector<std::size_t> N{1000, 10000, 100000};
  std::vector<MergeMode> modes{MergeMode::Append, MergeMode::Insert};
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  std::string out;
};

struct StreamOptions {
  std::size_t batch_size = 64;
  vg_criterion criterion = VG_HORIZONTAL;  // used for the final graph
};

// Each command writes results to its output (file or `out`) and diagnostics
// to `err`. They throw CliError on failure; main() maps that to an exit code.
void run_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err);
void run_build(const BuildOptions& opt, std::istream& in, std::ostream& out, std::ostream& err);

// Returns the records that were also written to opt.out; a per-cell summary
// (mean, sample stddev, log-log slopes) goes to `out`.
std::vector<BenchRecord> run_bench(const BenchOptions& opt, std::ostream& out,
                                   std::ostream& err);
std::vector<OnlineRatioRecord> run_online_bench(const OnlineBenchOptions& opt,
                                                std::ostream& out, std::ostream& err);

// Returns the number of input lines that were rejected.
std::size_t run_stream(const StreamOptions& opt, std::istream& in, std::ostream& out,
                       std::ostream& err);

// Interleaved batch for the insert scenario: picks `batch` of the `total`
// positions with a seeded partial shuffle, returned ascending.
std::vector<std::size_t> pick_batch_positions(std::size_t total, std::size_t batch,
                                              std::uint64_t seed);

}  // namespace vgcli
