#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "handles.hpp"

namespace {

const std::map<std::string, vg_algorithm> kAlgorithms{
    {"basic", VG_ALGO_BASIC}, {"dc", VG_ALGO_DIVIDE_CONQUER}, {"bst", VG_ALGO_BST}};
const std::map<std::string, vg_criterion> kCriteria{{"hvg", VG_HORIZONTAL},
                                                    {"nvg", VG_NATURAL}};
const std::map<std::string, vgcli::MergeMode> kModes{{"append", vgcli::MergeMode::Append},
                                                     {"insert", vgcli::MergeMode::Insert}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Visibility graphs from time series: basic, divide & conquer and max-BST codec"};
  app.require_subcommand(1);

  vgcli::GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Write a synthetic series");
  generate->add_option("--kind", gen.kind,
                       "uniform | walk | conway | increasing | decreasing | constant | balanced")
      ->capture_default_str();
  generate->add_option("--n", gen.n, "Number of points")->required();
  generate->add_option("--seed", gen.seed, "Seed for random kinds")->capture_default_str();
  generate->add_option("--out", gen.out, "Output file (default stdout)");

  vgcli::BuildOptions build;
  auto* build_cmd = app.add_subcommand("build", "Build a visibility graph from a series file");
  build_cmd->add_option("series", build.series, "Series file ('-' for stdin)")->required();
  build_cmd->add_option("--algo", build.algorithm, "basic | dc | bst")
      ->transform(CLI::CheckedTransformer(kAlgorithms, CLI::ignore_case));
  build_cmd->add_option("--criterion", build.criterion, "hvg | nvg")
      ->transform(CLI::CheckedTransformer(kCriteria, CLI::ignore_case));
  build_cmd->add_flag("--instrument", build.instrument, "Report codec check counts");
  build_cmd->add_option("--out", build.out, "Edge-list file (default stdout)");

  vgcli::BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time every algorithm on synthetic series");
  bench_cmd->add_option("--kind,--kinds", bench.kinds, "Series kinds")->delimiter(',');
  bench_cmd->add_option("--n,--sizes", bench.sizes, "Series lengths")->delimiter(',');
  bench_cmd->add_option("--algo,--algos", bench.algorithms, "Algorithms")
      ->delimiter(',')
      ->transform(CLI::CheckedTransformer(kAlgorithms, CLI::ignore_case));
  bench_cmd->add_option("--criterion", bench.criteria, "Criteria")
      ->delimiter(',')
      ->transform(CLI::CheckedTransformer(kCriteria, CLI::ignore_case));
  bench_cmd->add_option("--trials", bench.trials, "Series per size")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed)->capture_default_str();
  bench_cmd->add_flag("--instrument", bench.instrument, "Record residual check counts");
  bench_cmd->add_option("--out", bench.out, "CSV file (default stdout)");

  vgcli::OnlineBenchOptions online;
  auto* online_cmd =
      app.add_subcommand("online-bench", "Compare merge-based updates with re-encoding");
  online_cmd->add_option("--L", online.L, "Existing series lengths")->delimiter(',');
  online_cmd->add_option("--N", online.N, "Batch lengths")->delimiter(',');
  online_cmd->add_option("--mode", online.modes, "append | insert")
      ->delimiter(',')
      ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case));
  online_cmd->add_option("--trials", online.trials)->capture_default_str();
  online_cmd->add_option("--seed", online.seed)->capture_default_str();
  online_cmd->add_option("--out", online.out, "CSV file (default stdout)");

  vgcli::StreamOptions stream;
  auto* stream_cmd = app.add_subcommand(
      "stream", "Read 'index value' lines from stdin, merging batches; 'emit hvg|nvg' prints");
  stream_cmd->add_option("--batch-size", stream.batch_size)->capture_default_str();
  stream_cmd->add_option("--criterion", stream.criterion, "Criterion of the final graph")
      ->transform(CLI::CheckedTransformer(kCriteria, CLI::ignore_case));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) vgcli::run_generate(gen, std::cout, std::cerr);
    if (*build_cmd) vgcli::run_build(build, std::cin, std::cout, std::cerr);
    if (*bench_cmd) vgcli::run_bench(bench, std::cout, std::cerr);
    if (*online_cmd) vgcli::run_online_bench(online, std::cout, std::cerr);
    if (*stream_cmd) vgcli::run_stream(stream, std::cin, std::cout, std::cerr);
  } catch (const vgcli::CliError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.status() == VG_ERR_INVALID_ARGUMENT ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
