#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include "handles.hpp"

namespace vgcli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string read_input(const std::string& path, std::istream& stdin_stream) {
  if (path.empty() || path == "-") return read_all(stdin_stream);
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CliError(VG_ERR_IO, "cannot open '" + path + "'");
  return read_all(f);
}

// Writes to `path`, or to `fallback` when path is empty.
void write_output(const std::string& path, std::string_view text, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    fallback.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw CliError(VG_ERR_IO, "cannot open '" + path + "' for writing");
  f << text;
  f.flush();
  if (!f) throw CliError(VG_ERR_IO, "write to '" + path + "' failed");
}

vg_series_kind kind_from(const std::string& name) {
  vg_series_kind k{};
  check(vg_series_kind_from_name(name.c_str(), &k), "series kind '" + name + "'");
  return k;
}

std::uint64_t cell_seed(std::uint64_t base, vg_series_kind kind, std::size_t n,
                        std::size_t trial) {
  std::uint64_t s = vg_derive_seed(base, static_cast<std::uint64_t>(kind));
  s = vg_derive_seed(s, n);
  return vg_derive_seed(s, trial);
}

}  // namespace

void run_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& /*err*/) {
  const Series s = generate_series(kind_from(opt.kind), opt.n, opt.seed);
  write_output(opt.out, format(s.get()), out);
}

void run_build(const BuildOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  const Series s = parse_series(read_input(opt.series, in));
  vg_check_counter counter{};
  const Graph g = build_graph(s.get(), opt.algorithm, opt.criterion,
                              opt.instrument ? &counter : nullptr);
  write_output(opt.out, format(g.get()), out);
  err << "nodes=" << vg_graph_node_count(g.get()) << " edges=" << vg_graph_edge_count(g.get());
  if (opt.instrument && opt.algorithm == VG_ALGO_BST) {
    err << " rule_edges=" << counter.rule_edges;
    if (opt.criterion == VG_NATURAL) err << " residual_checks=" << counter.residual_checks;
  }
  err << '\n';
}

std::vector<BenchRecord> run_bench(const BenchOptions& opt, std::ostream& out,
                                   std::ostream& err) {
  if (opt.trials < 1) throw CliError(VG_ERR_INVALID_ARGUMENT, "--trials must be >= 1");
  std::vector<vg_series_kind> kinds;
  for (const auto& k : opt.kinds) kinds.push_back(kind_from(k));

  std::vector<BenchRecord> records;
  for (vg_series_kind kind : kinds) {
    for (std::size_t n : opt.sizes) {
      for (std::size_t trial = 0; trial < opt.trials; ++trial) {
        const Series s = generate_series(kind, n, cell_seed(opt.seed, kind, n, trial));
        for (vg_criterion crit : opt.criteria) {
          std::vector<Graph> first_trial;
          for (vg_algorithm algo : opt.algorithms) {
            vg_check_counter counter{};
            const bool counted = opt.instrument && algo == VG_ALGO_BST;
            const auto t0 = Clock::now();
            Graph g = build_graph(s.get(), algo, crit, counted ? &counter : nullptr);
            const double elapsed = seconds_since(t0);

            BenchRecord r{algo, crit, kind, n, trial, elapsed, std::nullopt};
            if (counted && crit == VG_NATURAL) r.residual_checks = counter.residual_checks;
            records.push_back(r);
            if (trial == 0) first_trial.push_back(std::move(g));
          }
          // Cross-algorithm agreement, once per cell.
          for (std::size_t i = 1; i < first_trial.size(); ++i) {
            if (!vg_graph_equal(first_trial[0].get(), first_trial[i].get())) {
              throw CliError(VG_ERR_INTERNAL,
                             std::string("algorithms disagree on ") + vg_series_kind_name(kind) +
                                 " n=" + std::to_string(n) + " " +
                                 std::string(criterion_name(crit)));
            }
          }
        }
      }
      err << "bench " << vg_series_kind_name(kind) << " n=" << n << " done\n";
    }
  }
  write_output(opt.out, emit_bench_csv(records), out);

  if (opt.out.empty()) return records;  // stdout already carries the rows

  // Summary: one row per cell plus a log-log slope per series.
  using Key = std::tuple<vg_algorithm, vg_criterion, vg_series_kind, std::size_t>;
  std::map<Key, std::vector<double>> cells;
  for (const auto& r : records) cells[{r.algorithm, r.criterion, r.kind, r.n}].push_back(r.elapsed_s);

  out << "# rng=" << vg_rng_algorithm() << " seed=" << opt.seed << '\n';
  out << "algorithm,criterion,kind,n,trials,mean_s,stddev_s\n";
  for (const auto& [key, xs] : cells) {
    const auto [algo, crit, kind, n] = key;
    const MeanStd ms = mean_std(xs);
    out << algorithm_name(algo) << ',' << criterion_name(crit) << ',' << vg_series_kind_name(kind)
        << ',' << n << ',' << ms.count << ',' << ms.mean << ',' << ms.stddev << '\n';
  }
  std::map<std::tuple<vg_algorithm, vg_criterion, vg_series_kind>,
           std::pair<std::vector<double>, std::vector<double>>>
      fits;
  for (const auto& r : records) {
    auto& [xs, ys] = fits[{r.algorithm, r.criterion, r.kind}];
    xs.push_back(static_cast<double>(r.n));
    ys.push_back(r.elapsed_s);
  }
  for (const auto& [key, xy] : fits) {
    const auto [algo, crit, kind] = key;
    if (const auto slope = loglog_slope(xy.first, xy.second)) {
      out << "# slope " << algorithm_name(algo) << ' ' << criterion_name(crit) << ' '
          << vg_series_kind_name(kind) << ' ' << *slope << '\n';
    }
  }
  return records;
}

std::vector<std::size_t> pick_batch_positions(std::size_t total, std::size_t batch,
                                              std::uint64_t seed) {
  if (batch > total) throw CliError(VG_ERR_INVALID_ARGUMENT, "batch larger than series");
  std::vector<std::size_t> pos(total);
  std::iota(pos.begin(), pos.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < batch; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (total - i));
    std::swap(pos[i], pos[j]);
  }
  pos.resize(batch);
  std::sort(pos.begin(), pos.end());
  return pos;
}

std::vector<OnlineRatioRecord> run_online_bench(const OnlineBenchOptions& opt,
                                                std::ostream& out, std::ostream& err) {
  if (opt.trials < 1) throw CliError(VG_ERR_INVALID_ARGUMENT, "--trials must be >= 1");
  std::vector<OnlineRatioRecord> records;

  for (std::size_t L : opt.L) {
    for (std::size_t N : opt.N) {
      for (MergeMode mode : opt.modes) {
        for (std::size_t trial = 0; trial < opt.trials; ++trial) {
          const std::uint64_t seed =
              vg_derive_seed(cell_seed(opt.seed, VG_KIND_UNIFORM_NOISE, L * 1000003 + N, trial),
                             static_cast<std::uint64_t>(mode));
          const Series full = generate_series(VG_KIND_UNIFORM_NOISE, L + N, seed);
          const auto pts = points_of(full.get());

          std::vector<char> in_batch(pts.size(), 0);
          if (mode == MergeMode::Append) {
            std::fill(in_batch.begin() + static_cast<std::ptrdiff_t>(L), in_batch.end(), 1);
          } else {
            for (std::size_t p : pick_batch_positions(L + N, N, vg_derive_seed(seed, 7))) {
              in_batch[p] = 1;
            }
          }
          std::vector<vg_point> existing_pts, batch_pts;
          existing_pts.reserve(L);
          batch_pts.reserve(N);
          for (std::size_t i = 0; i < pts.size(); ++i) {
            (in_batch[i] ? batch_pts : existing_pts).push_back(pts[i]);
          }
          const Series existing = make_series(existing_pts);
          const Series batch = make_series(batch_pts);
          const Tree existing_tree = encode(existing.get());
          Tree running = clone(existing_tree.get());

          const auto t_on = Clock::now();
          Tree batch_tree = encode(batch.get());
          check(vg_tree_merge(running.get(), batch_tree.get()), "merge");
          const double online = seconds_since(t_on);

          const auto t_off = Clock::now();
          const Tree scratch = encode(full.get());
          const double offline = seconds_since(t_off);

          if (trial == 0) {
            const Series merged_series = series_of(running.get());
            const Graph merged_graph = decode(running.get(), merged_series.get(), VG_HORIZONTAL);
            const Graph scratch_graph = decode(scratch.get(), full.get(), VG_HORIZONTAL);
            if (!vg_graph_equal(merged_graph.get(), scratch_graph.get())) {
              throw CliError(VG_ERR_INTERNAL, "merged tree decodes differently from scratch (L=" +
                                                  std::to_string(L) + " N=" + std::to_string(N) +
                                                  ")");
            }
          }
          records.push_back({mode, L, N, trial, offline, online});
        }
        err << "online-bench " << mode_name(mode) << " L=" << L << " N=" << N << " done\n";
      }
    }
  }
  write_output(opt.out, emit_online_csv(records), out);
  if (opt.out.empty()) return records;

  std::map<std::tuple<std::size_t, std::size_t, int>, std::vector<double>> ratios;
  for (const auto& r : records) {
    if (r.t_online_s <= 0) continue;
    const double ratio = r.t_offline_s / r.t_online_s;
    ratios[{r.L, r.N, static_cast<int>(r.mode)}].push_back(ratio);
    ratios[{r.L, r.N, -1}].push_back(ratio);
  }
  out << "mode,L,N,size_ratio,cases,mean_time_ratio,stddev_time_ratio,log10_mean_time_ratio\n";
  for (const auto& [key, xs] : ratios) {
    const auto [L, N, m] = key;
    const MeanStd ms = mean_std(xs);
    const double size_ratio = N == 0 ? 0.0 : static_cast<double>(L) / static_cast<double>(N);
    out << (m < 0 ? std::string_view("both") : mode_name(static_cast<MergeMode>(m))) << ','
        << L << ',' << N << ',' << size_ratio << ',' << ms.count << ',' << ms.mean << ','
        << ms.stddev << ',' << (ms.mean > 0 ? std::log10(ms.mean) : 0.0) << '\n';
  }
  return records;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

class StreamSession {
 public:
  StreamSession(const StreamOptions& opt, std::ostream& out, std::ostream& err)
      : opt_(opt), out_(out), err_(err), tree_(empty_tree()) {}

  void feed(std::string_view raw, std::size_t line_no) {
    const std::string_view line = trim(raw);
    if (line.empty()) return;
    if (line.starts_with("emit")) {
      const std::string_view arg = trim(line.substr(4));
      const auto crit = parse_criterion(arg);
      if (!crit || (line.size() > 4 && line[4] != ' ' && line[4] != '\t')) {
        reject(line_no, "expected 'emit hvg' or 'emit nvg'");
        return;
      }
      emit(*crit);
      return;
    }

    const auto sep = line.find_first_of(" \t");
    if (sep == std::string_view::npos) {
      reject(line_no, "expected 'index value'");
      return;
    }
    const std::string_view a = line.substr(0, sep);
    const std::string_view b = trim(line.substr(sep));
    vg_point p{};
    auto r1 = std::from_chars(a.data(), a.data() + a.size(), p.index);
    auto r2 = std::from_chars(b.data(), b.data() + b.size(), p.value);
    if (r1.ec != std::errc{} || r1.ptr != a.data() + a.size() || r2.ec != std::errc{} ||
        r2.ptr != b.data() + b.size() || !std::isfinite(p.value)) {
      reject(line_no, "expected 'index value'");
      return;
    }
    if (pending_index_.contains(p.index) || vg_tree_contains(tree_.get(), p.index)) {
      reject(line_no, "duplicate index " + std::to_string(p.index));
      return;
    }
    pending_.push_back(p);
    pending_index_.insert(p.index);
    if (pending_.size() >= opt_.batch_size) flush();
  }

  void finish() { emit(opt_.criterion); }

  std::size_t rejected() const noexcept { return rejected_; }

 private:
  static Tree empty_tree() {
    const Series none = make_series({});
    return encode(none.get());
  }

  void reject(std::size_t line_no, const std::string& why) {
    ++rejected_;
    err_ << "stream: line " << line_no << ": " << why << ", skipped\n";
  }

  // Batches are merged as whole trees.
  void flush() {
    if (pending_.empty()) return;
    const Series batch = make_series(pending_, /*ordered=*/false);
    Tree batch_tree = encode(batch.get());
    check(vg_tree_merge(tree_.get(), batch_tree.get()), "merge batch");
    pending_.clear();
    pending_index_.clear();
  }

  void emit(vg_criterion crit) {
    flush();
    const Series s = series_of(tree_.get());
    const Graph g = decode(tree_.get(), s.get(), crit);
    out_ << format(g.get());
    out_.flush();
  }

  const StreamOptions& opt_;
  std::ostream& out_;
  std::ostream& err_;
  Tree tree_;
  std::vector<vg_point> pending_;
  std::unordered_set<std::int64_t> pending_index_;
  std::size_t rejected_ = 0;
};

}  // namespace

std::size_t run_stream(const StreamOptions& opt, std::istream& in, std::ostream& out,
                       std::ostream& err) {
  if (opt.batch_size < 1) throw CliError(VG_ERR_INVALID_ARGUMENT, "--batch-size must be >= 1");
  StreamSession session(opt, out, err);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) session.feed(line, ++line_no);
  session.finish();
  return session.rejected();
}

}  // namespace vgcli
