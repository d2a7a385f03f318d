#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dofsim/formulas.hpp"
#include "dofsim/montecarlo.hpp"
#include "dofsim/oracles.hpp"
#include "dofsim/partition.hpp"
#include "dofsim/zf_scheduler.hpp"

namespace {

using namespace dofsim;

constexpr int kExitValidation = 1;
constexpr int kExitOracleMismatch = 2;

uint64_t default_seed() {
  if (const char* env = std::getenv("DOFSIM_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw std::invalid_argument("DOFSIM_SEED is not an unsigned integer");
    }
  }
  return 1;
}

std::string load_strategy_text(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw std::invalid_argument("cannot open strategy file " + arg.substr(1));
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  return arg;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  const std::filesystem::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
    if (ec) throw std::runtime_error("cannot create directory " + p.parent_path().string());
  }
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << content;
}

std::vector<double> parse_grid(const std::string& text) {
  // "start:stop:step" or a single value
  std::vector<double> out;
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) {
    out.push_back(std::stod(text));
    return out;
  }
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos) throw std::invalid_argument("grid must be start:stop:step");
  const double start = std::stod(text.substr(0, c1));
  const double stop = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
  const double step = std::stod(text.substr(c2 + 1));
  if (step <= 0) throw std::invalid_argument("grid step must be positive");
  for (double v = start; v <= stop + 1e-12; v += step) out.push_back(std::min(v, stop));
  return out;
}

std::vector<Fraction> parse_f_grid(const std::string& text) {
  std::vector<Fraction> out;
  for (double v : parse_grid(text)) out.push_back(rationalize(v));
  return out;
}

int cmd_formulas(const std::string& out_path, int grid) {
  if (grid < 1) throw std::invalid_argument("--grid must be positive");
  write_output(out_path, formulas_csv(grid));
  return 0;
}

int cmd_simulate(const std::string& strategy_arg, int K, double p, long long trials,
                 uint64_t seed, const std::string& engine_name, int workers,
                 bool verify_beams, const std::string& out_path, const std::string& format) {
  const StrategySpec spec = parse_strategy_json(load_strategy_text(strategy_arg));
  const Engine engine = parse_engine(engine_name);
  const DofEstimate est = estimate(spec, K, p, trials, seed, engine, workers, verify_beams);

  std::ostringstream human;
  human.precision(10);
  human << "strategy=" << est.strategy << " engine=" << engine_name << " K=" << est.K
        << " p=" << est.p << " trials=" << est.trials << " mean=" << est.mean
        << " stderr=" << est.stderr_mean << " seed=" << est.seed << "\n";
  std::cerr << human.str();

  if (format == "json") {
    nlohmann::json j{{"p", est.p},         {"K", est.K},
                     {"trials", est.trials}, {"mean", est.mean},
                     {"stderr", est.stderr_mean}, {"seed", est.seed},
                     {"strategy", est.strategy}, {"engine", engine_name}};
    write_output(out_path, j.dump(2) + "\n");
  } else if (format == "csv") {
    write_output(out_path, "p,f,K,trials,mean,stderr,seed\n" + estimate_csv_row(est, "-"));
  } else {
    throw std::invalid_argument("--format must be csv or json");
  }
  return 0;
}

int cmd_sweep(int K, long long trials, const std::string& p_grid_s,
              const std::string& f_grid_s, uint64_t seed, int workers,
              const std::string& out_path, const std::string& summary_path) {
  const auto p_grid = parse_grid(p_grid_s);
  const auto f_grid = parse_f_grid(f_grid_s);
  const SweepResult res = sweep_fraction(K, trials, p_grid, f_grid, seed, workers);
  write_output(out_path, sweep_csv(res));
  if (!summary_path.empty()) write_output(summary_path, sweep_summary_csv(res));
  return 0;
}

int cmd_compare(int K, long long trials, const std::string& p_grid_s,
                const std::string& f_grid_s, uint64_t seed, int workers,
                const std::string& out_path) {
  const auto rows =
      compare_m1_m2(K, trials, parse_grid(p_grid_s), parse_f_grid(f_grid_s), seed, workers);
  write_output(out_path, compare_csv(rows, K, trials));
  return 0;
}

int cmd_oracle_check(int max_n, long long random_count, int random_max_n, uint64_t seed) {
  std::ostringstream os;
  const OracleReport ex = oracle_sandwich_exhaustive(max_n, seed);
  os << "exhaustive blocks N<=" << max_n << ": " << ex.instances << " instances, "
     << ex.mismatches << " mismatches\n"
     << ex.matrix();
  bool ok = ex.ok();
  if (!ex.ok()) os << "first counterexample: " << ex.first_counterexample << "\n";

  if (random_count > 0) {
    const OracleReport rnd = oracle_greedy_random(random_max_n, random_count, seed);
    os << "randomized blocks N<=" << random_max_n << ": " << rnd.instances << " instances, "
       << rnd.mismatches << " mismatches\n"
       << rnd.matrix();
    if (!rnd.ok()) {
      os << "first counterexample: " << rnd.first_counterexample << "\n";
      ok = false;
    }
  }
  os << (ok ? "ORACLES AGREE\n" : "ORACLE MISMATCH\n");
  std::cout << os.str();
  return ok ? 0 : kExitOracleMismatch;
}

int cmd_partition(const std::string& strategy_arg, int K, double p, uint64_t seed,
                  const std::string& out_path) {
  const StrategySpec spec = parse_strategy_json(load_strategy_text(strategy_arg));
  const MessageAssignment a = build_assignment(spec, K);
  const NetworkTopology topo{K, /*last_tx_deactivated=*/true};
  const NetworkRealization r = sample_realization(topo, p, seed);
  const Partition parts = partition_atomic(r, a);
  write_output(out_path, partition_dump(parts));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Per-user DoF simulator for linear networks with link erasures"};
  app.require_subcommand(1);

  std::string strategy = R"({"type":"theorem5"})";
  std::string out_path, summary_path, format = "csv", engine = "zf";
  std::string p_grid = "0:1:0.01", f_grid = "0:1:0.01";
  int K = 100, grid_points = 1001, workers = 0;
  int max_n = 5, random_max_n = 10;
  long long trials = 1000, random_count = 0;
  double p = 0.5;
  std::optional<uint64_t> seed_opt;
  bool verify_beams = false;

  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed_opt, "RNG seed (default: DOFSIM_SEED env or 1)");
  };

  auto* c_formulas = app.add_subcommand("formulas", "closed-form curves as CSV");
  c_formulas->add_option("--grid", grid_points, "number of grid points");
  c_formulas->add_option("--out", out_path, "output file (default stdout)");

  auto* c_sim = app.add_subcommand("simulate", "Monte Carlo estimate for one (strategy,K,p)");
  c_sim->add_option("--strategy", strategy, "strategy JSON, or @file");
  c_sim->add_option("--K", K, "user count");
  c_sim->add_option("--p", p, "erasure probability");
  c_sim->add_option("--trials", trials, "number of block realizations");
  c_sim->add_option("--engine", engine, "zf|tdma|lemma");
  c_sim->add_option("--workers", workers, "worker threads (0 = hardware)");
  c_sim->add_flag("--verify-beams", verify_beams, "re-check beams exactly on every trial");
  c_sim->add_option("--out", out_path, "output file (default stdout)");
  c_sim->add_option("--format", format, "csv|json");
  add_seed(c_sim);

  auto* c_sweep = app.add_subcommand("sweep", "full (p,f) grid for the cooperative family");
  c_sweep->add_option("--K", K, "user count");
  c_sweep->add_option("--trials", trials, "realizations per cell");
  c_sweep->add_option("--p-grid", p_grid, "start:stop:step");
  c_sweep->add_option("--f-grid", f_grid, "start:stop:step");
  c_sweep->add_option("--workers", workers, "worker threads (0 = hardware)");
  c_sweep->add_option("--out", out_path, "cells CSV (default stdout)");
  c_sweep->add_option("--summary-out", summary_path, "per-p argmax summary CSV");
  add_seed(c_sweep);

  auto* c_cmp = app.add_subcommand("compare", "cell association vs cooperation per p");
  c_cmp->add_option("--K", K, "user count");
  c_cmp->add_option("--trials", trials, "realizations per cell");
  c_cmp->add_option("--p-grid", p_grid, "start:stop:step");
  c_cmp->add_option("--f-grid", f_grid, "start:stop:step");
  c_cmp->add_option("--workers", workers, "worker threads (0 = hardware)");
  c_cmp->add_option("--out", out_path, "output CSV (default stdout)");
  add_seed(c_cmp);

  auto* c_oracle = app.add_subcommand("oracle-check", "greedy/brute-force/converse agreement");
  c_oracle->add_option("--max-n", max_n, "exhaustive block size bound (<= 5)");
  c_oracle->add_option("--random-count", random_count, "extra randomized instances");
  c_oracle->add_option("--random-max-n", random_max_n, "randomized block size bound (<= 12)");
  add_seed(c_oracle);

  auto* c_part = app.add_subcommand("partition", "dump atomic blocks of one realization");
  c_part->add_option("--strategy", strategy, "strategy JSON, or @file");
  c_part->add_option("--K", K, "user count");
  c_part->add_option("--p", p, "erasure probability");
  c_part->add_option("--out", out_path, "output file (default stdout)");
  add_seed(c_part);

  CLI11_PARSE(app, argc, argv);

  try {
    const uint64_t seed = seed_opt ? *seed_opt : default_seed();
    if (c_formulas->parsed()) return cmd_formulas(out_path, grid_points);
    if (c_sim->parsed())
      return cmd_simulate(strategy, K, p, trials, seed, engine, workers, verify_beams,
                          out_path, format);
    if (c_sweep->parsed())
      return cmd_sweep(K, trials, p_grid, f_grid, seed, workers, out_path, summary_path);
    if (c_cmp->parsed()) return cmd_compare(K, trials, p_grid, f_grid, seed, workers, out_path);
    if (c_oracle->parsed()) return cmd_oracle_check(max_n, random_count, random_max_n, seed);
    if (c_part->parsed()) return cmd_partition(strategy, K, p, seed, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
