#include "dofsim/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "dofsim/formulas.hpp"
#include "dofsim/oracles.hpp"
#include "dofsim/zf_scheduler.hpp"

namespace dofsim {

Engine parse_engine(const std::string& name) {
  if (name == "zf") return Engine::Zf;
  if (name == "tdma") return Engine::Tdma;
  if (name == "lemma") return Engine::LemmaScheme;
  throw std::invalid_argument("engine must be zf|tdma|lemma");
}

void parallel_for(long long n, int workers, const std::function<void(long long)>& fn) {
  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (workers == 1 || n < 2) {
    for (long long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<long long> next{0};
  std::vector<std::thread> pool;
  std::mutex err_mutex;
  std::string first_error;
  auto body = [&]() {
    try {
      for (;;) {
        const long long i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    } catch (const std::exception& e) {
      std::lock_guard<std::mutex> lk(err_mutex);
      if (first_error.empty()) first_error = e.what();
      next.store(n);
    }
  };
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (!first_error.empty()) throw std::runtime_error(first_error);
}

namespace {

int lemma_which(const StrategySpec& spec) {
  if (spec.kind != StrategySpec::Kind::Ternary)
    throw std::invalid_argument("lemma engine needs a ternary strategy");
  const auto& s = spec.ternary.s;
  if (s == std::vector<int>{1}) return 1;
  if (s == std::vector<int>{2, 1, 0}) return 2;
  if (s == std::vector<int>{1, 2, 1, 0}) return 3;
  throw std::invalid_argument("lemma engine supports (1), (2,1,0) and (1,2,1,0)");
}

// Zero-forcing pass with the exact interference-free re-check on sampled
// channel values.
int zf_dof_checked(const NetworkRealization& r, const MessageAssignment& a, ZfWorkspace& ws,
                   uint64_t coef_seed) {
  topology_reduce(a, r, ws.red);
  partition_atomic(r, ws.red, ws.parts);
  const ChannelCoefficients coef = sample_coefficients(r, coef_seed);
  int total = 0;
  for (const auto& sub : ws.parts.subnets) {
    const SubnetView view = make_view(sub, ws.red);
    schedule_atomic(view, ws.sched);
    total += ws.sched.delivered_count();
    const auto local = SubnetCoefficients::from_global(view, coef);
    const BeamPlan plan = build_beams(ws.sched, view, local);
    std::string why;
    if (!beams_interference_free(plan, ws.sched, view, local, &why))
      throw std::runtime_error("beam verification failed: " + why);
  }
  return total;
}

DofEstimate reduce_counts(const std::vector<int>& counts, int K) {
  DofEstimate est;
  est.trials = static_cast<long long>(counts.size());
  long double sum = 0.0L, sum2 = 0.0L;
  for (int c : counts) {
    const long double x = static_cast<long double>(c) / K;
    sum += x;
    sum2 += x * x;
  }
  const long double n = static_cast<long double>(counts.size());
  const long double mean = sum / n;
  est.mean = static_cast<double>(mean);
  if (counts.size() > 1) {
    long double var = (sum2 - n * mean * mean) / (n - 1);
    if (var < 0.0L) var = 0.0L;
    est.stderr_mean = static_cast<double>(std::sqrt(static_cast<double>(var / n)));
  }
  return est;
}

}  // namespace

DofEstimate estimate(const StrategySpec& spec, int K, double p, long long trials,
                     uint64_t seed, Engine engine, int workers, bool verify_beams) {
  if (K < 1) throw std::invalid_argument("K must be positive");
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0,1]");

  const MessageAssignment a = build_assignment(spec, K);
  const int M = a.cooperation_order();
  int which = 0;
  if (engine == Engine::Tdma && M != 1)
    throw std::invalid_argument("tdma engine needs cooperation order 1");
  if (engine == Engine::Zf && M > 2)
    throw std::invalid_argument("zf engine needs cooperation order at most 2");
  if (engine == Engine::LemmaScheme) which = lemma_which(spec);

  const NetworkTopology topo{K, /*last_tx_deactivated=*/true};
  std::vector<int> counts(trials, 0);
  parallel_for(trials, workers, [&](long long t) {
    thread_local ZfWorkspace ws;
    const uint64_t st = derive_seed(seed, static_cast<uint64_t>(t));
    const NetworkRealization r = sample_realization(topo, p, st);
    int delivered = 0;
    switch (engine) {
      case Engine::Zf:
        delivered = verify_beams ? zf_dof_checked(r, a, ws, derive_seed(st, 0xbea3ULL))
                                 : zf_dof(r, a, ws);
        break;
      case Engine::Tdma:
        delivered = tdma_optimal(r, a);
        break;
      case Engine::LemmaScheme:
        delivered = lemma_scheme_dof(r, a, which);
        break;
    }
    counts[t] = delivered;
  });

  DofEstimate est = reduce_counts(counts, K);
  est.K = K;
  est.p = p;
  est.strategy = spec.label();
  est.seed = seed;
  return est;
}

MessageAssignment sweep_family_assignment(Fraction f, int K) {
  // The 3/5 slot of the family is the mod-5 assignment: same forward
  // fraction, stronger at low erasure, and the family's own best there.
  if (f.num * 5 == f.den * 3) return theorem4_assignment(K);
  return fraction_assignment(f, K);
}

std::string sweep_family_label(Fraction f) {
  if (f.num * 5 == f.den * 3) return "theorem4";
  std::ostringstream os;
  os << "fraction(" << f.num << "/" << f.den << ")";
  return os.str();
}

SweepResult sweep_fraction(int K, long long trials, const std::vector<double>& p_grid,
                           const std::vector<Fraction>& f_grid, uint64_t seed, int workers) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  SweepResult res;
  const size_t nf = f_grid.size();
  std::vector<MessageAssignment> assignments;
  assignments.reserve(nf);
  for (const auto& f : f_grid) assignments.push_back(sweep_family_assignment(f, K));

  const NetworkTopology topo{K, /*last_tx_deactivated=*/true};
  for (size_t ip = 0; ip < p_grid.size(); ++ip) {
    const double p = p_grid[ip];
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0,1]");
    // All f cells at this p share realizations (common random numbers).
    const uint64_t p_seed = derive_seed(seed, 0x70000000ULL + ip);
    std::vector<std::vector<int>> counts(nf, std::vector<int>(trials, 0));
    parallel_for(trials, workers, [&](long long t) {
      thread_local ZfWorkspace ws;
      const NetworkRealization r =
          sample_realization(topo, p, derive_seed(p_seed, static_cast<uint64_t>(t)));
      for (size_t k = 0; k < nf; ++k) counts[k][t] = zf_dof(r, assignments[k], ws);
    });

    size_t best_k = 0;
    std::vector<DofEstimate> ests(nf);
    for (size_t k = 0; k < nf; ++k) {
      ests[k] = reduce_counts(counts[k], K);
      ests[k].K = K;
      ests[k].p = p;
      ests[k].seed = seed;
      ests[k].strategy = sweep_family_label(f_grid[k]);
      if (ests[k].mean > ests[best_k].mean) best_k = k;
      SweepCell cell;
      cell.p = p;
      cell.f = f_grid[k];
      cell.est = ests[k];
      res.cells.push_back(cell);
    }

    SweepSummaryRow row;
    row.p = p;
    row.best_f = f_grid[best_k];
    row.best_mean = ests[best_k].mean;
    row.best_stderr = ests[best_k].stderr_mean;
    row.tie_low = row.tie_high = f_grid[best_k];
    for (size_t k = 0; k < nf; ++k) {
      const double tol = 3.0 * std::sqrt(ests[k].stderr_mean * ests[k].stderr_mean +
                                         ests[best_k].stderr_mean * ests[best_k].stderr_mean);
      if (ests[k].mean >= ests[best_k].mean - tol) {
        if (f_grid[k].value() < row.tie_low.value()) row.tie_low = f_grid[k];
        if (f_grid[k].value() > row.tie_high.value()) row.tie_high = f_grid[k];
      }
    }
    res.best.push_back(row);
  }
  return res;
}

std::vector<CompareRow> compare_m1_m2(int K, long long trials,
                                      const std::vector<double>& p_grid,
                                      const std::vector<Fraction>& f_grid, uint64_t seed,
                                      int workers) {
  std::vector<StrategySpec> m1(3);
  m1[0].kind = StrategySpec::Kind::Ternary;
  m1[0].ternary.s = {1};
  m1[1].kind = StrategySpec::Kind::Ternary;
  m1[1].ternary.s = {2, 1, 0};
  m1[2].kind = StrategySpec::Kind::Ternary;
  m1[2].ternary.s = {1, 2, 1, 0};

  const SweepResult sweep = sweep_fraction(K, trials, p_grid, f_grid, seed, workers);
  std::vector<CompareRow> rows;
  for (size_t ip = 0; ip < p_grid.size(); ++ip) {
    CompareRow row;
    row.p = p_grid[ip];
    row.tau_m1_formula = tau_m1(row.p);
    for (int s = 0; s < 3; ++s) {
      DofEstimate e = estimate(m1[s], K, row.p, trials, derive_seed(seed, 0x3100 + s),
                               Engine::Tdma, workers);
      if (s == 0 || e.mean > row.best_m1.mean) row.best_m1 = e;
    }
    const auto& brow = sweep.best[ip];
    for (const auto& cell : sweep.cells) {
      if (cell.p == row.p && cell.f.num == brow.best_f.num && cell.f.den == brow.best_f.den) {
        row.best_m2 = cell.est;
        break;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

std::string estimate_csv_row(const DofEstimate& e, const std::string& f_label) {
  std::ostringstream os;
  os.precision(10);
  os << e.p << ',' << f_label << ',' << e.K << ',' << e.trials << ',' << e.mean << ','
     << e.stderr_mean << ',' << e.seed << "\n";
  return os.str();
}

std::string sweep_csv(const SweepResult& res) {
  std::string out = "p,f,K,trials,mean,stderr,seed\n";
  for (const auto& cell : res.cells) {
    std::ostringstream f;
    f << cell.f.num << '/' << cell.f.den;
    out += estimate_csv_row(cell.est, f.str());
  }
  return out;
}

std::string sweep_summary_csv(const SweepResult& res) {
  std::ostringstream os;
  os.precision(10);
  os << "p,best_f,best_mean,best_stderr,tie_low,tie_high\n";
  for (const auto& row : res.best) {
    os << row.p << ',' << row.best_f.num << '/' << row.best_f.den << ',' << row.best_mean
       << ',' << row.best_stderr << ',' << row.tie_low.num << '/' << row.tie_low.den << ','
       << row.tie_high.num << '/' << row.tie_high.den << "\n";
  }
  return os.str();
}

std::string compare_csv(const std::vector<CompareRow>& rows, int K, long long trials) {
  std::ostringstream os;
  os.precision(10);
  os << "p,K,trials,tau_m1,best_m1_strategy,best_m1_mean,best_m1_stderr,"
        "best_m2_strategy,best_m2_mean,best_m2_stderr\n";
  for (const auto& r : rows) {
    os << r.p << ',' << K << ',' << trials << ',' << r.tau_m1_formula << ','
       << r.best_m1.strategy << ',' << r.best_m1.mean << ',' << r.best_m1.stderr_mean << ','
       << r.best_m2.strategy << ',' << r.best_m2.mean << ',' << r.best_m2.stderr_mean << "\n";
  }
  return os.str();
}

}  // namespace dofsim
