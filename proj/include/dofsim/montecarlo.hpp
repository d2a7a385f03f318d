#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dofsim/strategy.hpp"

namespace dofsim {

enum class Engine { Zf, Tdma, LemmaScheme };

Engine parse_engine(const std::string& name);  // "zf" | "tdma" | "lemma"

struct DofEstimate {
  double mean = 0.0;
  double stderr_mean = 0.0;
  long long trials = 0;
  int K = 0;
  double p = 0.0;
  std::string strategy;
  uint64_t seed = 0;
};

// Average per-user DoF of a strategy under erasure probability p, over
// independent block realizations with the last transmitter deactivated.
// Per-trial seeds derive from (seed, trial index), so the result does not
// depend on the worker count. With verify_beams set, every trial also
// constructs the zero-forcing beams over sampled channel values and checks
// the interference-free property exactly.
DofEstimate estimate(const StrategySpec& spec, int K, double p, long long trials,
                     uint64_t seed, Engine engine, int workers = 0, bool verify_beams = false);

// The simulated cooperative family: the fraction-f assignment, except that
// the 3/5 slot carries the mod-5 assignment (same forward fraction, stronger
// at low erasure).
MessageAssignment sweep_family_assignment(Fraction f, int K);
std::string sweep_family_label(Fraction f);

struct SweepCell {
  double p = 0.0;
  Fraction f{0, 1};
  DofEstimate est;
};

struct SweepSummaryRow {
  double p = 0.0;
  Fraction best_f{0, 1};
  double best_mean = 0.0;
  double best_stderr = 0.0;
  Fraction tie_low{0, 1};   // smallest f statistically tied with the best
  Fraction tie_high{0, 1};  // largest f statistically tied with the best
};

struct SweepResult {
  std::vector<SweepCell> cells;       // p-major, then f
  std::vector<SweepSummaryRow> best;  // one row per p
};

// Full (p, f) grid of zero-forcing estimates for the cooperative family.
// All f cells at one p share realizations, which stabilizes the argmax.
SweepResult sweep_fraction(int K, long long trials, const std::vector<double>& p_grid,
                           const std::vector<Fraction>& f_grid, uint64_t seed,
                           int workers = 0);

struct CompareRow {
  double p = 0.0;
  double tau_m1_formula = 0.0;
  DofEstimate best_m1;  // over the three cell-association strategies
  DofEstimate best_m2;  // over the cooperative family
};

// Per grid point: closed-form cell-association value, best simulated
// cell-association estimate, best simulated cooperative estimate.
std::vector<CompareRow> compare_m1_m2(int K, long long trials,
                                      const std::vector<double>& p_grid,
                                      const std::vector<Fraction>& f_grid, uint64_t seed,
                                      int workers = 0);

// CSV with header "p,f,K,trials,mean,stderr,seed" (f is "-" for estimates
// that are not family cells).
std::string estimate_csv_row(const DofEstimate& e, const std::string& f_label);
std::string sweep_csv(const SweepResult& res);
std::string sweep_summary_csv(const SweepResult& res);
std::string compare_csv(const std::vector<CompareRow>& rows, int K, long long trials);

void parallel_for(long long n, int workers, const std::function<void(long long)>& fn);

}  // namespace dofsim
