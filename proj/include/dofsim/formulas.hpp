#pragma once

#include <functional>
#include <string>
#include <vector>

namespace dofsim {

// Closed-form average per-user DoF curves, all on p in [0,1].

// Identity cell association (every message at its own transmitter). The
// block-parity bonus series has the geometric closed form
// (1/2)(1-(1-p)^2)^2 (1-p)^5 / (1-(1-p)^4), with the removable point p=0
// handled explicitly.
double tau1(double p);

// Cell association from the pattern (2,1,0).
double tau2(double p);

// Cell association from the pattern (1,2,1,0).
double tau3(double p);

// Best cell-association value: max of the three curves above.
double tau_m1(double p);

// Cooperative zero-forcing bound of the mod-5 assignment ("theorem4").
double zf4(double p);

// Cooperative zero-forcing bound of the adjacent-pair assignment
// ("theorem5").
double zf5(double p);

// Bisection root of f - g inside [lo, hi] to 1e-6. Throws
// std::invalid_argument when the bracket shows no sign change.
double crossing_point(const std::function<double(double)>& f,
                      const std::function<double(double)>& g, double lo, double hi);

// CSV for the standard grid: p,tau1,tau2,tau3,tau_m1,zf4,zf5 plus the five
// curves normalized by (1-p) (0 at p=1).
std::string formulas_csv(int grid_points);

}  // namespace dofsim
