#include "dofsim/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dofsim {

double tau1(double p) {
  if (p <= 0.0) return 0.5;
  const double u = 1.0 - p;
  const double q = 1.0 - u * u;
  const double q2 = q * q;
  const double series = 0.5 * q2 * std::pow(u, 5) / (1.0 - std::pow(u, 4));
  return 0.5 * (u + u * q2) + series;
}

double tau2(double p) {
  const double u = 1.0 - p;
  return (2.0 / 3.0) * u + (1.0 / 3.0) * p * u * (1.0 - u * u);
}

double tau3(double p) {
  const double u = 1.0 - p;
  return 0.5 * u + 0.25 * u * (1.0 - u * u) * (1.0 + p + u * u * u);
}

double tau_m1(double p) { return std::max({tau1(p), tau2(p), tau3(p)}); }

double zf4(double p) {
  const double u = 1.0 - p;
  const double c = 1.0 - u * u + p * u * u * u;
  const double a = 2.0 * p + c * (1.0 + u * u);
  return 0.2 * u * (4.0 + a * p);
}

double zf5(double p) {
  const double u = 1.0 - p;
  const double u3 = u * u * u;
  const double c = 1.0 - u * u + p * u3;
  const double b = 3.0 + (1.0 + u3) * c + p * (1.0 + u * u);
  return (1.0 / 3.0) * u * (1.0 + u3 + b * p);
}

double crossing_point(const std::function<double(double)>& f,
                      const std::function<double(double)>& g, double lo, double hi) {
  double flo = f(lo) - g(lo);
  const double fhi = f(hi) - g(hi);
  if (!(flo * fhi < 0.0))
    throw std::invalid_argument("crossing_point: no sign change on the bracket");
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid) - g(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::string formulas_csv(int grid_points) {
  std::ostringstream os;
  os.precision(12);
  os << "p,tau1,tau2,tau3,tau_m1,zf4,zf5,tau1_norm,tau2_norm,tau3_norm,zf4_norm,zf5_norm\n";
  for (int k = 0; k < grid_points; ++k) {
    const double p = grid_points == 1 ? 0.0 : static_cast<double>(k) / (grid_points - 1);
    const double u = 1.0 - p;
    auto norm = [&](double v) { return u > 0.0 ? v / u : 0.0; };
    const double t1 = tau1(p), t2 = tau2(p), t3 = tau3(p);
    const double z4 = zf4(p), z5 = zf5(p);
    os << p << ',' << t1 << ',' << t2 << ',' << t3 << ',' << tau_m1(p) << ',' << z4 << ','
       << z5 << ',' << norm(t1) << ',' << norm(t2) << ',' << norm(t3) << ',' << norm(z4)
       << ',' << norm(z5) << "\n";
  }
  return os.str();
}

}  // namespace dofsim
