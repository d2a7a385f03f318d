#include <stdexcept>
#include <cmath>

#include "doctest.h"
#include "dofsim/formulas.hpp"

using namespace dofsim;

TEST_CASE("anchor values") {
  CHECK(tau1(0.0) == 0.5);
  CHECK(tau2(0.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(tau3(0.0) == 0.5);
  CHECK(tau_m1(0.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(zf4(0.0) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(zf5(0.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  for (auto f : {tau1, tau2, tau3, tau_m1, zf4, zf5}) CHECK(f(1.0) == 0.0);
}

TEST_CASE("closed form of the block-parity series matches direct summation") {
  for (double p : {0.05, 0.1, 0.25, 0.5, 0.75, 0.9}) {
    const double u = 1.0 - p;
    const double q2 = (1.0 - u * u) * (1.0 - u * u);
    double series = 0.0;
    for (int i = 1;; ++i) {
      const double term = 0.5 * q2 * std::pow(u, 4 * i + 1);
      series += term;
      if (term < 1e-15) break;
    }
    const double direct = 0.5 * (u + u * q2) + series;
    CHECK(tau1(p) == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("polynomial curves match their term-by-term expansions") {
  const double p2 = 0.3, u2 = 0.7;
  CHECK(tau2(p2) ==
        doctest::Approx((2.0 / 3.0) * u2 + (1.0 / 3.0) * p2 * u2 * (1 - 0.49)).epsilon(1e-15));
  const double p3 = 0.4, u3 = 0.6;
  const double expect3 =
      0.5 * u3 + 0.25 * u3 * (1 - u3 * u3) * (1 + p3 + u3 * u3 * u3);
  CHECK(tau3(p3) == doctest::Approx(expect3).epsilon(1e-15));
}

TEST_CASE("best cell-association curve dominates pointwise") {
  for (int k = 0; k <= 1000; ++k) {
    const double p = k / 1000.0;
    const double m = tau_m1(p);
    CHECK(m >= tau1(p));
    CHECK(m >= tau2(p));
    CHECK(m >= tau3(p));
    CHECK(m <= 1.0);
    CHECK(m >= 0.0);
  }
}

TEST_CASE("three strategy regimes appear over the grid") {
  CHECK(tau2(0.05) > tau1(0.05));
  CHECK(tau2(0.05) > tau3(0.05));
  CHECK(tau1(0.9) > tau2(0.9));
  CHECK(tau1(0.9) > tau3(0.9));
  bool middle = false;
  for (int k = 1; k < 1000; ++k) {
    const double p = k / 1000.0;
    if (tau3(p) > tau1(p) && tau3(p) > tau2(p)) middle = true;
  }
  CHECK(middle);
}

TEST_CASE("normalized limits near certain erasure") {
  CHECK(zf4(0.9999) / (1 - 0.9999) == doctest::Approx(1.4).epsilon(1e-3));
  CHECK(zf5(0.9999) / (1 - 0.9999) == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("crossing point search") {
  SUBCASE("the two cell-association curves cross") {
    const double p = crossing_point(tau2, tau1, 0.01, 0.99);
    CHECK(p > 0.0);
    CHECK(p < 1.0);
    CHECK(std::abs(tau2(p) - tau1(p)) < 1e-5);
  }
  SUBCASE("cooperative bounds cross near 0.325") {
    const double p = crossing_point(zf4, zf5, 0.01, 0.99);
    CHECK(p == doctest::Approx(0.32477).epsilon(1e-3));
  }
  SUBCASE("identical curves have no crossing") {
    CHECK_THROWS_AS(crossing_point(tau2, tau2, 0.01, 0.99), std::invalid_argument);
  }
}

TEST_CASE("formula CSV shape") {
  const std::string csv = formulas_csv(11);
  int rows = 0, header_cols = 1;
  for (char ch : csv)
    if (ch == '\n') ++rows;
  for (size_t k = 0; csv[k] != '\n'; ++k)
    if (csv[k] == ',') ++header_cols;
  CHECK(rows == 12);  // header + 11 grid rows
  CHECK(header_cols == 12);
}
