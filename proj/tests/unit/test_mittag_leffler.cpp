#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oracle_values.hpp"
#include "stableorders/mittag_leffler.hpp"
#include "stableorders/special.hpp"

using namespace stableorders;

TEST_CASE("E_a(-x) against high-precision reference") {
  for (const auto& row : oracle::kMittagLeffler) {
    const auto e = ml_eval(Alpha(row.a), row.x);
    INFO("a=" << row.a << " x=" << row.x << " regime=" << regime_name(e.regime));
    CHECK(std::abs(e.value - row.value) <= 1e-10 * std::max(1.0, std::abs(row.value)) + 1e-14);
    CHECK(std::abs(e.value - row.value) <= std::max(e.est_abs_error, 1e-15) * 10.0);
  }
}

TEST_CASE("E_1/2(-1) = e erfc(1)") {
  CHECK(ml_eval(Alpha(0.5), 1.0).value == doctest::Approx(oracle::kE_half_minus_one).epsilon(1e-10));
  CHECK(std::abs(ml_eval(Alpha(0.5), 1.0).value - std::exp(1.0) * std::erfc(1.0)) < 1e-10);
}

TEST_CASE("regime selection and agreement across the switch") {
  for (double a : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
    const MittagLefflerEvaluator ev{Alpha(a)};
    CHECK(ev(0.0).value == 1.0);
    CHECK(ev(ev.x_switch() * 0.5).regime == MLRegime::Series);
    CHECK(ev(ev.x_switch() * 2.0).regime == MLRegime::Integral);
    CHECK(ev(1e9).regime == MLRegime::Asymptotic);
    for (double f : {0.5, 0.99}) {
      const double x = f * ev.x_switch();
      CHECK(std::abs(ev.series(x).value - ev.integral(x).value) <= 1e-8);
    }
    const double big = 1e8;
    CHECK(std::abs(ev.integral(big).value - ev.asymptotic(big).value) <= 1e-12 * ev.integral(big).value + 1e-20);
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(ml_eval(Alpha(0.5), -1.0), std::domain_error);
  CHECK_THROWS_AS(ml_eval(Alpha(0.5), INFINITY), std::domain_error);
  CHECK_THROWS_AS(ml_eval(Alpha(0.5), NAN), std::domain_error);
}

TEST_CASE("two-sided bounds hold on a log grid") {
  for (double a : {0.05, 0.2, 0.5, 0.8, 0.95})
    for (double lx = -3; lx <= 6; lx += 0.25) {
      const double x = std::pow(10.0, lx);
      const auto b = ml_bounds(Alpha(a), x);
      const double v = ml_eval(Alpha(a), x).value;
      INFO("a=" << a << " x=" << x);
      CHECK(b.lower <= v * (1 + 1e-12));
      CHECK(v <= b.upper * (1 + 1e-12));
    }
}

TEST_CASE("chain admissibility and check") {
  CHECK(ml_chain_admissible(Alpha(0.6), Alpha(0.8)));
  CHECK(ml_chain_admissible(Alpha(0.3), Alpha(0.65)));
  CHECK_FALSE(ml_chain_admissible(Alpha(0.3), Alpha(0.55)));
  CHECK_FALSE(ml_chain_admissible(Alpha(0.8), Alpha(0.6)));
  std::vector<double> grid;
  for (double lx = -2; lx <= 4; lx += 0.5) grid.push_back(std::pow(10.0, lx));
  CHECK(ml_chain_check(Alpha(0.8), Alpha(0.6), grid).pass);
  CHECK_THROWS_AS(ml_chain_check(Alpha(0.55), Alpha(0.3), grid), std::domain_error);
}
