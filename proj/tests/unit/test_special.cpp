#include <doctest.h>

#include <cmath>

#include "oracle_values.hpp"
#include "stableorders/special.hpp"
#include "stableorders/stats.hpp"

using namespace stableorders;

TEST_CASE("log gamma and ratios") {
  CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
  CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(kPi)).epsilon(1e-14));
  CHECK(gamma_ratio(6.0, 3.0) == doctest::Approx(60.0).epsilon(1e-13));
}

TEST_CASE("reciprocal gamma vanishes at the poles") {
  CHECK(reciprocal_gamma(0.0) == 0.0);
  CHECK(reciprocal_gamma(-1.0) == 0.0);
  CHECK(reciprocal_gamma(-3.0) == 0.0);
  CHECK(reciprocal_gamma(4.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(reciprocal_gamma(-0.5) == doctest::Approx(-1.0 / (2.0 * std::sqrt(kPi))).epsilon(1e-13));
}

TEST_CASE("log_sinc and sin_pi_unit near their endpoints") {
  CHECK(log_sinc(0.0) == 0.0);
  CHECK(log_sinc(1e-9) == doctest::Approx(-1e-18 / 6.0).epsilon(1e-6));
  CHECK(log_sinc(1.0) == doctest::Approx(std::log(std::sin(1.0))).epsilon(1e-14));
  CHECK(sin_pi_unit(1.0 - 1e-12) == doctest::Approx(kPi * 1e-12).epsilon(1e-6));
  CHECK(sin_pi_unit(0.5) == doctest::Approx(1.0));
}

TEST_CASE("median constants") {
  CHECK(median_half_stable() == doctest::Approx(oracle::kMedianHalfStable).epsilon(1e-14));
  CHECK(median_S_ceiling() == doctest::Approx(oracle::kMedianSCeiling).epsilon(1e-14));
  CHECK(median_S_ceiling() * 4.0 * median_half_stable() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("compensated sum keeps small terms") {
  CompensatedSum s;
  s.add(1.0);
  for (int i = 0; i < 1000; ++i) s.add(1e-16);
  s.add(-1.0);
  CHECK(s.value() == doctest::Approx(1e-13).epsilon(1e-10));
}

TEST_CASE("kolmogorov survival matches reference") {
  for (const auto& row : oracle::kKolmogorov)
    CHECK(kolmogorov_survival(row[0]) == doctest::Approx(row[1]).epsilon(1e-10));
}
