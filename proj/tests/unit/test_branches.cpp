#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oracle_values.hpp"
#include "stableorders/branches.hpp"
#include "stableorders/special.hpp"

using namespace stableorders;

TEST_CASE("parameter regions") {
  CHECK_NOTHROW(validate_branch_params({1.5, 0.5}));
  CHECK_THROWS_AS(validate_branch_params({1.5, 0.1}), std::domain_error);
  CHECK_THROWS_AS(validate_branch_params({1.0, 1.0}), std::domain_error);
  CHECK_THROWS_AS(validate_branch_params({2.5, 0.5}), std::domain_error);
  CHECK_THROWS_AS(validate_branch_sampling({0.5, 0.0}), std::domain_error);
  CHECK_THROWS_AS(validate_branch_sampling({1.5, 0.8}), std::domain_error);
  CHECK_NOTHROW(validate_branch_sampling({1.0 / 0.6, 0.6}));
}

TEST_CASE("cauchy branch closed forms") {
  CHECK(cauchy_branch_scale(0.5) == doctest::Approx(kPi / 2));
  CHECK(cauchy_branch_density(0.5, 0.0) == doctest::Approx(4.0 / (kPi * kPi)).epsilon(1e-14));
  for (double r : {0.2, 0.5, 0.8}) {
    CHECK(cauchy_branch_mass(r) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(cauchy_branch_cdf(r, 1e12) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(cauchy_branch_cdf(r, 0.0) == doctest::Approx(0.0));
    CHECK(cauchy_branch_survival(r, 2.0) == doctest::Approx(1.0 - cauchy_branch_cdf(r, 2.0)).epsilon(1e-13));
  }
  for (const auto& row : oracle::kCauchyBranchCdf)
    CHECK(cauchy_branch_cdf(row.a, row.x) == doctest::Approx(row.value).epsilon(1e-12));
  CHECK(branch_one_cdf(0.5, 1.0) == doctest::Approx(cauchy_branch_cdf(0.5, kPi / 2)));
}

TEST_CASE("survival increases with rho") {
  for (double x : {0.1, 1.0, 10.0}) {
    double prev = 0.0;
    for (double r = 0.1; r < 0.95; r += 0.1) {
      const double s = cauchy_branch_survival(r, x);
      CHECK(s >= prev);
      prev = s;
    }
  }
}

TEST_CASE("branch moments: closed form and samples") {
  const BranchParams p{0.8, 0.7};
  CHECK(branch_moment(p, 0.0) == doctest::Approx(1.0));
  CHECK_THROWS(branch_moment(p, 0.9));
  CHECK_THROWS(branch_moment(p, -1.0));
  const std::vector<double> s{-0.3, 0.2, 0.35};
  for (const auto& c : check_branch_moments(p, s, 400000, RngState(3))) CHECK(c.pass);
}

TEST_CASE("samples are positive and reproducible") {
  const BranchParams p{1.2, 0.6};
  const auto a = sample_branch_batch(p, 10000, RngState(4));
  const auto b = sample_branch_batch(p, 10000, RngState(4));
  CHECK(a == b);
  for (double x : a) REQUIRE(x > 0.0);
}

TEST_CASE("Y_alpha density is a mean-one law") {
  CHECK(y_alpha_density(0.5, 1.3) == 0.0);
  const auto h = y_alpha_moments(0.5);
  CHECK(h.atom == 1.0);
  CHECK(h.mean == 1.0);
  for (const auto& row : oracle::kYAlpha) {
    const auto m = y_alpha_moments(row[0]);
    CHECK(m.mass == doctest::Approx(row[1]).epsilon(1e-9));
    CHECK(m.mean == doctest::Approx(row[2]).epsilon(1e-9));
  }
}

TEST_CASE("KS checks pass on the correct laws") {
  CHECK(check_branch_cdf(0.4, 100000, RngState(5)).pass);
  CHECK(check_branch_ml_limit(0.6, 100000, RngState(6)).pass);
  CHECK(check_negative_branch_limit(0.99, 10000, RngState(7)).pass);
}

TEST_CASE("lintel chain and pasting") {
  const std::vector<double> rhos{0.3, 0.5, 0.7};
  CHECK(check_lintel_chain(rhos, 100000, RngState(8)).pass);
  const auto pc = check_pasting({0.8, 0.3}, 200000, RngState(9));
  CHECK(pc.pass);
  CHECK(pc.min_positive_ok);
}
