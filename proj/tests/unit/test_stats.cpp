#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "stableorders/distributions.hpp"
#include "stableorders/stats.hpp"

using namespace stableorders;

TEST_CASE("running stats merge equals a single pass") {
  RunningStats all, left, right;
  for (int i = 1; i <= 1000; ++i) {
    const double x = std::sin(i) * i;
    all.add(x);
    (i <= 300 ? left : right).add(x);
  }
  left.merge(right);
  CHECK(left.count() == all.count());
  CHECK(left.mean() == doctest::Approx(all.mean()).epsilon(1e-12));
  CHECK(left.variance() == doctest::Approx(all.variance()).epsilon(1e-12));
}

TEST_CASE("mean estimate tolerance") {
  const MeanEstimate m{1.0, 0.1, 100};
  CHECK(m.within(1.25));
  CHECK_FALSE(m.within(1.35));
  CHECK(m.within(1.35, 4.0));
  CHECK(m.z_score(0.8) == doctest::Approx(2.0));
}

TEST_CASE("dkw width") {
  CHECK(dkw_epsilon(10000, 1e-3) == doctest::Approx(std::sqrt(std::log(2e3) / 2e4)));
}

TEST_CASE("one-sample KS accepts the right law and rejects a shifted one") {
  const RngState rng(3);
  auto v = draw(50000, rng, [](RngState& r) { return sample_exponential(r); });
  std::sort(v.begin(), v.end());
  const auto good = ks_one_sample(v, [](double x) { return x <= 0 ? 0.0 : -std::expm1(-x); });
  CHECK(good.p_value > 1e-4);
  const auto bad = ks_one_sample(v, [](double x) { return x <= 0 ? 0.0 : -std::expm1(-1.05 * x); });
  CHECK(bad.p_value < 1e-6);
}

TEST_CASE("two-sample KS") {
  auto a = draw(40000, RngState(1), [](RngState& r) { return sample_gamma(2.0, r); });
  auto b = draw(40000, RngState(2), [](RngState& r) { return sample_gamma(2.0, r); });
  auto c = draw(40000, RngState(2), [](RngState& r) { return sample_gamma(2.1, r); });
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::sort(c.begin(), c.end());
  CHECK(ks_two_sample(a, b).p_value > 1e-4);
  CHECK(ks_two_sample(a, c).p_value < 1e-6);
}
