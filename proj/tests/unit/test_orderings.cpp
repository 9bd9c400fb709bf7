#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracle_values.hpp"
#include "stableorders/distributions.hpp"
#include "stableorders/orderings.hpp"

using namespace stableorders;

namespace {
EmpiricalDistribution exp_sample(std::uint64_t seed, double scale, std::size_t n = 100000) {
  return EmpiricalDistribution(draw(n, RngState(seed), [scale](RngState& r) { return scale * sample_exponential(r); }),
                               seed);
}
}  // namespace

TEST_CASE("empirical distribution queries") {
  const EmpiricalDistribution e({3.0, 1.0, 2.0, 4.0});
  CHECK(e.cdf(2.0) == 0.5);
  CHECK(e.survival(2.0) == 0.75);
  CHECK(e.quantile(0.0) == 1.0);
  CHECK(e.quantile(1.0) == 4.0);
  CHECK(e.mean() == 2.5);
  CHECK(e.stop_loss(2.0) == doctest::Approx((1.0 + 2.0) / 4.0));
  CHECK(e.stop_loss(0.0) == doctest::Approx(2.5));
  CHECK(e.scaled(2.0).mean() == 5.0);
}

TEST_CASE("orders are reflexive") {
  const auto a = exp_sample(1, 1.0);
  CHECK(check_st(a, a).verdict == Verdict::Pass);
  CHECK(check_cx(a, a).verdict == Verdict::Pass);
}

TEST_CASE("too small a sample is inconclusive") {
  const auto a = exp_sample(1, 1.0, 500);
  CHECK(check_st(a, a).verdict == Verdict::Inconclusive);
}

TEST_CASE("st detects a scale change in the right direction") {
  const auto small = exp_sample(1, 1.0), big = exp_sample(2, 1.2);
  CHECK(check_st(small, big).verdict == Verdict::Pass);
  CHECK(check_st(big, small).verdict == Verdict::Fail);
}

TEST_CASE("cx: exponential below a mean-one gamma(1/2)") {
  const auto e = exp_sample(3, 1.0);
  const EmpiricalDistribution g(draw(100000, RngState(4), [](RngState& r) { return 2.0 * sample_gamma(0.5, r); }));
  CHECK(check_cx(e, g).verdict == Verdict::Pass);
  CHECK(check_cx(g, e).verdict == Verdict::Fail);
}

TEST_CASE("cx fails when means differ") {
  CHECK(check_cx(exp_sample(5, 1.0), exp_sample(6, 1.5)).verdict == Verdict::Fail);
}

TEST_CASE("proven chains pass") {
  const RngState rng(77);
  const std::vector<double> alphas{0.3, 0.6};
  CHECK(check_theorem_A_st(alphas, 100000, rng).pass);
  CHECK(check_theorem_A_cx(alphas, 100000, rng).pass);
  const std::vector<double> bs{0.6, 0.8};
  CHECK(check_theorem_B(bs, 100000, rng).pass);
  CHECK(check_theorem_C(Alpha(0.4), 100000, rng).pass);
  CHECK(check_frechet_corollary(Alpha(0.5), 100000, rng).pass);
}

TEST_CASE("reversed chain is rejected") {
  const auto r = check_theorem_C(Alpha(0.4), 100000, RngState(78), true);
  CHECK_FALSE(r.pass);
  for (const auto& s : r.steps) CHECK(s.verdict == Verdict::Fail);
}

TEST_CASE("checks do not advance the caller's state") {
  const RngState rng(9);
  const std::vector<double> alphas{0.4, 0.6};
  const auto a = check_theorem_A_st(alphas, 20000, rng).to_json();
  const auto b = check_theorem_A_st(alphas, 20000, rng).to_json();
  CHECK(a == b);
  CHECK(rng.blocks_consumed() == 0);
}

TEST_CASE("kanter certificates") {
  const auto c = kanter_ratio_certificates(Alpha(0.2), Alpha(0.4), 2048);
  REQUIRE(c.size() == 4);
  for (const auto& cert : c) {
    INFO(kanter_claim_name(cert.claim) << ": " << cert.detail);
    CHECK(cert.pass);
    if (cert.claim == KanterClaim::CxK)
      CHECK(cert.expected_limit_at_0 == doctest::Approx(oracle::kCxKLimitAtZero_02_04).epsilon(1e-12));
  }
  CHECK(kanter_ratio_certificates(Alpha(0.6), Alpha(0.8), 2048).size() == 2);
  CHECK_THROWS(kanter_ratio_certificates(Alpha(0.8), Alpha(0.6), 2048));
}

TEST_CASE("crossing count") {
  const std::vector<double> a{1, 2, 3, 4}, b{2, 2.5, 2.5, 2}, c{0, 1, 2, 3};
  CHECK(single_crossing_count(a, b) == 1);
  CHECK(single_crossing_count(a, c) == 0);
}

TEST_CASE("scaled kanter cdf is a cdf") {
  const Alpha a(0.3);
  const double top = kanter_sup(a);
  CHECK(scaled_kanter_cdf(a, 1.0, 0.0) == 0.0);
  CHECK(scaled_kanter_cdf(a, 1.0, top * 1.0001) == 1.0);
  CHECK(scaled_kanter_cdf(a, 1.0, 0.5) < scaled_kanter_cdf(a, 1.0, 1.0));
  CHECK(scaled_kanter_cdf(a, 1.0, 1.0) < 1.0);
  CHECK(scaled_kanter_cdf(a, 2.0, 2.0 * 1.2) == doctest::Approx(scaled_kanter_cdf(a, 1.0, 1.2)));
}
