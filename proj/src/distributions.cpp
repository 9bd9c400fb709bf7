#include "stableorders/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "stableorders/special.hpp"

namespace stableorders {

Alpha::Alpha(double value) : value_(value) {
  if (!(value > 0.0 && value < 1.0)) throw std::domain_error("alpha must lie in the open interval (0,1)");
}

double sample_normal(RngState& rng) {
  // Box-Muller, one of the pair discarded so the stream position stays simple.
  const double u1 = rng.uniform_open();
  const double u2 = rng.uniform_open();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

namespace {

// Marsaglia-Tsang squeeze for shape >= 1, returning log of the variate.
double log_gamma_mt(double shape, RngState& rng) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = sample_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform_open();
    if (u < 1.0 - 0.0331 * x * x * x * x) return std::log(d * v);
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return std::log(d * v);
  }
}

}  // namespace

double sample_log_gamma_variate(double shape, RngState& rng) {
  if (!(shape > 0.0) || !std::isfinite(shape)) throw std::domain_error("gamma shape must be positive");
  if (shape >= 1.0) return log_gamma_mt(shape, rng);
  const double boosted = log_gamma_mt(shape + 1.0, rng);
  return boosted + std::log(rng.uniform_open()) / shape;
}

double sample_gamma(double shape, RngState& rng) { return std::exp(sample_log_gamma_variate(shape, rng)); }

double sample_log_beta_variate(double a, double b, RngState& rng) {
  if (!(a > 0.0 && b > 0.0)) throw std::domain_error("beta parameters must be positive");
  const double la = sample_log_gamma_variate(a, rng);
  const double lb = sample_log_gamma_variate(b, rng);
  // log(Ga / (Ga + Gb)) = -log(1 + exp(lb - la))
  const double d = lb - la;
  return d > 0.0 ? -d - std::log1p(std::exp(-d)) : -std::log1p(std::exp(d));
}

double sample_beta(double a, double b, RngState& rng) { return std::exp(sample_log_beta_variate(a, b, rng)); }

double sample_exponential(RngState& rng) { return -std::log(rng.uniform_open()); }

double sample_frechet(double gamma, RngState& rng) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw std::domain_error("frechet exponent gamma must be positive");
  return std::pow(sample_exponential(rng), -gamma);
}

namespace {

double log_kanter_sup(double a) { return -a * std::log(a) - (1.0 - a) * std::log1p(-a); }

}  // namespace

double kanter_sup(Alpha alpha) { return std::exp(log_kanter_sup(alpha.value())); }

double log_kanter_b(Alpha alpha, double u) {
  if (!(u > 0.0 && u < 1.0)) throw std::domain_error("kanter_b requires u in the open interval (0,1)");
  const double a = alpha.value();
  // sinc(pi u) loses its argument range past 1/2; reflect through sin(pi (1-u)).
  const double t1 = u <= 0.5 ? log_sinc(kPi * u) : std::log(sin_pi_unit(u) / (kPi * u));
  CompensatedSum bracket;
  bracket.add(t1);
  bracket.add(-a * log_sinc(kPi * a * u));
  bracket.add(-(1.0 - a) * log_sinc(kPi * (1.0 - a) * u));
  return log_kanter_sup(a) + std::min(0.0, bracket.value());
}

double kanter_b(Alpha alpha, double u) { return std::exp(log_kanter_b(alpha, u)); }

double sample_kanter(Alpha alpha, RngState& rng) { return kanter_b(alpha, rng.uniform_open()); }

double sample_log_mittag_leffler(Alpha alpha, RngState& rng) {
  const double lb = log_kanter_b(alpha, rng.uniform_open());
  const double l = sample_exponential(rng);
  return (1.0 - alpha.value()) * std::log(l) + lb;
}

double sample_mittag_leffler(Alpha alpha, RngState& rng) { return std::exp(sample_log_mittag_leffler(alpha, rng)); }

double sample_log_positive_stable(Alpha alpha, RngState& rng) {
  return -sample_log_mittag_leffler(alpha, rng) / alpha.value();
}

double sample_positive_stable(Alpha alpha, RngState& rng) { return std::exp(sample_log_positive_stable(alpha, rng)); }

double sample_log_stable_X(RngState& rng) {
  // CMS at alpha = 1, beta = -1 collapses to
  //   S = L * sinc(pi U) * exp(pi U cot(pi U) - 1).
  const double u = rng.uniform_open();
  const double l = sample_exponential(rng);
  const double s = sin_pi_unit(u);
  const double lsinc = u <= 0.5 ? log_sinc(kPi * u) : std::log(s / (kPi * u));
  const double pu_cot = u < 1e-8 ? 1.0 : kPi * u * std::cos(kPi * u) / s;
  return std::log(l) + lsinc + pu_cot - 1.0;
}

double sample_log_stable_S(RngState& rng) { return std::exp(sample_log_stable_X(rng)); }

double moment_Z_negative(Alpha alpha, double s) {
  const double a = alpha.value();
  if (!(s > -a)) throw std::domain_error("moment_Z_negative requires s > -alpha");
  return std::exp(log_gamma(1.0 + s / a) - log_gamma(1.0 + s));
}

}  // namespace stableorders
