#include "stableorders/mittag_leffler.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "stableorders/special.hpp"

namespace stableorders {

std::string_view regime_name(MLRegime r) {
  switch (r) {
    case MLRegime::Series: return "series";
    case MLRegime::Integral: return "integral";
    case MLRegime::Asymptotic: return "asymptotic";
  }
  return "unknown";
}

namespace {

constexpr long double kEpsLd = std::numeric_limits<long double>::epsilon();
constexpr double kSeriesTarget = 1e-12;

void check_x(double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw std::domain_error("x must be finite and >= 0");
}

}  // namespace

MittagLefflerEvaluator::MittagLefflerEvaluator(Alpha alpha) : alpha_(alpha) {
  const long double a = alpha.value();
  for (int n = 0; n < kTerms + 2; ++n) lgamma_[n] = log_gamma(1.0L + a * n);

  // The certification predicate is monotone in x, so bisect on log x.
  double lo = std::log(1e-8), hi = std::log(1e8);
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    (series_certified(std::exp(mid)) ? lo : hi) = mid;
  }
  x_switch_ = std::exp(lo);
}

bool MittagLefflerEvaluator::series_certified(double x) const {
  const long double lx = std::log(static_cast<long double>(x));
  const long double l200 = kTerms * lx - lgamma_[kTerms];
  const long double l201 = (kTerms + 1) * lx - lgamma_[kTerms + 1];
  if (l200 > std::log(1e-12L) || !(l201 < l200)) return false;
  long double lmax = 0.0L;
  for (int n = 1; n <= kTerms; ++n) lmax = std::max(lmax, n * lx - lgamma_[n]);
  return std::exp(lmax) * kTerms * kEpsLd <= kSeriesTarget;
}

MLEval MittagLefflerEvaluator::series(double x) const {
  check_x(x);
  if (x == 0.0) return {1.0, MLRegime::Series, 0.0};
  const long double lx = std::log(static_cast<long double>(x));
  long double sum = 0.0L, tmax = 0.0L;
  for (int n = 0; n <= kTerms; ++n) {
    const long double t = std::exp(n * lx - lgamma_[n]);
    tmax = std::max(tmax, t);
    sum += (n % 2 == 0) ? t : -t;
  }
  const long double omitted = std::exp((kTerms + 1) * lx - lgamma_[kTerms + 1]);
  const double err = static_cast<double>(omitted + tmax * (kTerms + 1) * kEpsLd);
  return {static_cast<double>(sum), MLRegime::Series, err};
}

MLEval MittagLefflerEvaluator::integral(double x) const {
  check_x(x);
  if (x == 0.0) return {1.0, MLRegime::Integral, 0.0};
  const double a = alpha_.value();
  const double sa = std::sin(kPi * a), ca = std::cos(kPi * a);
  const double c = sa / kPi;
  const double lt = std::log(x) / a;
  const double floor_value = 1.0 / (1.0 + std::tgamma(1.0 - a) * x);

  // Left tail of the integrand behaves like c e^{a(w-lt)}; cut where its mass
  // drops below 1e-18 of the smallest possible value. Right tail is e^{-e^w}.
  const double w_lo = lt + std::log(1e-18 * floor_value * a / c) / a;
  const double w_hi = std::log(70.0);
  const double d = std::min(0.9 * kPi * (1.0 - a) / a, 1.0);
  const double h = 2.0 * kPi * d / 60.0;
  const auto n = static_cast<long>(std::ceil((w_hi - w_lo) / h));

  auto f = [&](double w) {
    const double y = a * (w - lt);
    double k;
    if (y > 0.0) {
      const double e = std::exp(-y);
      k = e / (1.0 + 2.0 * ca * e + e * e);
    } else {
      const double e = std::exp(y);
      k = e / (e * e + 2.0 * ca * e + 1.0);
    }
    return c * k * std::exp(-std::exp(w));
  };

  CompensatedSum all, even;
  for (long k = 0; k <= n; ++k) {
    const double v = f(w_lo + k * h);
    all.add(v);
    if (k % 2 == 0) even.add(v);
  }
  const double s_h = h * all.value();
  const double s_2h = 2.0 * h * even.value();
  const double tails = 1e-18 * floor_value + std::exp(-70.0);
  const double err = std::fabs(s_h - s_2h) + tails + static_cast<double>(n) * 1.2e-16 * s_h;
  return {s_h, MLRegime::Integral, err};
}

MLEval MittagLefflerEvaluator::asymptotic(double x) const {
  check_x(x);
  const double a = alpha_.value();
  const double t1 = reciprocal_gamma(1.0 - a) / x;
  const double t2 = reciprocal_gamma(1.0 - 2.0 * a) / (x * x);
  const double t3 = reciprocal_gamma(1.0 - 3.0 * a) / (x * x * x);
  return {t1 - t2, MLRegime::Asymptotic, std::fabs(t2) + std::fabs(t3)};
}

MLEval MittagLefflerEvaluator::operator()(double x) const {
  check_x(x);
  if (x == 0.0) return {1.0, MLRegime::Series, 0.0};
  MLEval r = x <= x_switch_ ? series(x) : x <= kAsymptoticFrom ? integral(x) : asymptotic(x);
  // E_alpha(-x) < 1 for x > 0 even when the nearest double is 1.
  if (r.value >= 1.0) r.value = std::nextafter(1.0, 0.0);
  return r;
}

MLEval ml_eval(Alpha alpha, double x) {
  check_x(x);
  return MittagLefflerEvaluator(alpha)(x);
}

MLBounds ml_bounds(Alpha alpha, double x) {
  check_x(x);
  const double a = alpha.value();
  return {1.0 / (1.0 + std::tgamma(1.0 - a) * x), 1.0 / (1.0 + x / std::tgamma(1.0 + a))};
}

bool ml_chain_admissible(Alpha beta, Alpha alpha) {
  const double a = alpha.value(), b = beta.value();
  if (b <= 0.5) return a >= std::max(0.5, std::min(2.0 * b, (b + 1.0) / 2.0)) && b < a;
  return b < a;
}

MLChainReport ml_chain_check(Alpha alpha, Alpha beta, std::span<const double> x_grid) {
  if (!ml_chain_admissible(beta, alpha))
    throw std::domain_error(
        "ml_chain_check requires (beta <= 1/2 and alpha >= max(1/2, min(2 beta, (beta+1)/2))) or 1/2 <= beta < alpha < 1");
  const MittagLefflerEvaluator ea(alpha), eb(beta);
  const double a = alpha.value(), b = beta.value();
  const double gpa = std::tgamma(1.0 + a), gpb = std::tgamma(1.0 + b);
  const double gma = std::tgamma(1.0 - a), gmb = std::tgamma(1.0 - b);

  MLChainReport rep{true, -std::numeric_limits<double>::infinity(), 0.0};
  for (double x : x_grid) {
    check_x(x);
    const MLEval a1 = ea(gpa * x), b1 = eb(gpb * x);
    const MLEval b2 = eb(x / gmb), a2 = ea(x / gma);
    const double rat = 1.0 / (1.0 + x);
    struct Link {
      double left, right, slack;
    };
    const Link links[] = {
        {std::exp(-x), a1.value, a1.est_abs_error},
        {a1.value, b1.value, a1.est_abs_error + b1.est_abs_error},
        {b1.value, rat, b1.est_abs_error},
        {rat, b2.value, b2.est_abs_error},
        {b2.value, a2.value, b2.est_abs_error + a2.est_abs_error},
        {a2.value, 1.0, a2.est_abs_error},
    };
    for (const auto& l : links) {
      const double v = l.left - l.right;
      if (v > rep.max_violation) {
        rep.max_violation = v;
        rep.worst_x = x;
      }
      if (v > l.slack + 1e-12) rep.pass = false;
    }
  }
  return rep;
}

}  // namespace stableorders
