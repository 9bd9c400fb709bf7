#include "stableorders/special.hpp"

#include <cmath>

#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace stableorders {

double log_gamma(double x) { return boost::math::lgamma(x); }

long double log_gamma(long double x) { return boost::math::lgamma(x); }

double gamma_ratio(double a, double b) { return std::exp(log_gamma(a) - log_gamma(b)); }

double reciprocal_gamma(double x) {
  if (x > 0.0) return std::exp(-log_gamma(x));
  if (x == std::floor(x)) return 0.0;
  // Reflection: 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi.
  return std::tgamma(1.0 - x) * std::sin(kPi * x) / kPi;
}

double log_sinc(double z) {
  if (std::fabs(z) < 1e-6) {
    const double z2 = z * z;
    return -z2 / 6.0 - z2 * z2 / 180.0 - z2 * z2 * z2 / 2835.0;
  }
  return std::log(std::sin(z) / z);
}

double sin_pi_unit(double u) {
  const double v = u <= 0.5 ? u : 1.0 - u;
  return std::sin(kPi * v);
}

double erfc_inv(double y) { return boost::math::erfc_inv(y); }

double median_half_stable() {
  const double e = erfc_inv(0.5);
  return 1.0 / (4.0 * e * e);
}

double median_S_ceiling() {
  const double e = erfc_inv(0.5);
  return e * e;
}

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::fabs(sum_) >= std::fabs(x))
    comp_ += (sum_ - t) + x;
  else
    comp_ += (x - t) + sum_;
  sum_ = t;
}

}  // namespace stableorders
