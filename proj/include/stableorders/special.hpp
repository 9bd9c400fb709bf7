#ifndef STABLEORDERS_SPECIAL_HPP
#define STABLEORDERS_SPECIAL_HPP

#include <numbers>

namespace stableorders {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kLog2 = std::numbers::ln2;

// Thread-safe log|Gamma(x)| (glibc's lgamma writes the global signgam).
double log_gamma(double x);
long double log_gamma(long double x);

/// Gamma(a)/Gamma(b) for a, b > 0, evaluated through log-gamma.
double gamma_ratio(double a, double b);

/// 1/Gamma(x) for any real x; exactly zero at the poles 0, -1, -2, ...
double reciprocal_gamma(double x);

/// log(sin(z)/z) for 0 <= z < pi, Taylor-stabilized near z = 0.
double log_sinc(double z);

/// sin(pi*u) for u in [0,1], evaluated on the nearer endpoint so that values
/// close to 1 keep full relative accuracy.
double sin_pi_unit(double u);

double erfc_inv(double y);

/// Median of the positive 1/2-stable law, 1/(4 erfc^{-1}(1/2)^2).
double median_half_stable();

/// erfc^{-1}(1/2)^2 = 1/(4 m_{1/2}), the certified ceiling for the median of S.
double median_S_ceiling();

/// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace stableorders

#endif
