#ifndef STABLEORDERS_MITTAG_LEFFLER_HPP
#define STABLEORDERS_MITTAG_LEFFLER_HPP

#include <array>
#include <span>
#include <string_view>

#include "stableorders/distributions.hpp"

namespace stableorders {

enum class MLRegime { Series, Integral, Asymptotic };

std::string_view regime_name(MLRegime r);

struct MLEval {
  double value;
  MLRegime regime;
  double est_abs_error;
};

struct MLBounds {
  double lower;  // 1/(1 + Gamma(1-alpha) x)
  double upper;  // 1/(1 + x/Gamma(1+alpha))
};

/// Evaluator of x -> E_alpha(-x) on [0, inf) for one fixed alpha.
///
///  - x <= x_switch: alternating power series, 200 terms, long double.
///  - x_switch < x <= 1e8: Laplace form E_alpha(-x) = int_0^inf e^{-r t} K(r) dr
///    with t = x^{1/alpha} and the spectral density
///    K(r) = sin(alpha pi)/pi * r^{alpha-1} / (r^{2 alpha} + 2 r^alpha cos(alpha pi) + 1),
///    integrated by the trapezoid rule after r = e^w / t.
///  - x > 1e8: 1/(Gamma(1-alpha) x) - 1/(Gamma(1-2 alpha) x^2).
class MittagLefflerEvaluator {
 public:
  static constexpr int kTerms = 200;
  static constexpr double kAsymptoticFrom = 1e8;

  explicit MittagLefflerEvaluator(Alpha alpha);

  Alpha alpha() const { return alpha_; }
  /// Largest x at which the truncated series certifies 1e-12 absolute error.
  double x_switch() const { return x_switch_; }

  MLEval operator()(double x) const;
  MLEval series(double x) const;
  MLEval integral(double x) const;
  MLEval asymptotic(double x) const;

 private:
  bool series_certified(double x) const;

  Alpha alpha_;
  std::array<long double, kTerms + 2> lgamma_{};  // log Gamma(1 + alpha n)
  double x_switch_ = 0.0;
};

/// Throws std::domain_error for negative or non-finite x.
MLEval ml_eval(Alpha alpha, double x);
MLBounds ml_bounds(Alpha alpha, double x);

/// (beta <= 1/2 and alpha >= max(1/2, min(2 beta, (beta+1)/2))) or 1/2 <= beta < alpha.
bool ml_chain_admissible(Alpha beta, Alpha alpha);

struct MLChainReport {
  bool pass;
  double max_violation;  // largest (left - right) over every link and grid point
  double worst_x;
};

/// Checks, at every grid point,
///   e^{-x} <= E_a(-G(1+a)x) <= E_b(-G(1+b)x) <= 1/(1+x)
///   1/(1+x) <= E_b(-x/G(1-b)) <= E_a(-x/G(1-a)) <= 1.
/// Throws std::domain_error for an inadmissible pair.
MLChainReport ml_chain_check(Alpha alpha, Alpha beta, std::span<const double> x_grid);

}  // namespace stableorders

#endif
