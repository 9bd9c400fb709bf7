#ifndef STABLEORDERS_DISTRIBUTIONS_HPP
#define STABLEORDERS_DISTRIBUTIONS_HPP

#include "stableorders/rng.hpp"

namespace stableorders {

/// Stability index in the open interval (0,1).
class Alpha {
 public:
  /// Throws std::domain_error unless 0 < value < 1.
  explicit Alpha(double value);

  double value() const noexcept { return value_; }
  Alpha complement() const { return Alpha(1.0 - value_); }

  friend bool operator==(Alpha, Alpha) = default;

 private:
  double value_;
};

// Standard building blocks. Gamma shapes below 1 use the boosted-shape
// transform Gamma(c) = Gamma(c+1) * U^{1/c}, done in log space so that shapes
// as small as 1/n never underflow to zero.
double sample_normal(RngState& rng);
double sample_log_gamma_variate(double shape, RngState& rng);
double sample_gamma(double shape, RngState& rng);
double sample_log_beta_variate(double a, double b, RngState& rng);
double sample_beta(double a, double b, RngState& rng);

/// Unit exponential L = -log(U).
double sample_exponential(RngState& rng);

/// Frechet variable L^{-gamma}; gamma > 0.
double sample_frechet(double gamma, RngState& rng);

/// Upper end of the Kanter support, alpha^{-alpha} (1-alpha)^{alpha-1}.
double kanter_sup(Alpha alpha);

/// log b_alpha(u) for u in (0,1), where
///   b_alpha(u) = sin(pi u) / (sin^alpha(pi alpha u) sin^{1-alpha}(pi (1-alpha) u)).
/// Written as log kanter_sup + (three log-sinc terms) so neither endpoint
/// suffers 0/0; the correction is clamped at 0 so b never exceeds its supremum.
double log_kanter_b(Alpha alpha, double u);
double kanter_b(Alpha alpha, double u);

/// K_alpha = b_alpha(U).
double sample_kanter(Alpha alpha, RngState& rng);

/// M_alpha = L^{1-alpha} b_alpha(U), the Mittag-Leffler variable Z_alpha^{-alpha}.
double sample_mittag_leffler(Alpha alpha, RngState& rng);
double sample_log_mittag_leffler(Alpha alpha, RngState& rng);

/// Z_alpha = M_alpha^{-1/alpha} with Laplace transform exp(-lambda^alpha).
double sample_positive_stable(Alpha alpha, RngState& rng);
/// log Z_alpha; finite even where Z_alpha itself would overflow.
double sample_log_positive_stable(Alpha alpha, RngState& rng);

/// S = e^X with X spectrally negative 1-stable, E[e^{i lambda X}] = (i lambda / e)^{i lambda}.
/// Chambers-Mallows-Stuck for alpha = 1, beta = -1, scale pi/2, shift -1.
/// Normalized so that E[S^s] = (s/e)^s.
double sample_log_stable_S(RngState& rng);
/// X = log S. S underflows to 0 with probability about 1e-3, X never does.
double sample_log_stable_X(RngState& rng);

/// E[Z_alpha^{-s}] = Gamma(1 + s/alpha) / Gamma(1 + s) for s > -alpha.
double moment_Z_negative(Alpha alpha, double s);

}  // namespace stableorders

#endif
