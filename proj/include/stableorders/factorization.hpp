#ifndef STABLEORDERS_FACTORIZATION_HPP
#define STABLEORDERS_FACTORIZATION_HPP

#include <string>
#include <vector>

#include "stableorders/distributions.hpp"
#include "stableorders/rng.hpp"

namespace stableorders {

/// alpha = p/n with 1 <= p < n. Not reduced automatically.
struct RationalAlpha {
  int p;
  int n;

  RationalAlpha(int p, int n);
  double value() const { return static_cast<double>(p) / n; }
};

/// q_0 = 0, q_p = n, and q_j = max{i >= 1 : i p < j n} = ceil(j n / p) - 1.
std::vector<int> compute_q_indices(RationalAlpha r);

/// The offsets i - j over j in [0,p-1] and i in [q_j+1, q_{j+1}-1], in
/// lexicographic order of (j,i). Always a permutation of 1..n-p.
std::vector<int> interior_offsets(RationalAlpha r);

enum class FactorKind { Beta, Gamma, ExpPower };

struct Factor {
  FactorKind kind;
  double a;         // Beta first parameter, Gamma shape, or ExpPower power
  double b;         // Beta second parameter; unused otherwise
  double exponent;  // each draw is raised to this power
};

/// Product of independent factors times a constant. Immutable once built.
class FactorizationPlan {
 public:
  FactorizationPlan(double log_prefactor, std::vector<Factor> factors);

  double prefactor() const;
  double log_prefactor() const { return log_prefactor_; }
  const std::vector<Factor>& factors() const { return factors_; }

  /// Returns a copy with every exponent (and the prefactor) raised to `power`.
  FactorizationPlan raised(double power) const;

  double sample_log(RngState& rng) const;
  double sample(RngState& rng) const;

  /// E[plan^s] from the Beta/Gamma moment formulas, factor by factor.
  /// Infinite where some factor's moment diverges.
  double analytic_moment(double s) const;

  std::string to_json() const;

 private:
  double log_prefactor_;
  std::vector<Factor> factors_;
};

/// Z_{p/n}^{-p} = n^n/p^p * prod Gamma_{i/n} * prod B_{q_j/n, j/p - q_j/n}.
FactorizationPlan build_beta_gamma_plan(RationalAlpha r);

/// Z_{p/n}^{-p} = n^n/(p^p (n-p)^{n-p}) L^{n-p} * prod B(...) (Beta factors only).
FactorizationPlan build_beta_plan(RationalAlpha r);

/// The Beta plan without its L^{n-p} factor, so Z_{p/n}^{-p} = L^{n-p} K_{n,p}.
FactorizationPlan build_K_np_plan(RationalAlpha r);

/// Gamma(1+n s)/Gamma(1+p s): the s-th moment of Z_{p/n}^{-p}.
double plan_target_moment(RationalAlpha r, double s);

/// n-th moment of X_{p,0}: Gamma(1+n p) / (Gamma(1+n(p-1)) n!).
double binomial_moment_X(double p_real, int nth);

/// Gamma(1+s)/(Gamma(1+(1-alpha)s) Gamma(1+beta s)), the common s-th moment
/// of both sides of
///   Z_{(1-alpha)/(1-beta)}^{alpha-1} K_beta  =d  Z_{beta/alpha}^{-beta} K_alpha.
double joe_moment(Alpha beta, Alpha alpha, double s);
double sample_joe_left(Alpha beta, Alpha alpha, RngState& rng);
double sample_joe_right(Alpha beta, Alpha alpha, RngState& rng);

/// Legendre-Gauss multiplication check: returns the relative discrepancy of
///   (2 pi)^{(p-1)/2} p^{1/2-z} Gamma(z) = prod_{k=0}^{p-1} Gamma((z + k)/p).
double legendre_gauss_residual(double z, int p);

}  // namespace stableorders

#endif
