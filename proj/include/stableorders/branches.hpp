#ifndef STABLEORDERS_BRANCHES_HPP
#define STABLEORDERS_BRANCHES_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "stableorders/orderings.hpp"
#include "stableorders/rng.hpp"

namespace stableorders {

/// Positive branch X+(alpha, rho) of a strictly stable law.
struct BranchParams {
  double alpha;
  double rho;
};

/// Law-level region: alpha in (0,2]; rho in [0,1] for alpha <= 1, rho in
/// [1-1/alpha, 1/alpha] for alpha > 1; (1,0) and (1,1) excluded.
void validate_branch_params(const BranchParams& p);
/// Sampling region: the law-level region plus 0 < rho < 1 and alpha rho <= 1.
void validate_branch_sampling(const BranchParams& p);

/// log X+ = rho (log Z_{alpha rho} - log Z'_rho), with Z_1 = 1.
double sample_log_branch(const BranchParams& p, RngState& rng);
double sample_branch(const BranchParams& p, RngState& rng);
/// n draws; numerator and denominator use separate fixed substreams of `rng`.
std::vector<double> sample_branch_batch(const BranchParams& p, std::size_t n, const RngState& rng);
std::vector<double> sample_log_branch_batch(const BranchParams& p, std::size_t n, const RngState& rng);

/// E[X+^s] = Gamma(1-s/alpha) sin(pi rho s) / (rho sin(pi s) Gamma(1-s)), -1 < s < alpha.
double branch_moment(const BranchParams& p, double s);

/// c_rho = Gamma(1+rho) Gamma(1-rho) = pi rho / sin(pi rho).
double cauchy_branch_scale(double rho);
/// Density of c_rho X+(1,rho): 1/(x^2 + 2 c cos(pi rho) x + c^2).
double cauchy_branch_density(double rho, double x);
/// Its CDF, [atan((x + c cos t)/(c sin t)) - pi/2 + t]/t with t = pi rho.
double cauchy_branch_cdf(double rho, double x);
/// Total mass from the arctan primitive, t/(c sin t).
double cauchy_branch_mass(double rho);
/// CDF of X+(1,rho) itself.
double branch_one_cdf(double rho, double x);

/// -sin(pi/a) x^{1/a-2} (1+x) / (pi (x^{2/a} - 2 x^{1/a} cos(pi/a) + 1)), a in [1/2,1).
/// At a = 1/2 the law is an atom at 1 and the density part is 0.
double y_alpha_density(double alpha, double x);

struct YAlphaMoments {
  double alpha;
  double mass;   // quadrature of the density plus the atom
  double mean;
  double atom;   // 1 at alpha = 1/2, else 0
  double est_error;
};
YAlphaMoments y_alpha_moments(double alpha);

struct KsCheck {
  std::string label;
  std::size_t n;
  double statistic;
  double p_value;
  bool pass;  // p_value > 0.01

  std::string to_json() const;
};

/// X+(1,rho) draws against branch_one_cdf.
KsCheck check_branch_cdf(double rho, std::size_t n, const RngState& rng);
/// X+(1/rho, rho) against M_rho, two-sample.
KsCheck check_branch_ml_limit(double rho, std::size_t n, const RngState& rng);
/// M_{1-a} M_{1/a-1}^{-a} against L/L', two-sample; a close to 1.
KsCheck check_negative_branch_limit(double alpha, std::size_t n, const RngState& rng);

/// c_{r'} X+(1,r') <st c_r X+(1,r) for adjacent r' <= r.
ChainReport check_lintel_chain(std::span<const double> rhos, std::size_t n, const RngState& rng);
/// Closed-form survival of c_r X+(1,r) at x; non-decreasing in r.
double cauchy_branch_survival(double rho, double x);

struct BranchMomentCheck {
  double s;
  MeanEstimate estimate;
  double expected;
  bool pass;
};
std::vector<BranchMomentCheck> check_branch_moments(const BranchParams& p, std::span<const double> s,
                                                    std::size_t n, const RngState& rng);

/// Mixture of X+(a,r) and -X+(a,1-r) with weights (r, 1-r): P[>= 0] = r within 3 sd.
struct PastingCheck {
  double rho;
  double frequency;
  double std_error;
  bool pass;
  bool min_positive_ok;  // every X+ draw strictly positive
};
PastingCheck check_pasting(const BranchParams& p, std::size_t n, const RngState& rng);

}  // namespace stableorders

#endif
