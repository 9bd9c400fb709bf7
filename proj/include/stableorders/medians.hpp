#ifndef STABLEORDERS_MEDIANS_HPP
#define STABLEORDERS_MEDIANS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stableorders/distributions.hpp"
#include "stableorders/rng.hpp"

namespace stableorders {

enum class MedianDist { Z, M, S, L };

/// "Z", "M", "S" or "L"; throws std::invalid_argument otherwise.
MedianDist parse_median_dist(std::string_view id);
std::string_view median_dist_name(MedianDist d);

struct MedianEstimate {
  double value;
  double ci_lower;
  double ci_upper;
  double ci_halfwidth;  // max distance from value to either CI end
  std::size_t n;
};

/// Sample median with a 99% distribution-free CI from binomial order
/// statistics (ranks n/2 -+ 2.5758 sqrt(n)/2). Reorders `values`.
MedianEstimate median_with_ci(std::vector<double>& values);

inline constexpr std::size_t kMinMedianSample = 100000;

/// Sample median of the chosen law (alpha ignored for S and L). n >= 1e5.
MedianEstimate estimate_median(MedianDist dist, std::optional<Alpha> alpha, std::size_t n, const RngState& rng);

/// Median of S, n >= 1e6.
MedianEstimate estimate_m_S(std::size_t n, const RngState& rng);

struct BoundSet {
  double lower_frechet;  // a ((1-a)/log 2)^{(1-a)/a}
  double lower_ml;       // (1/(log 2 Gamma(1-a)))^{1/a}
  double upper;          // a ((1-a)/m_S)^{(1-a)/a}
  std::optional<double> lower_best;  // a (4 m_{1/2} (1-a))^{(1-a)/a}, a > 1/2

  double best_lower() const;
  std::string to_json() const;
};

/// Requires 0 < m_S <= erfc^{-1}(1/2)^2 ~ 0.2274682.
BoundSet median_bounds(Alpha alpha, double m_S);

/// (alpha / Gamma(2-alpha))^{1/alpha}, an upper bound for the mode of Z_alpha.
double mode_upper_bound(Alpha alpha);

/// 1/(1 + log 2): below it the mode bound sits under the median lower bound.
double mode_bound_threshold();
/// 1 - erfc^{-1}(1/2)^2, the gate used for the median-above-mean check.
double median_mean_threshold();

struct InequalityCheck {
  std::string name;
  bool pass;
  double observed;
  double threshold;
  std::string detail;
};

struct MmmReport {
  double alpha;
  bool covered;  // false when no proven statement applies at this alpha
  bool pass;
  MedianEstimate median_M;
  MedianEstimate median_Z;
  double mean_M;  // 1/Gamma(1+alpha)
  std::vector<InequalityCheck> checks;

  std::string to_json() const;
};

/// alpha <= 1/2: median(M) < mean(M) and the histogram of M peaks in its first bin.
/// alpha >= median_mean_threshold(): median(M) > mean(M).
/// alpha < mode_bound_threshold(): mode_upper_bound < median(Z).
/// n >= 1e6.
MmmReport check_mmm_inequalities(Alpha alpha, std::size_t n, const RngState& rng);

struct MedianSeriesReport {
  bool pass;
  std::vector<double> alphas;
  std::vector<MedianEstimate> medians;
  std::string detail;

  std::string to_json() const;
};

/// Non-decreasing medians of Z along `alphas` within combined CIs; every
/// alpha must exceed median_mean_threshold().
MedianSeriesReport check_median_monotonicity(std::span<const double> alphas, std::size_t n, const RngState& rng);

struct MedianBoundRow {
  double alpha;
  MedianEstimate median;
  BoundSet bounds;
  bool pass;
};

/// Estimated m_alpha inside [best lower - CI, upper + CI] at every alpha.
std::vector<MedianBoundRow> check_median_bounds(std::span<const double> alphas, double m_S, std::size_t n,
                                                const RngState& rng);

/// P[M_alpha <= x] / (x / Gamma(1-alpha)), which tends to 1 as x -> 0.
double zal_ratio(Alpha alpha, double x, std::size_t n, const RngState& rng);
/// x^{alpha/(1-alpha)} log P[Z_alpha <= x], which tends to -(1-alpha) alpha^{alpha/(1-alpha)}.
double zero_asymptotic_product(Alpha alpha, double x, std::size_t n, const RngState& rng);

}  // namespace stableorders

#endif
