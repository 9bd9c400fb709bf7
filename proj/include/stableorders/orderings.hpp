#ifndef STABLEORDERS_ORDERINGS_HPP
#define STABLEORDERS_ORDERINGS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "stableorders/distributions.hpp"
#include "stableorders/rng.hpp"
#include "stableorders/stats.hpp"

namespace stableorders {

/// Sorted sample with O(log n) CDF, quantile and stop-loss queries.
class EmpiricalDistribution {
 public:
  explicit EmpiricalDistribution(std::vector<double> values, std::uint64_t seed = 0, std::uint64_t stream_id = 0);

  std::size_t size() const { return v_.size(); }
  std::span<const double> sorted_values() const { return v_; }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_; }

  /// #{v <= x} / n
  double cdf(double x) const;
  /// #{v >= x} / n
  double survival(double x) const;
  /// Order statistic of rank floor(p (n-1)).
  double quantile(double p) const;
  /// mean of (v - t)_+
  double stop_loss(double t) const;
  /// variance of (v - t)_+
  double stop_loss_variance(double t) const;
  double mean() const;
  double std_error() const;

  EmpiricalDistribution scaled(double c) const;

 private:
  void build_sums();

  std::vector<double> v_;
  std::vector<long double> suffix_;     // suffix_[k] = sum_{i >= k} v_i
  std::vector<long double> suffix_sq_;  // same for v_i^2
  std::uint64_t seed_;
  std::uint64_t stream_;
};

enum class OrderClaim { StDominates, CxDominates };
enum class Verdict { Pass, Fail, Inconclusive };

std::string_view verdict_name(Verdict v);

inline constexpr std::size_t kMinOrderSample = 10000;
inline constexpr double kOrderDelta = 1e-3;
inline constexpr int kStopLossKnots = 512;

struct OrderReport {
  OrderClaim claim;
  Verdict verdict;
  /// st: sup_x (survival_lower - survival_upper).
  /// cx: max over knots of (stop_loss_lesser - stop_loss_greater) / se, or the
  ///     mean-gap z-score when the mean gate fails.
  double max_violation;
  /// st: summed DKW widths at kOrderDelta. cx: sqrt(2 ln(2/kOrderDelta)).
  double tolerance;
  double worst_at;
  std::vector<double> grid;  // stop-loss knots (cx only)
  std::string reason;
  std::string label;
  /// st only: min over central quantiles of (q_upper - q_lower); an
  /// informational slack, never part of the verdict.
  double min_quantile_gap;
  double mean_lower = 0.0, mean_upper = 0.0, mean_gap_z = 0.0;

  bool passed() const { return verdict == Verdict::Pass; }
  std::string to_json(bool include_grid = false) const;
};

OrderReport check_st(const EmpiricalDistribution& lower, const EmpiricalDistribution& upper);
OrderReport check_cx(const EmpiricalDistribution& lesser, const EmpiricalDistribution& greater);

struct MeanCheck {
  std::string label;
  MeanEstimate estimate;
  double expected;
  bool pass;
};

struct ChainReport {
  std::string name;
  bool pass = true;
  std::vector<OrderReport> steps;
  std::vector<MeanCheck> means;

  void add(OrderReport r);
  void add_mean(std::string label, const MeanEstimate& m, double expected);
  std::string to_json() const;
};

/// All checks draw from fixed substreams of `rng`; the caller's state is not advanced.

/// S <st V_a(k) <st ... <st V_a(1) <st L with V_a = (1-a) a^{a/(1-a)} Z_a^{-a/(1-a)}
/// (compared in log scale), plus S <st L as a transitivity spot check.
ChainReport check_theorem_A_st(std::span<const double> alphas, std::size_t n, const RngState& rng);
/// L <cx W_a(1) <cx ... <cx W_a(k) <cx e S with W_a = (1-a) Z_a^{-a/(1-a)}; all means 1.
ChainReport check_theorem_A_cx(std::span<const double> alphas, std::size_t n, const RngState& rng);
/// Gamma(1+a) M_a <cx Gamma(1+b) M_b for adjacent b < a in [1/2, 1); all means 1.
ChainReport check_theorem_B(std::span<const double> alphas, std::size_t n, const RngState& rng);
/// M_a <st Gamma(1-a) L and Gamma(1+a) M_a <cx L. With reversed = true the
/// two sides are swapped (both should then fail).
ChainReport check_theorem_C(Alpha alpha, std::size_t n, const RngState& rng, bool reversed = false);
/// Gamma(1-b) M_a <st Gamma(1-a) M_b and Gamma(1+a) M_a <cx Gamma(1+b) M_b.
ChainReport check_theorem_Mike(Alpha beta, Alpha alpha, std::size_t n, const RngState& rng);
bool mike_admissible(Alpha beta, Alpha alpha);
/// a (1-a)^{(1-a)/a} L^{-(1-a)/a} <st Z_a and Gamma(1-a)^{-1/a} L^{-1/a} <st Z_a.
ChainReport check_frechet_corollary(Alpha alpha, std::size_t n, const RngState& rng);

enum class KanterClaim { StK, CxK, StKa, CxKa };
std::string_view kanter_claim_name(KanterClaim c);

/// u -> ratio of normalized Kanter functions used in each claim, e.g. for StK
/// b^b (1-b)^{1-b} b_beta(u) / (a^a (1-a)^{1-a} b_alpha(u)).
double kanter_log_ratio(KanterClaim claim, Alpha beta, Alpha alpha, double u);

struct KanterCertificate {
  KanterClaim claim;
  bool pass;
  double min_ratio;             // over the grid
  double min_second_difference;  // of log ratio
  double limit_at_0, expected_limit_at_0;
  double limit_at_1, expected_limit_at_1;  // +inf for CxKa
  std::string detail;
};

/// Runs the certificates valid for (beta, alpha): StK and CxK need
/// beta < alpha <= 1/2; StKa and CxKa need beta < alpha. Throws if neither applies.
std::vector<KanterCertificate> kanter_ratio_certificates(Alpha beta, Alpha alpha, int grid_size);
std::string kanter_certificates_json(const std::vector<KanterCertificate>& certs);

/// Sign changes of a - b, skipping points where |a - b| < 1e-9.
int single_crossing_count(std::span<const double> a, std::span<const double> b);

/// CDF of c K_alpha at y, by inverting the decreasing map b_alpha.
double scaled_kanter_cdf(Alpha alpha, double c, double y);
/// Density of c L^gamma at y > 0.
double scaled_power_exponential_density(double c, double gamma, double y);

}  // namespace stableorders

#endif
