#ifndef STABLEORDERS_STATS_HPP
#define STABLEORDERS_STATS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "stableorders/rng.hpp"

namespace stableorders {

/// Streaming mean/variance (Welford), mergeable with Chan's pairwise update so
/// chunked estimates combine independently of the order of arrival.
class RunningStats {
 public:
  void add(double x);
  void merge(const RunningStats& other);

  std::uint64_t count() const { return n_; }
  double mean() const { return mean_; }
  double variance() const;
  double std_error() const;

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

struct MeanEstimate {
  double estimate;
  double std_error;
  std::uint64_t n;

  /// |estimate - expected| <= k * std_error
  bool within(double expected, double k = 3.0) const;
  double z_score(double expected) const;
};

MeanEstimate estimate_mean(std::span<const double> values);
MeanEstimate estimate_mean(std::span<const double> values, const std::function<double(double)>& f);

/// Worker count: hardware concurrency (at least 1), capped by
/// STABLE_ORDERS_THREADS when that is set and positive.
unsigned thread_count();

/// Runs body(i) for i in [0, count) on up to thread_count() threads. Work is
/// assigned by index, so results written per index do not depend on the
/// number of workers.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

inline constexpr std::size_t kDrawChunk = 1u << 16;

/// n draws of `sampler`; chunk k of kDrawChunk draws uses rng.substream(k).
/// Output is identical for any thread count.
template <typename Sampler>
std::vector<double> draw(std::size_t n, const RngState& rng, Sampler sampler) {
  std::vector<double> out(n);
  const std::size_t chunks = (n + kDrawChunk - 1) / kDrawChunk;
  parallel_for(chunks, [&](std::size_t k) {
    RngState local = rng.substream(k);
    const std::size_t end = std::min(n, (k + 1) * kDrawChunk);
    for (std::size_t i = k * kDrawChunk; i < end; ++i) out[i] = sampler(local);
  });
  return out;
}

struct KsResult {
  double statistic;
  double p_value;
};

/// Asymptotic Kolmogorov survival function Q(lambda) = 2 sum (-1)^{k-1} e^{-2k^2 lambda^2}.
double kolmogorov_survival(double lambda);

/// One-sample KS against a continuous CDF; `sorted` must be ascending.
KsResult ks_one_sample(std::span<const double> sorted, const std::function<double(double)>& cdf);

/// Two-sample KS; both inputs ascending.
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b);

/// DKW half-width sqrt(ln(2/delta)/(2n)).
double dkw_epsilon(std::size_t n, double delta);

}  // namespace stableorders

#endif
