#include "stableorders/medians.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "stableorders/json_writer.hpp"
#include "stableorders/special.hpp"
#include "stableorders/stats.hpp"

namespace stableorders {

MedianDist parse_median_dist(std::string_view id) {
  if (id == "Z") return MedianDist::Z;
  if (id == "M") return MedianDist::M;
  if (id == "S") return MedianDist::S;
  if (id == "L") return MedianDist::L;
  throw std::invalid_argument("unknown sampler id '" + std::string(id) + "' (expected Z, M, S or L)");
}

std::string_view median_dist_name(MedianDist d) {
  switch (d) {
    case MedianDist::Z: return "Z";
    case MedianDist::M: return "M";
    case MedianDist::S: return "S";
    case MedianDist::L: return "L";
  }
  return "?";
}

MedianEstimate median_with_ci(std::vector<double>& v) {
  if (v.empty()) throw std::invalid_argument("median of an empty sample");
  const std::size_t n = v.size();
  const std::size_t mid = (n - 1) / 2;
  const double half = 2.5758293035489 * std::sqrt(static_cast<double>(n)) / 2.0;
  const auto lo = static_cast<std::size_t>(std::max(0.0, std::floor(n / 2.0 - half)));
  const auto hi = std::min(n - 1, static_cast<std::size_t>(std::ceil(n / 2.0 + half)));

  std::nth_element(v.begin(), v.begin() + mid, v.end());
  const double m = v[mid];
  std::nth_element(v.begin(), v.begin() + std::min(lo, mid), v.begin() + mid);
  const double ql = v[std::min(lo, mid)];
  std::nth_element(v.begin() + mid, v.begin() + std::max(hi, mid), v.end());
  const double qu = v[std::max(hi, mid)];
  return {m, ql, qu, std::max(m - ql, qu - m), n};
}

namespace {

enum : std::uint64_t { kTagMedian = 0x6d6564, kTagMmm = 0x6d6d6d, kTagZal = 0x7a616c };

// Median of exp(sample) from a log-scale sample; exp is monotone so the CI maps too.
MedianEstimate exp_median(std::vector<double>& logs) {
  const auto m = median_with_ci(logs);
  const double v = std::exp(m.value), lo = std::exp(m.ci_lower), hi = std::exp(m.ci_upper);
  return {v, lo, hi, std::max(v - lo, hi - v), m.n};
}

// Z = M^{-1/alpha} is decreasing in M, so the CI ends swap.
MedianEstimate z_from_m(const MedianEstimate& m, double a) {
  const double v = std::pow(m.value, -1.0 / a);
  const double lo = std::pow(m.ci_upper, -1.0 / a), hi = std::pow(m.ci_lower, -1.0 / a);
  return {v, lo, hi, std::max(v - lo, hi - v), m.n};
}

Alpha require_alpha(std::optional<Alpha> a, MedianDist d) {
  if (!a) throw std::invalid_argument("sampler " + std::string(median_dist_name(d)) + " requires alpha");
  return *a;
}

void write_median(JsonWriter& w, const MedianEstimate& m) {
  w.begin_object()
      .field("value", m.value)
      .field("ci_lower", m.ci_lower)
      .field("ci_upper", m.ci_upper)
      .field("ci_halfwidth", m.ci_halfwidth)
      .field("n", static_cast<std::uint64_t>(m.n))
      .end_object();
}

}  // namespace

MedianEstimate estimate_median(MedianDist dist, std::optional<Alpha> alpha, std::size_t n, const RngState& rng) {
  if (n < kMinMedianSample) throw std::invalid_argument("estimate_median requires n >= 100000");
  const double param = alpha ? alpha->value() : 0.0;
  const auto sub = rng.substream_for(kTagMedian + static_cast<std::uint64_t>(dist), param);
  std::vector<double> logs;
  switch (dist) {
    case MedianDist::Z: {
      const Alpha a = require_alpha(alpha, dist);
      logs = draw(n, sub, [a](RngState& g) { return sample_log_positive_stable(a, g); });
      break;
    }
    case MedianDist::M: {
      const Alpha a = require_alpha(alpha, dist);
      logs = draw(n, sub, [a](RngState& g) { return sample_log_mittag_leffler(a, g); });
      break;
    }
    case MedianDist::S: logs = draw(n, sub, [](RngState& g) { return sample_log_stable_X(g); }); break;
    case MedianDist::L: logs = draw(n, sub, [](RngState& g) { return std::log(sample_exponential(g)); }); break;
  }
  return exp_median(logs);
}

MedianEstimate estimate_m_S(std::size_t n, const RngState& rng) {
  if (n < 1000000) throw std::invalid_argument("estimate_m_S requires n >= 1000000");
  return estimate_median(MedianDist::S, std::nullopt, n, rng);
}

double BoundSet::best_lower() const {
  double b = std::max(lower_frechet, lower_ml);
  if (lower_best) b = std::max(b, *lower_best);
  return b;
}

std::string BoundSet::to_json() const {
  JsonWriter w;
  w.begin_object().field("lower_frechet", lower_frechet).field("lower_ml", lower_ml).field("upper", upper);
  w.key("lower_best");
  if (lower_best)
    w.value(*lower_best);
  else
    w.null();
  w.end_object();
  return w.str();
}

BoundSet median_bounds(Alpha alpha, double m_S) {
  if (!(m_S > 0.0 && m_S <= median_S_ceiling()))
    throw std::domain_error("m_S must satisfy 0 < m_S <= erfc^{-1}(1/2)^2 ~ 0.2274682");
  const double a = alpha.value();
  const double e = (1.0 - a) / a;
  BoundSet b{};
  b.lower_frechet = a * std::pow((1.0 - a) / kLog2, e);
  b.lower_ml = std::pow(1.0 / (kLog2 * std::tgamma(1.0 - a)), 1.0 / a);
  b.upper = a * std::pow((1.0 - a) / m_S, e);
  if (a > 0.5) b.lower_best = a * std::pow(4.0 * median_half_stable() * (1.0 - a), e);
  return b;
}

double mode_upper_bound(Alpha alpha) {
  const double a = alpha.value();
  return std::pow(a / std::tgamma(2.0 - a), 1.0 / a);
}

double mode_bound_threshold() { return 1.0 / (1.0 + kLog2); }

double median_mean_threshold() { return 1.0 - median_S_ceiling(); }

std::string MmmReport::to_json() const {
  JsonWriter w;
  w.begin_object().field("alpha", alpha).field("covered", covered).field("pass", pass);
  w.field("status", !covered ? "not_covered" : pass ? "pass" : "fail");
  w.key("median_M");
  write_median(w, median_M);
  w.key("median_Z");
  write_median(w, median_Z);
  w.field("mean_M", mean_M);
  w.key("checks").begin_array();
  for (const auto& c : checks) {
    w.begin_object()
        .field("name", c.name)
        .field("pass", c.pass)
        .field("observed", c.observed)
        .field("threshold", c.threshold)
        .field("detail", c.detail)
        .end_object();
  }
  w.end_array().end_object();
  return w.str();
}

MmmReport check_mmm_inequalities(Alpha alpha, std::size_t n, const RngState& rng) {
  if (n < 1000000) throw std::invalid_argument("check_mmm_inequalities requires n >= 1000000");
  const double a = alpha.value();
  auto lm = draw(n, rng.substream_for(kTagMmm, a), [alpha](RngState& g) { return sample_log_mittag_leffler(alpha, g); });
  std::vector<double> m(lm.size());
  std::transform(lm.begin(), lm.end(), m.begin(), [](double x) { return std::exp(x); });

  MmmReport rep{};
  rep.alpha = a;
  rep.median_M = exp_median(lm);
  rep.median_Z = z_from_m(rep.median_M, a);
  rep.mean_M = 1.0 / std::tgamma(1.0 + a);
  rep.pass = true;

  auto add = [&](InequalityCheck c) {
    rep.pass = rep.pass && c.pass;
    rep.checks.push_back(std::move(c));
  };

  if (a <= 0.5) {
    add({"median_below_mean", rep.median_M.ci_upper < rep.mean_M, rep.median_M.ci_upper, rep.mean_M,
         "upper CI end of median(M) vs 1/Gamma(1+alpha)"});

    // Freedman-Diaconis histogram on [0, q99]; the first bin should be the tallest.
    std::vector<double> q = m;
    const auto at = [&](double p) {
      const auto k = static_cast<std::size_t>(p * static_cast<double>(q.size() - 1));
      std::nth_element(q.begin(), q.begin() + k, q.end());
      return q[k];
    };
    const double q25 = at(0.25), q75 = at(0.75), q99 = at(0.99);
    const double h = 2.0 * (q75 - q25) / std::cbrt(static_cast<double>(n));
    const auto bins = static_cast<std::size_t>(std::ceil(q99 / h));
    std::vector<std::uint64_t> counts(bins, 0);
    for (double x : m) {
      const auto k = static_cast<std::size_t>(x / h);
      if (k < bins) ++counts[k];
    }
    const double c0 = static_cast<double>(counts[0]);
    const double cmax = static_cast<double>(*std::max_element(counts.begin(), counts.end()));
    const double allowance = 3.0 * std::sqrt(c0 + cmax);
    add({"mode_at_zero", cmax - c0 <= allowance, cmax - c0, allowance,
         "tallest bin minus first bin, against 3 sd of the count difference"});
  }
  if (a >= median_mean_threshold()) {
    add({"median_above_mean", rep.median_M.ci_lower > rep.mean_M, rep.median_M.ci_lower, rep.mean_M,
         "lower CI end of median(M) vs 1/Gamma(1+alpha)"});
  }
  if (a < mode_bound_threshold()) {
    const double mb = mode_upper_bound(alpha);
    add({"mode_bound_below_median", mb < rep.median_Z.ci_lower, mb, rep.median_Z.ci_lower,
         "(alpha/Gamma(2-alpha))^{1/alpha} vs lower CI end of median(Z)"});
  }
  rep.covered = !rep.checks.empty();
  return rep;
}

std::string MedianSeriesReport::to_json() const {
  JsonWriter w;
  w.begin_object().field("pass", pass).field("detail", detail);
  w.key("rows").begin_array();
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    w.begin_object().field("alpha", alphas[i]).key("median");
    write_median(w, medians[i]);
    w.end_object();
  }
  w.end_array().end_object();
  return w.str();
}

MedianSeriesReport check_median_monotonicity(std::span<const double> alphas, std::size_t n, const RngState& rng) {
  const double lo = median_mean_threshold();
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (!(alphas[i] > lo && alphas[i] < 1.0)) throw std::domain_error("median monotonicity requires every alpha in (0.7725318, 1)");
    if (i > 0 && !(alphas[i] > alphas[i - 1])) throw std::invalid_argument("alphas must be strictly increasing");
  }
  MedianSeriesReport rep{true, {alphas.begin(), alphas.end()}, {}, ""};
  for (double a : alphas) rep.medians.push_back(estimate_median(MedianDist::Z, Alpha(a), n, rng));
  for (std::size_t i = 1; i < alphas.size(); ++i) {
    const auto &p = rep.medians[i - 1], &c = rep.medians[i];
    const double drop = p.value - c.value;
    if (drop > p.ci_halfwidth + c.ci_halfwidth) {
      rep.pass = false;
      char buf[160];
      std::snprintf(buf, sizeof buf, "%smedian drops by %.6g between alpha=%g and alpha=%g (CI allowance %.6g)",
                    rep.detail.empty() ? "" : "; ", drop, alphas[i - 1], alphas[i], p.ci_halfwidth + c.ci_halfwidth);
      rep.detail += buf;
    }
  }
  return rep;
}

std::vector<MedianBoundRow> check_median_bounds(std::span<const double> alphas, double m_S, std::size_t n,
                                                const RngState& rng) {
  std::vector<MedianBoundRow> rows;
  for (double av : alphas) {
    const Alpha a(av);
    MedianBoundRow r{av, estimate_median(MedianDist::Z, a, n, rng), median_bounds(a, m_S), false};
    r.pass = r.median.value >= r.bounds.best_lower() - r.median.ci_halfwidth &&
             r.median.value <= r.bounds.upper + r.median.ci_halfwidth;
    rows.push_back(r);
  }
  return rows;
}

double zal_ratio(Alpha alpha, double x, std::size_t n, const RngState& rng) {
  const auto lm = draw(n, rng.substream_for(kTagZal, alpha.value()),
                       [alpha](RngState& g) { return sample_log_mittag_leffler(alpha, g); });
  const double lx = std::log(x);
  const auto hits = std::count_if(lm.begin(), lm.end(), [lx](double v) { return v <= lx; });
  return static_cast<double>(hits) / static_cast<double>(n) / (x / std::tgamma(1.0 - alpha.value()));
}

double zero_asymptotic_product(Alpha alpha, double x, std::size_t n, const RngState& rng) {
  const double a = alpha.value();
  const auto lz = draw(n, rng.substream_for(kTagZal + 1, a),
                       [alpha](RngState& g) { return sample_log_positive_stable(alpha, g); });
  const double lx = std::log(x);
  const auto hits = std::count_if(lz.begin(), lz.end(), [lx](double v) { return v <= lx; });
  const double p = static_cast<double>(hits) / static_cast<double>(n);
  return std::pow(x, a / (1.0 - a)) * std::log(p);
}

}  // namespace stableorders
