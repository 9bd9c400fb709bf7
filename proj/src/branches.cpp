#include "stableorders/branches.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "stableorders/distributions.hpp"
#include "stableorders/json_writer.hpp"
#include "stableorders/special.hpp"
#include "stableorders/stats.hpp"

namespace stableorders {

namespace {

enum : std::uint64_t {
  kTagNum = 0x62726e,
  kTagDen = 0x62726f,
  kTagRef = 0x627270,
  kTagMix = 0x627271,
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

// alpha rho = 1 up to rounding, e.g. alpha = 1/rho.
constexpr double kUnitSlack = 1e-12;

// log Z_a with Z_1 = 1.
double log_z(double a, RngState& rng) {
  return a >= 1.0 - kUnitSlack ? 0.0 : sample_log_positive_stable(Alpha(a), rng);
}

}  // namespace

void validate_branch_params(const BranchParams& p) {
  const double a = p.alpha, r = p.rho;
  if (!(a > 0.0 && a <= 2.0)) throw std::domain_error("branch requires 0 < alpha <= 2");
  if (a <= 1.0) {
    if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("branch requires rho in [0,1] when alpha <= 1");
  } else if (!(r >= 1.0 - 1.0 / a && r <= 1.0 / a)) {
    throw std::domain_error("branch requires rho in [1-1/alpha, 1/alpha] when alpha > 1");
  }
  if (a == 1.0 && (r == 0.0 || r == 1.0)) throw std::domain_error("(alpha, rho) = (1,0) and (1,1) are degenerate");
}

void validate_branch_sampling(const BranchParams& p) {
  validate_branch_params(p);
  if (!(p.rho > 0.0 && p.rho < 1.0)) throw std::domain_error("branch sampling requires 0 < rho < 1");
  if (!(p.alpha * p.rho <= 1.0 + kUnitSlack)) throw std::domain_error("branch sampling requires alpha * rho <= 1");
}

double sample_log_branch(const BranchParams& p, RngState& rng) {
  validate_branch_sampling(p);
  const double num = log_z(p.alpha * p.rho, rng);
  const double den = log_z(p.rho, rng);
  return p.rho * (num - den);
}

double sample_branch(const BranchParams& p, RngState& rng) { return std::exp(sample_log_branch(p, rng)); }

std::vector<double> sample_log_branch_batch(const BranchParams& p, std::size_t n, const RngState& rng) {
  validate_branch_sampling(p);
  const double ar = p.alpha * p.rho, r = p.rho;
  auto num = draw(n, rng.substream_for(kTagNum), [ar](RngState& g) { return log_z(ar, g); });
  const auto den = draw(n, rng.substream_for(kTagDen), [r](RngState& g) { return log_z(r, g); });
  for (std::size_t i = 0; i < n; ++i) num[i] = r * (num[i] - den[i]);
  return num;
}

std::vector<double> sample_branch_batch(const BranchParams& p, std::size_t n, const RngState& rng) {
  auto v = sample_log_branch_batch(p, n, rng);
  for (double& x : v) x = std::exp(x);
  return v;
}

double branch_moment(const BranchParams& p, double s) {
  validate_branch_sampling(p);
  const double a = p.alpha, r = p.rho;
  if (!(s > -1.0 && s < a)) throw std::domain_error("branch moment requires -1 < s < alpha");
  // Product of the two positive stable Mellin transforms; equal to the sine form
  // but free of its removable singularities.
  return std::exp(log_gamma(1.0 - s / a) + log_gamma(1.0 + s) - log_gamma(1.0 - r * s) - log_gamma(1.0 + r * s));
}

double cauchy_branch_scale(double rho) {
  if (!(rho > 0.0 && rho < 1.0)) throw std::domain_error("requires 0 < rho < 1");
  return kPi * rho / std::sin(kPi * rho);
}

double cauchy_branch_density(double rho, double x) {
  const double c = cauchy_branch_scale(rho);
  if (x < 0.0) return 0.0;
  return 1.0 / (x * x + 2.0 * c * std::cos(kPi * rho) * x + c * c);
}

double cauchy_branch_cdf(double rho, double x) {
  const double c = cauchy_branch_scale(rho);
  if (x <= 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  const double t = kPi * rho;
  return (std::atan((x + c * std::cos(t)) / (c * std::sin(t))) - kPi / 2.0 + t) / t;
}

double cauchy_branch_survival(double rho, double x) {
  const double c = cauchy_branch_scale(rho);
  if (x <= 0.0) return 1.0;
  const double t = kPi * rho;
  // pi/2 - atan(y) = atan(1/y) for y > 0 keeps precision in the tail.
  const double y = (x + c * std::cos(t)) / (c * std::sin(t));
  const double upper = y > 0.0 ? std::atan(1.0 / y) : kPi / 2.0 - std::atan(y);
  return upper / t;
}

double cauchy_branch_mass(double rho) {
  const double c = cauchy_branch_scale(rho);
  const double t = kPi * rho;
  return t / (c * std::sin(t));
}

double branch_one_cdf(double rho, double x) { return cauchy_branch_cdf(rho, cauchy_branch_scale(rho) * x); }

double y_alpha_density(double alpha, double x) {
  if (!(alpha >= 0.5 && alpha < 1.0)) throw std::domain_error("y_alpha_density requires alpha in [1/2, 1)");
  if (!(x > 0.0)) throw std::domain_error("y_alpha_density requires x > 0");
  if (alpha == 0.5) return 0.0;
  const double k = 1.0 / alpha;
  const double xk = std::pow(x, k);
  return -std::sin(kPi * k) * std::pow(x, k - 2.0) * (1.0 + x) /
         (kPi * (xk * xk - 2.0 * xk * std::cos(kPi * k) + 1.0));
}

YAlphaMoments y_alpha_moments(double alpha) {
  if (!(alpha >= 0.5 && alpha < 1.0)) throw std::domain_error("y_alpha_moments requires alpha in [1/2, 1)");
  if (alpha == 0.5) return {alpha, 1.0, 1.0, 1.0, 0.0};

  // u = x^{1/a}: density dx = -a sin(pi/a)/pi * u^{-a} (1+u^a) / (u^2 - 2u cos(pi/a) + 1) du.
  // [1, inf) is folded onto (0, 1] by u = 1/v; both halves then take w = t^{1-a}
  // (t = u or v), which absorbs the t^{-a} endpoint singularities.
  const double a = alpha, k = 1.0 / a, q = 1.0 / (1.0 - a);
  const double pref = -a * std::sin(kPi * k) / (kPi * (1.0 - a)), cs = std::cos(kPi * k);
  boost::math::quadrature::tanh_sinh<double> ts;
  double err = 0.0, total_err = 0.0;
  auto half_line = [&](double power) {
    double e1 = 0.0, e2 = 0.0;
    const double inner = ts.integrate(
        [&](double w) {
          const double u = std::pow(w, q), ua = std::pow(u, a);
          return pref * (1.0 + ua) * std::pow(ua, power) / (u * u - 2.0 * u * cs + 1.0);
        },
        0.0, 1.0, 1e-13, &e1);
    const double outer = ts.integrate(
        [&](double w) {
          const double v = std::pow(w, q), va = std::pow(v, a);
          return pref * (1.0 + va) * std::pow(va, 1.0 - power) / (1.0 - 2.0 * cs * v + v * v);
        },
        0.0, 1.0, 1e-13, &e2);
    err = e1 * std::abs(inner) + e2 * std::abs(outer);
    return inner + outer;
  };
  YAlphaMoments m{alpha, 0.0, 0.0, 0.0, 0.0};
  m.mass = half_line(0.0);
  total_err += err;
  m.mean = half_line(1.0);
  total_err += err;
  m.est_error = total_err;
  return m;
}

std::string KsCheck::to_json() const {
  JsonWriter w;
  w.begin_object()
      .field("label", label)
      .field("n", static_cast<std::uint64_t>(n))
      .field("statistic", statistic)
      .field("p_value", p_value)
      .field("pass", pass)
      .end_object();
  return w.str();
}

KsCheck check_branch_cdf(double rho, std::size_t n, const RngState& rng) {
  auto v = sample_branch_batch({1.0, rho}, n, rng.substream_for(kTagRef, rho));
  std::sort(v.begin(), v.end());
  const auto ks = ks_one_sample(v, [rho](double x) { return branch_one_cdf(rho, x); });
  return {"X+(1," + fmt(rho) + ") vs closed-form CDF", n, ks.statistic, ks.p_value, ks.p_value > 0.01};
}

KsCheck check_branch_ml_limit(double rho, std::size_t n, const RngState& rng) {
  auto x = sample_log_branch_batch({1.0 / rho, rho}, n, rng.substream_for(kTagRef + 1, rho));
  const Alpha a(rho);
  auto m = draw(n, rng.substream_for(kTagRef + 2, rho), [a](RngState& g) { return sample_log_mittag_leffler(a, g); });
  std::sort(x.begin(), x.end());
  std::sort(m.begin(), m.end());
  const auto ks = ks_two_sample(x, m);
  return {"X+(1/" + fmt(rho) + "," + fmt(rho) + ") vs M(" + fmt(rho) + ")", n, ks.statistic, ks.p_value,
          ks.p_value > 0.01};
}

KsCheck check_negative_branch_limit(double alpha, std::size_t n, const RngState& rng) {
  if (!(alpha > 0.5 && alpha < 1.0)) throw std::domain_error("negative branch limit requires alpha in (1/2, 1)");
  const Alpha a1(1.0 - alpha), a2(1.0 / alpha - 1.0);
  auto x = draw(n, rng.substream_for(kTagRef + 3, alpha), [=](RngState& g) {
    return sample_log_mittag_leffler(a1, g) - alpha * sample_log_mittag_leffler(a2, g);
  });
  auto r = draw(n, rng.substream_for(kTagRef + 4, alpha),
                [](RngState& g) { return std::log(sample_exponential(g)) - std::log(sample_exponential(g)); });
  std::sort(x.begin(), x.end());
  std::sort(r.begin(), r.end());
  const auto ks = ks_two_sample(x, r);
  return {"M(1-a)M(1/a-1)^-a vs L/L' at a=" + fmt(alpha), n, ks.statistic, ks.p_value, ks.p_value > 0.01};
}

ChainReport check_lintel_chain(std::span<const double> rhos, std::size_t n, const RngState& rng) {
  for (std::size_t i = 0; i < rhos.size(); ++i) {
    (void)cauchy_branch_scale(rhos[i]);
    if (i > 0 && rhos[i] < rhos[i - 1]) throw std::invalid_argument("rhos must be ascending");
  }
  ChainReport rep;
  rep.name = "lintel_st";
  std::vector<EmpiricalDistribution> laws;
  for (std::size_t i = 0; i < rhos.size(); ++i) {
    const double r = rhos[i];
    // Log scale; st order is invariant under the increasing map.
    auto v = sample_log_branch_batch({1.0, r}, n, rng.substream_for(kTagRef + 5, static_cast<double>(i)));
    const double lc = std::log(cauchy_branch_scale(r));
    for (double& x : v) x += lc;
    laws.emplace_back(std::move(v));
  }
  for (std::size_t i = 1; i < laws.size(); ++i) {
    auto r = check_st(laws[i - 1], laws[i]);
    r.label = "c X+(1," + fmt(rhos[i - 1]) + ") <st c X+(1," + fmt(rhos[i]) + ")";
    rep.add(std::move(r));
  }
  return rep;
}

std::vector<BranchMomentCheck> check_branch_moments(const BranchParams& p, std::span<const double> s, std::size_t n,
                                                    const RngState& rng) {
  const auto lx = sample_log_branch_batch(p, n, rng.substream_for(kTagRef + 6, p.alpha * 7.0 + p.rho));
  std::vector<BranchMomentCheck> out;
  for (double si : s) {
    const auto est = estimate_mean(lx, [si](double v) { return std::exp(si * v); });
    const double expected = branch_moment(p, si);
    out.push_back({si, est, expected, est.within(expected, 3.0)});
  }
  return out;
}

PastingCheck check_pasting(const BranchParams& p, std::size_t n, const RngState& rng) {
  validate_branch_sampling(p);
  const BranchParams q{p.alpha, 1.0 - p.rho};
  validate_branch_sampling(q);
  const auto pos = sample_branch_batch(p, n, rng.substream_for(kTagMix, 1.0));
  const auto neg = sample_branch_batch(q, n, rng.substream_for(kTagMix, 2.0));
  const auto coin = draw(n, rng.substream_for(kTagMix, 3.0), [](RngState& g) { return g.uniform_open(); });
  std::size_t nonneg = 0;
  bool positive = true;
  for (std::size_t i = 0; i < n; ++i) {
    positive = positive && pos[i] > 0.0 && neg[i] > 0.0;
    const double x = coin[i] < p.rho ? pos[i] : -neg[i];
    if (x >= 0.0) ++nonneg;
  }
  const double f = static_cast<double>(nonneg) / static_cast<double>(n);
  const double se = std::sqrt(p.rho * (1.0 - p.rho) / static_cast<double>(n));
  return {p.rho, f, se, std::abs(f - p.rho) <= 3.0 * se, positive};
}

}  // namespace stableorders
