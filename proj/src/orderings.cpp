#include "stableorders/orderings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "stableorders/json_writer.hpp"
#include "stableorders/special.hpp"

namespace stableorders {

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> values, std::uint64_t seed, std::uint64_t stream_id)
    : v_(std::move(values)), seed_(seed), stream_(stream_id) {
  if (v_.empty()) throw std::invalid_argument("empirical distribution needs at least one value");
  std::sort(v_.begin(), v_.end());
  build_sums();
}

void EmpiricalDistribution::build_sums() {
  const std::size_t n = v_.size();
  suffix_.assign(n + 1, 0.0L);
  suffix_sq_.assign(n + 1, 0.0L);
  for (std::size_t i = n; i-- > 0;) {
    const long double x = v_[i];
    suffix_[i] = suffix_[i + 1] + x;
    suffix_sq_[i] = suffix_sq_[i + 1] + x * x;
  }
}

double EmpiricalDistribution::cdf(double x) const {
  const auto k = std::upper_bound(v_.begin(), v_.end(), x) - v_.begin();
  return static_cast<double>(k) / static_cast<double>(v_.size());
}

double EmpiricalDistribution::survival(double x) const {
  const auto k = std::lower_bound(v_.begin(), v_.end(), x) - v_.begin();
  return static_cast<double>(v_.size() - k) / static_cast<double>(v_.size());
}

double EmpiricalDistribution::quantile(double p) const {
  const double pos = std::clamp(p, 0.0, 1.0) * static_cast<double>(v_.size() - 1);
  return v_[static_cast<std::size_t>(pos)];
}

double EmpiricalDistribution::stop_loss(double t) const {
  const std::size_t k = std::upper_bound(v_.begin(), v_.end(), t) - v_.begin();
  const long double m = static_cast<long double>(v_.size() - k);
  return static_cast<double>((suffix_[k] - m * t) / v_.size());
}

double EmpiricalDistribution::stop_loss_variance(double t) const {
  const std::size_t k = std::upper_bound(v_.begin(), v_.end(), t) - v_.begin();
  const long double n = v_.size();
  const long double m = static_cast<long double>(v_.size() - k);
  const long double lt = t;
  const long double first = (suffix_[k] - m * lt) / n;
  const long double second = (suffix_sq_[k] - 2.0L * lt * suffix_[k] + m * lt * lt) / n;
  return static_cast<double>(std::max(0.0L, second - first * first));
}

double EmpiricalDistribution::mean() const { return static_cast<double>(suffix_[0] / v_.size()); }

double EmpiricalDistribution::std_error() const {
  const long double n = v_.size();
  if (v_.size() < 2) return 0.0;
  const long double m = suffix_[0] / n;
  const long double var = std::max(0.0L, (suffix_sq_[0] / n - m * m) * n / (n - 1));
  return static_cast<double>(std::sqrt(var / n));
}

EmpiricalDistribution EmpiricalDistribution::scaled(double c) const {
  if (!(c > 0.0)) throw std::domain_error("scale factor must be positive");
  std::vector<double> w(v_.size());
  std::transform(v_.begin(), v_.end(), w.begin(), [c](double x) { return c * x; });
  return EmpiricalDistribution(std::move(w), seed_, stream_);
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

OrderReport blank(OrderClaim claim) {
  OrderReport r{claim, Verdict::Inconclusive, 0.0, 0.0, kNaN, {}, "", "", kNaN};
  return r;
}

bool too_small(const EmpiricalDistribution& a, const EmpiricalDistribution& b) {
  return a.size() < kMinOrderSample || b.size() < kMinOrderSample;
}

}  // namespace

OrderReport check_st(const EmpiricalDistribution& lower, const EmpiricalDistribution& upper) {
  OrderReport r = blank(OrderClaim::StDominates);
  r.tolerance = dkw_epsilon(lower.size(), kOrderDelta) + dkw_epsilon(upper.size(), kOrderDelta);
  r.mean_lower = lower.mean();
  r.mean_upper = upper.mean();

  const auto a = lower.sorted_values(), b = upper.sorted_values();
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double worst = 0.0, worst_at = kNaN;
  // Survival functions only jump at sample points; at each merged value check
  // both P[. >= x] (before consuming ties) and P[. > x] (after).
  while (i < a.size() || j < b.size()) {
    const double x = j >= b.size() || (i < a.size() && a[i] <= b[j]) ? a[i] : b[j];
    const double ge = (na - i) / na - (nb - j) / nb;
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    const double gt = (na - i) / na - (nb - j) / nb;
    const double d = std::max(ge, gt);
    if (d > worst) {
      worst = d;
      worst_at = x;
    }
  }
  r.max_violation = worst;
  r.worst_at = worst_at;

  double gap = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 1000; ++k) {
    const double p = k / 1000.0;
    gap = std::min(gap, upper.quantile(p) - lower.quantile(p));
  }
  r.min_quantile_gap = gap;

  if (too_small(lower, upper)) {
    r.reason = "sample_too_small";
    return r;
  }
  r.verdict = worst <= r.tolerance ? Verdict::Pass : Verdict::Fail;
  if (r.verdict == Verdict::Fail) r.reason = "survival_exceeds_band";
  return r;
}

OrderReport check_cx(const EmpiricalDistribution& lesser, const EmpiricalDistribution& greater) {
  OrderReport r = blank(OrderClaim::CxDominates);
  r.mean_lower = lesser.mean();
  r.mean_upper = greater.mean();
  const double se = std::hypot(lesser.std_error(), greater.std_error());
  r.mean_gap_z = se > 0 ? (r.mean_lower - r.mean_upper) / se : 0.0;
  if (too_small(lesser, greater)) {
    r.reason = "sample_too_small";
    return r;
  }
  if (std::fabs(r.mean_gap_z) > 3.0) {
    r.verdict = Verdict::Fail;
    r.reason = "mean_mismatch";
    r.max_violation = std::fabs(r.mean_gap_z);
    r.tolerance = 3.0;
    return r;
  }

  const auto a = lesser.sorted_values(), b = greater.sorted_values();
  std::vector<double> merged(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), merged.begin());
  std::vector<double> knots;
  knots.reserve(kStopLossKnots + 4);
  for (int k = 0; k < kStopLossKnots; ++k) {
    const auto idx = static_cast<std::size_t>((k + 0.5) / kStopLossKnots * static_cast<double>(merged.size()));
    knots.push_back(merged[std::min(idx, merged.size() - 1)]);
  }
  knots.insert(knots.end(), {a.front(), a.back(), b.front(), b.back()});
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  r.tolerance = std::sqrt(2.0 * std::log(2.0 / kOrderDelta));
  double worst = -std::numeric_limits<double>::infinity(), worst_at = kNaN;
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  for (double t : knots) {
    const double s = std::sqrt(lesser.stop_loss_variance(t) / na + greater.stop_loss_variance(t) / nb);
    if (!(s > 0.0)) continue;
    const double z = (lesser.stop_loss(t) - greater.stop_loss(t)) / s;
    if (z > worst) {
      worst = z;
      worst_at = t;
    }
  }
  r.max_violation = worst;
  r.worst_at = worst_at;
  r.grid = std::move(knots);
  r.verdict = worst <= r.tolerance ? Verdict::Pass : Verdict::Fail;
  if (r.verdict == Verdict::Fail) r.reason = "stop_loss_exceeds_band";
  return r;
}

std::string OrderReport::to_json(bool include_grid) const {
  JsonWriter w;
  w.begin_object();
  w.field("label", label);
  w.field("claim", claim == OrderClaim::StDominates ? "st_dominates" : "cx_dominates");
  w.field("verdict", verdict_name(verdict));
  w.field("max_violation", max_violation);
  w.field("tolerance", tolerance);
  w.field("worst_at", worst_at);
  w.field("reason", reason);
  w.field("mean_lower", mean_lower);
  w.field("mean_upper", mean_upper);
  if (claim == OrderClaim::StDominates) {
    w.field("min_quantile_gap", min_quantile_gap);
  } else {
    w.field("mean_gap_z", mean_gap_z);
  }
  if (include_grid) w.key("grid").array(grid);
  w.end_object();
  return w.str();
}

void ChainReport::add(OrderReport r) {
  pass = pass && r.passed();
  steps.push_back(std::move(r));
}

void ChainReport::add_mean(std::string label, const MeanEstimate& m, double expected) {
  const bool ok = m.within(expected, 3.0);
  pass = pass && ok;
  means.push_back({std::move(label), m, expected, ok});
}

std::string ChainReport::to_json() const {
  JsonWriter w;
  w.begin_object().field("name", name).field("pass", pass);
  w.key("steps").begin_array();
  for (const auto& s : steps) w.raw(s.to_json());
  w.end_array();
  w.key("means").begin_array();
  for (const auto& m : means) {
    w.begin_object()
        .field("label", m.label)
        .field("estimate", m.estimate.estimate)
        .field("std_error", m.estimate.std_error)
        .field("expected", m.expected)
        .field("pass", m.pass)
        .end_object();
  }
  w.end_array().end_object();
  return w.str();
}

namespace {

// Stream tags; one substream per (variable family, parameter value).
enum : std::uint64_t { kTagM = 0x4d, kTagL = 0x4c, kTagS = 0x53, kTagL2 = 0x4c32 };

RngState stream_for(const RngState& rng, std::uint64_t tag, double param = 0.0) {
  return rng.substream_for(tag, param);
}

EmpiricalDistribution sample_dist(std::size_t n, const RngState& sub, const std::function<double(RngState&)>& f) {
  return EmpiricalDistribution(draw(n, sub, f), sub.seed(), sub.stream_id());
}

std::vector<double> log_ml_draws(Alpha a, std::size_t n, const RngState& rng) {
  return draw(n, stream_for(rng, kTagM, a.value()), [a](RngState& g) { return sample_log_mittag_leffler(a, g); });
}

EmpiricalDistribution transformed(const std::vector<double>& src, const RngState& sub,
                                  const std::function<double(double)>& f) {
  std::vector<double> out(src.size());
  std::transform(src.begin(), src.end(), out.begin(), f);
  return EmpiricalDistribution(std::move(out), sub.seed(), sub.stream_id());
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

OrderReport labelled(OrderReport r, std::string label) {
  r.label = std::move(label);
  return r;
}

void check_ascending(std::span<const double> alphas, double lo) {
  if (alphas.size() < 2) throw std::invalid_argument("chain needs at least two alpha values");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    (void)Alpha(alphas[i]);
    if (alphas[i] < lo) throw std::domain_error("chain requires every alpha >= " + fmt(lo));
    if (i > 0 && !(alphas[i] > alphas[i - 1])) throw std::invalid_argument("alphas must be strictly increasing");
  }
}

double log_v_scale(double a) { return std::log1p(-a) + a / (1.0 - a) * std::log(a); }

}  // namespace

ChainReport check_theorem_A_st(std::span<const double> alphas, std::size_t n, const RngState& rng) {
  check_ascending(alphas, 0.0);
  ChainReport rep;
  rep.name = "theorem_A_st";
  const auto sub_s = stream_for(rng, kTagS), sub_l = stream_for(rng, kTagL);
  const auto log_s = sample_dist(n, sub_s, [](RngState& g) { return sample_log_stable_X(g); });
  const auto log_l = sample_dist(n, sub_l, [](RngState& g) { return std::log(sample_exponential(g)); });

  // log V_a = log((1-a) a^{a/(1-a)}) + log(M_a)/(1-a); st order is invariant under log.
  std::vector<EmpiricalDistribution> v;
  for (double a : alphas) {
    const auto sub = stream_for(rng, kTagM, a);
    const double c = log_v_scale(a);
    v.push_back(transformed(log_ml_draws(Alpha(a), n, rng), sub, [=](double lm) { return c + lm / (1.0 - a); }));
  }
  const std::size_t k = alphas.size();
  rep.add(labelled(check_st(log_s, v[k - 1]), "S <st V(" + fmt(alphas[k - 1]) + ")"));
  for (std::size_t i = k - 1; i > 0; --i)
    rep.add(labelled(check_st(v[i], v[i - 1]), "V(" + fmt(alphas[i]) + ") <st V(" + fmt(alphas[i - 1]) + ")"));
  rep.add(labelled(check_st(v[0], log_l), "V(" + fmt(alphas[0]) + ") <st L"));
  rep.add(labelled(check_st(log_s, log_l), "S <st L"));
  return rep;
}

ChainReport check_theorem_A_cx(std::span<const double> alphas, std::size_t n, const RngState& rng) {
  check_ascending(alphas, 0.0);
  ChainReport rep;
  rep.name = "theorem_A_cx";
  const auto sub_s = stream_for(rng, kTagS), sub_l = stream_for(rng, kTagL);
  const auto es = sample_dist(n, sub_s, [](RngState& g) { return std::exp(1.0 + sample_log_stable_X(g)); });
  const auto l = sample_dist(n, sub_l, [](RngState& g) { return sample_exponential(g); });

  std::vector<EmpiricalDistribution> w;
  for (double a : alphas) {
    const auto sub = stream_for(rng, kTagM, a);
    const double c = std::log1p(-a);
    w.push_back(transformed(log_ml_draws(Alpha(a), n, rng), sub, [=](double lm) { return std::exp(c + lm / (1.0 - a)); }));
  }
  rep.add_mean("L", {l.mean(), l.std_error(), l.size()}, 1.0);
  for (std::size_t i = 0; i < w.size(); ++i)
    rep.add_mean("W(" + fmt(alphas[i]) + ")", {w[i].mean(), w[i].std_error(), w[i].size()}, 1.0);
  rep.add_mean("eS", {es.mean(), es.std_error(), es.size()}, 1.0);

  rep.add(labelled(check_cx(l, w.front()), "L <cx W(" + fmt(alphas.front()) + ")"));
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    rep.add(labelled(check_cx(w[i], w[i + 1]), "W(" + fmt(alphas[i]) + ") <cx W(" + fmt(alphas[i + 1]) + ")"));
  rep.add(labelled(check_cx(w.back(), es), "W(" + fmt(alphas.back()) + ") <cx eS"));
  return rep;
}

ChainReport check_theorem_B(std::span<const double> alphas, std::size_t n, const RngState& rng) {
  check_ascending(alphas, 0.5);
  ChainReport rep;
  rep.name = "theorem_B";
  std::vector<EmpiricalDistribution> m;
  for (double a : alphas) {
    const double c = std::log(std::tgamma(1.0 + a));
    m.push_back(transformed(log_ml_draws(Alpha(a), n, rng), stream_for(rng, kTagM, a),
                            [=](double lm) { return std::exp(c + lm); }));
    rep.add_mean("G(1+a)M(" + fmt(a) + ")", {m.back().mean(), m.back().std_error(), m.back().size()}, 1.0);
  }
  for (std::size_t i = m.size() - 1; i > 0; --i)
    rep.add(labelled(check_cx(m[i], m[i - 1]),
                     "G(1+a)M(" + fmt(alphas[i]) + ") <cx G(1+b)M(" + fmt(alphas[i - 1]) + ")"));
  return rep;
}

ChainReport check_theorem_C(Alpha alpha, std::size_t n, const RngState& rng, bool reversed) {
  const double a = alpha.value();
  ChainReport rep;
  rep.name = reversed ? "theorem_C_reversed" : "theorem_C";
  const auto sub_m = stream_for(rng, kTagM, a), sub_l = stream_for(rng, kTagL);
  const auto lm = log_ml_draws(alpha, n, rng);
  const auto l = sample_dist(n, sub_l, [](RngState& g) { return sample_exponential(g); });
  const auto m = transformed(lm, sub_m, [](double x) { return std::exp(x); });
  const auto gm = m.scaled(std::tgamma(1.0 + a));
  const auto gl = l.scaled(std::tgamma(1.0 - a));
  const std::string tag = "(" + fmt(a) + ")";
  if (!reversed) {
    rep.add(labelled(check_st(m, gl), "M" + tag + " <st G(1-a)L"));
    rep.add(labelled(check_cx(gm, l), "G(1+a)M" + tag + " <cx L"));
    rep.add_mean("G(1+a)M" + tag, {gm.mean(), gm.std_error(), gm.size()}, 1.0);
  } else {
    rep.add(labelled(check_st(gl, m), "G(1-a)L <st M" + tag));
    rep.add(labelled(check_cx(l, gm), "L <cx G(1+a)M" + tag));
  }
  return rep;
}

bool mike_admissible(Alpha beta, Alpha alpha) {
  const double a = alpha.value(), b = beta.value();
  return b <= 0.5 && a >= std::max(0.5, std::min(2.0 * b, (b + 1.0) / 2.0)) && b < a;
}

ChainReport check_theorem_Mike(Alpha beta, Alpha alpha, std::size_t n, const RngState& rng) {
  if (!mike_admissible(beta, alpha))
    throw std::domain_error("requires beta <= 1/2 and alpha >= max(1/2, min(2 beta, (beta+1)/2))");
  const double a = alpha.value(), b = beta.value();
  ChainReport rep;
  rep.name = "mike";
  const auto sa = stream_for(rng, kTagM, a), sb = stream_for(rng, kTagM, b);
  const auto ma = transformed(log_ml_draws(alpha, n, rng), sa, [](double x) { return std::exp(x); });
  const auto mb = transformed(log_ml_draws(beta, n, rng), sb, [](double x) { return std::exp(x); });
  rep.add(labelled(check_st(ma.scaled(std::tgamma(1.0 - b)), mb.scaled(std::tgamma(1.0 - a))),
                   "G(1-b)M(" + fmt(a) + ") <st G(1-a)M(" + fmt(b) + ")"));
  const auto ga = ma.scaled(std::tgamma(1.0 + a)), gb = mb.scaled(std::tgamma(1.0 + b));
  rep.add(labelled(check_cx(ga, gb), "G(1+a)M(" + fmt(a) + ") <cx G(1+b)M(" + fmt(b) + ")"));
  rep.add_mean("G(1+a)M(" + fmt(a) + ")", {ga.mean(), ga.std_error(), ga.size()}, 1.0);
  rep.add_mean("G(1+b)M(" + fmt(b) + ")", {gb.mean(), gb.std_error(), gb.size()}, 1.0);
  return rep;
}

ChainReport check_frechet_corollary(Alpha alpha, std::size_t n, const RngState& rng) {
  const double a = alpha.value();
  ChainReport rep;
  rep.name = "frechet_corollary";
  const auto sub_m = stream_for(rng, kTagM, a);
  const auto log_z = transformed(log_ml_draws(alpha, n, rng), sub_m, [=](double lm) { return -lm / a; });
  const auto sub_l = stream_for(rng, kTagL2, a);
  const auto ll = draw(n, sub_l, [](RngState& g) { return std::log(sample_exponential(g)); });
  const double g1 = (1.0 - a) / a;
  const double c1 = std::log(a) + g1 * std::log1p(-a);
  const double c2 = -std::log(std::tgamma(1.0 - a)) / a;
  const auto f1 = transformed(ll, sub_l, [=](double x) { return c1 - g1 * x; });
  const auto f2 = transformed(ll, sub_l, [=](double x) { return c2 - x / a; });
  const std::string tag = "(" + fmt(a) + ")";
  rep.add(labelled(check_st(f1, log_z), "a(1-a)^{(1-a)/a} L^{-(1-a)/a} <st Z" + tag));
  rep.add(labelled(check_st(f2, log_z), "G(1-a)^{-1/a} L^{-1/a} <st Z" + tag));
  return rep;
}

std::string_view kanter_claim_name(KanterClaim c) {
  switch (c) {
    case KanterClaim::StK: return "kanter-stK";
    case KanterClaim::CxK: return "kanter-cxK";
    case KanterClaim::StKa: return "kanter-stKa";
    case KanterClaim::CxKa: return "kanter-cxKa";
  }
  return "unknown";
}

namespace {

// log of the constant multiplying b_x (or b_x^{1/(1-x)}) in each claim.
double kanter_log_const(KanterClaim claim, double x) {
  switch (claim) {
    case KanterClaim::StK: return x * std::log(x) + (1.0 - x) * std::log1p(-x);
    case KanterClaim::CxK: return log_gamma(1.0 + x) + log_gamma(2.0 - x);
    case KanterClaim::StKa: return std::log1p(-x) + x / (1.0 - x) * std::log(x);
    case KanterClaim::CxKa: return std::log1p(-x);
  }
  return 0.0;
}

double kanter_log_term(KanterClaim claim, Alpha x, double u) {
  const double lb = log_kanter_b(x, u);
  const bool powered = claim == KanterClaim::StKa || claim == KanterClaim::CxKa;
  return kanter_log_const(claim, x.value()) + (powered ? lb / (1.0 - x.value()) : lb);
}

}  // namespace

double kanter_log_ratio(KanterClaim claim, Alpha beta, Alpha alpha, double u) {
  return kanter_log_term(claim, beta, u) - kanter_log_term(claim, alpha, u);
}

std::vector<KanterCertificate> kanter_ratio_certificates(Alpha beta, Alpha alpha, int grid_size) {
  const double a = alpha.value(), b = beta.value();
  if (!(b <= a)) throw std::domain_error("kanter certificates require beta <= alpha");
  if (grid_size < 3) throw std::invalid_argument("grid_size must be at least 3");
  std::vector<KanterClaim> claims;
  if (a <= 0.5) claims.insert(claims.end(), {KanterClaim::StK, KanterClaim::CxK});
  claims.insert(claims.end(), {KanterClaim::StKa, KanterClaim::CxKa});
  const bool same = a == b;
  constexpr double inf = std::numeric_limits<double>::infinity();

  std::vector<KanterCertificate> out;
  for (KanterClaim c : claims) {
    std::vector<double> lr(grid_size);
    for (int k = 0; k < grid_size; ++k) lr[k] = kanter_log_ratio(c, beta, alpha, (k + 1.0) / (grid_size + 1.0));
    KanterCertificate cert{c, true, std::exp(*std::min_element(lr.begin(), lr.end())), inf, 0, 0, 0, 0, ""};
    for (int k = 1; k + 1 < grid_size; ++k)
      cert.min_second_difference = std::min(cert.min_second_difference, lr[k - 1] - 2.0 * lr[k] + lr[k + 1]);
    cert.limit_at_0 = std::exp(kanter_log_ratio(c, beta, alpha, 1e-9));
    cert.limit_at_1 = std::exp(kanter_log_ratio(c, beta, alpha, 1.0 - 1e-9));

    const double sa = std::sin(kPi * a), sb = std::sin(kPi * b);
    switch (c) {
      case KanterClaim::StK:
        cert.expected_limit_at_0 = 1.0;
        cert.expected_limit_at_1 = std::exp(kanter_log_const(c, b) - kanter_log_const(c, a)) * sa / sb;
        break;
      case KanterClaim::CxK:
        cert.expected_limit_at_0 = std::pow(b, 1 - b) * std::pow(1 - b, b) * sa / (std::pow(a, 1 - a) * std::pow(1 - a, a) * sb);
        cert.expected_limit_at_1 = b * (1 - b) * sa * sa / (a * (1 - a) * sb * sb);
        break;
      case KanterClaim::StKa:
        cert.expected_limit_at_0 = 1.0;
        cert.expected_limit_at_1 = same ? 1.0 : inf;
        break;
      case KanterClaim::CxKa:
        cert.expected_limit_at_0 = std::pow(a, a / (1 - a)) * std::pow(b, b / (b - 1));
        cert.expected_limit_at_1 = same ? 1.0 : inf;
        break;
    }

    auto fail = [&](const std::string& why) {
      cert.pass = false;
      if (!cert.detail.empty()) cert.detail += "; ";
      cert.detail += why;
    };
    if (cert.min_second_difference < -1e-9) fail("log ratio not convex on grid");
    if (std::fabs(cert.limit_at_0 / cert.expected_limit_at_0 - 1.0) > 1e-6) fail("limit at 0+ mismatch");
    if (std::isfinite(cert.expected_limit_at_1) && std::fabs(cert.limit_at_1 / cert.expected_limit_at_1 - 1.0) > 1e-6)
      fail("limit at 1- mismatch");
    if (same) {
      if (std::fabs(cert.min_ratio - 1.0) > 1e-12) fail("ratio not identically 1");
    } else if (c == KanterClaim::StK || c == KanterClaim::StKa) {
      if (cert.min_ratio < 1.0 - 1e-12) fail("ratio below 1");
    } else {
      if (!(cert.limit_at_0 < 1.0)) fail("limit at 0+ not below 1");
      if (!(cert.limit_at_1 > 1.0)) fail("limit at 1- not above 1");
    }
    out.push_back(cert);
  }
  return out;
}

std::string kanter_certificates_json(const std::vector<KanterCertificate>& certs) {
  JsonWriter w;
  w.begin_array();
  for (const auto& c : certs) {
    w.begin_object()
        .field("claim", kanter_claim_name(c.claim))
        .field("verdict", c.pass ? "pass" : "fail")
        .field("min_ratio", c.min_ratio)
        .field("min_second_difference", c.min_second_difference)
        .field("limit_at_0", c.limit_at_0)
        .field("expected_limit_at_0", c.expected_limit_at_0)
        .field("limit_at_1", c.limit_at_1)
        .field("expected_limit_at_1", c.expected_limit_at_1)
        .field("detail", c.detail)
        .end_object();
  }
  w.end_array();
  return w.str();
}

int single_crossing_count(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("density grids must have the same length");
  int count = 0, last = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    if (std::fabs(d) < 1e-9) continue;
    const int s = d > 0 ? 1 : -1;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

double scaled_kanter_cdf(Alpha alpha, double c, double y) {
  if (!(c > 0.0)) throw std::domain_error("scale must be positive");
  if (y <= 0.0) return 0.0;
  const double target = std::log(y / c);
  if (target >= std::log(kanter_sup(alpha))) return 1.0;
  // b is decreasing: P[c b(U) <= y] = 1 - b^{-1}(y/c).
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
    const double mid = 0.5 * (lo + hi);
    (log_kanter_b(alpha, mid) > target ? lo : hi) = mid;
  }
  return 1.0 - 0.5 * (lo + hi);
}

double scaled_power_exponential_density(double c, double gamma, double y) {
  if (!(c > 0.0 && gamma > 0.0)) throw std::domain_error("scale and exponent must be positive");
  if (y <= 0.0) return 0.0;
  const double l = std::pow(y / c, 1.0 / gamma);
  return std::exp(-l) * l / (gamma * y);
}

}  // namespace stableorders
