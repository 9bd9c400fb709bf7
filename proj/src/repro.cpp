#include "stableorders/repro.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "stableorders/branches.hpp"
#include "stableorders/distributions.hpp"
#include "stableorders/factorization.hpp"
#include "stableorders/json_writer.hpp"
#include "stableorders/medians.hpp"
#include "stableorders/mittag_leffler.hpp"
#include "stableorders/orderings.hpp"
#include "stableorders/special.hpp"
#include "stableorders/stats.hpp"

namespace stableorders {

namespace {

constexpr std::size_t kN = 1000000;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

struct Checks {
  std::vector<SubCheck> v;

  void add(std::string name, bool pass, double observed, double expected, double tolerance) {
    v.push_back({std::move(name), pass, observed, expected, tolerance});
  }
  void mean(std::string name, const MeanEstimate& m, double expected) {
    add(std::move(name), m.within(expected, 3.0), m.estimate, expected, 3.0 * m.std_error);
  }
  void ks(std::string name, double p_value) { add(std::move(name), p_value > 0.01, p_value, kNaN, 0.01); }
  void order(const OrderReport& r) {
    v.push_back({r.label, r.passed(), r.max_violation, 0.0, r.tolerance, r.verdict == Verdict::Inconclusive});
  }
  void chain(const ChainReport& c) {
    for (const auto& s : c.steps) order(s);
    for (const auto& m : c.means) add("E[" + m.label + "]", m.pass, m.estimate.estimate, m.expected, 3.0 * m.estimate.std_error);
  }
};

// C1: both Z_{p/n}^{-p} plans against Gamma(1+ns)/Gamma(1+ps), and against each other.
void criterion_1(const RngState& rng, Checks& c) {
  const std::pair<int, int> pairs[] = {{2, 1}, {3, 1}, {3, 2}, {5, 2}, {5, 3}, {7, 3}, {7, 5}};
  const double powers[] = {0.25, 0.5, 1.0, 2.0};
  for (auto [n, p] : pairs) {
    const RationalAlpha r(p, n);
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(p) + ")";
    const auto bg = build_beta_gamma_plan(r), b = build_beta_plan(r);
    auto lbg = draw(kN, rng.substream_for(1, n * 100.0 + p), [&bg](RngState& g) { return bg.sample_log(g); });
    auto lb = draw(kN, rng.substream_for(2, n * 100.0 + p), [&b](RngState& g) { return b.sample_log(g); });
    for (double s : powers) {
      const double target = plan_target_moment(r, s);
      c.mean("beta-gamma" + tag + " s=" + fmt(s), estimate_mean(lbg, [s](double x) { return std::exp(s * x); }), target);
      c.mean("beta" + tag + " s=" + fmt(s), estimate_mean(lb, [s](double x) { return std::exp(s * x); }), target);
    }
    std::sort(lbg.begin(), lbg.end());
    std::sort(lb.begin(), lb.end());
    c.ks("KS beta-gamma vs beta" + tag, ks_two_sample(lbg, lb).p_value);
  }
}

// C2: Z_{1/2} against its closed-form CDF; median at 1e7.
void criterion_2(const RngState& rng, Checks& c) {
  const Alpha half(0.5);
  auto z = draw(100000, rng.substream(1), [half](RngState& g) { return sample_positive_stable(half, g); });
  std::sort(z.begin(), z.end());
  const auto ks = ks_one_sample(z, [](double x) { return std::erfc(1.0 / (2.0 * std::sqrt(x))); });
  c.ks("KS Z(1/2) vs erfc(1/(2 sqrt x))", ks.p_value);
  const auto m = estimate_median(MedianDist::Z, half, 10000000, rng.substream(2));
  c.add("median Z(1/2), N=1e7", std::abs(m.value - 1.0990) <= 0.005, m.value, 1.0990, 0.005);
}

// C3: bounds strictly bracket E_a(-x); series and integral agree; E_{1/2}(-1).
void criterion_3(Checks& c) {
  for (int i = 1; i <= 19; ++i) {
    const double a = 0.05 * i;
    const Alpha alpha(a);
    const MittagLefflerEvaluator ev(alpha);
    double margin = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 36; ++k) {
      const double x = std::pow(10.0, -3.0 + k / 4.0);
      const double v = ev(x).value;
      const auto bd = ml_bounds(alpha, x);
      margin = std::min({margin, (v - bd.lower) / v, (bd.upper - v) / v});
    }
    c.add("bounds bracket E_a(-x), a=" + fmt(a) + " (min relative margin)", margin > 0.0, margin, 0.0, 0.0);

    double gap = 0.0;
    for (double f : {0.25, 0.5, 0.75, 1.0}) {
      const double x = f * ev.x_switch();
      gap = std::max(gap, std::abs(ev.series(x).value - ev.integral(x).value));
    }
    c.add("series vs integral on overlap, a=" + fmt(a), gap <= 1e-8, gap, 0.0, 1e-8);
  }
  const double v = ml_eval(Alpha(0.5), 1.0).value, exact = std::exp(1.0) * std::erfc(1.0);
  c.add("E_{1/2}(-1) = e erfc(1)", std::abs(v - exact) <= 1e-10, v, exact, 1e-10);
}

void criterion_4(const RngState& rng, Checks& c) {
  const std::vector<double> alphas = {0.2, 0.4, 0.6, 0.8};
  c.chain(check_theorem_A_st(alphas, kN, rng));
  c.chain(check_theorem_A_cx(alphas, kN, rng));
}

void criterion_5(const RngState& rng, Checks& c) {
  const std::vector<double> alphas = {0.5, 0.7, 0.9};
  c.chain(check_theorem_B(alphas, kN, rng));
}

void criterion_6(const RngState& rng, Checks& c) {
  for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    c.chain(check_theorem_C(Alpha(a), kN, rng));
    // The comparator must reject each swapped claim.
    for (const auto& s : check_theorem_C(Alpha(a), kN, rng, true).steps) {
      c.v.push_back({"rejects " + s.label, s.verdict == Verdict::Fail, s.max_violation, 0.0, s.tolerance});
    }
  }
}

void criterion_7(const RngState& rng, Checks& c) {
  const std::pair<double, double> pairs[] = {{0.2, 0.5}, {0.1, 0.4}, {0.3, 0.7}, {0.5, 0.9}};
  for (auto [b, a] : pairs) {
    for (const auto& k : kanter_ratio_certificates(Alpha(b), Alpha(a), 4096)) {
      const std::string tag = std::string(kanter_claim_name(k.claim)) + " (" + fmt(b) + "," + fmt(a) + ")";
      if (k.claim == KanterClaim::StK || k.claim == KanterClaim::StKa)
        c.add(tag + " min ratio", k.min_ratio >= 1.0, k.min_ratio, 1.0, 0.0);
      c.add(tag + " log-convexity", k.min_second_difference >= -1e-9, k.min_second_difference, 0.0, 1e-9);
      c.add(tag + " certificate", k.pass, k.limit_at_0, k.expected_limit_at_0, 1e-6);
    }
  }
  const Alpha a(0.3);
  const double sup = kanter_sup(a);
  const auto k = draw(kN, rng.substream(1), [a](RngState& g) { return sample_kanter(a, g); });
  const auto bad = std::count_if(k.begin(), k.end(), [sup](double x) { return !(x > 0.0 && x <= sup); });
  c.add("K(0.3) outside (0, sup], of 1e6", bad == 0, static_cast<double>(bad), 0.0, 0.0);

  auto k3 = k;
  auto k7 = draw(kN, rng.substream(2), [](RngState& g) { return sample_kanter(Alpha(0.7), g); });
  std::sort(k3.begin(), k3.end());
  std::sort(k7.begin(), k7.end());
  c.ks("KS K(0.3) vs K(0.7)", ks_two_sample(k3, k7).p_value);
}

void criterion_8(const RngState& rng, Checks& c) {
  const auto ms = estimate_m_S(kN, rng.substream(1));
  c.add("m_S <= 0.2274 + CI", ms.value <= 0.2274 + ms.ci_halfwidth, ms.value, 0.2274, ms.ci_halfwidth);

  const std::vector<double> alphas = {0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  for (const auto& row : check_median_bounds(alphas, ms.value, kN, rng.substream(2))) {
    const double lo = row.bounds.best_lower(), hi = row.bounds.upper;
    // expected carries the nearer bound so a failure shows which side broke.
    const double nearer = std::abs(row.median.value - lo) < std::abs(row.median.value - hi) ? lo : hi;
    c.add("m_" + fmt(row.alpha) + " in [" + fmt(lo) + ", " + fmt(hi) + "] +- CI", row.pass, row.median.value, nearer,
          row.median.ci_halfwidth);
  }

  const std::vector<double> mono = {0.80, 0.85, 0.90, 0.95};
  const auto series = check_median_monotonicity(mono, kN, rng.substream(3));
  for (std::size_t i = 1; i < mono.size(); ++i) {
    const auto &p = series.medians[i - 1], &q = series.medians[i];
    const double tol = p.ci_halfwidth + q.ci_halfwidth;
    c.add("m_" + fmt(mono[i]) + " - m_" + fmt(mono[i - 1]) + " >= -CI", q.value - p.value >= -tol, q.value - p.value, 0.0,
          tol);
  }

  const auto m01 = estimate_median(MedianDist::Z, Alpha(0.1), kN, rng.substream(4));
  c.add("m_0.1 > 1e3", m01.value > 1e3, m01.value, 1e3, 0.0);
}

void criterion_9(const RngState& rng, Checks& c) {
  auto pick = [&](double a, std::initializer_list<std::string_view> names) {
    const auto rep = check_mmm_inequalities(Alpha(a), kN, rng);
    for (auto want : names) {
      const auto it = std::find_if(rep.checks.begin(), rep.checks.end(), [&](const auto& k) { return k.name == want; });
      if (it == rep.checks.end()) {
        c.add(std::string(want) + " at a=" + fmt(a) + " (not covered)", false, kNaN, kNaN, kNaN);
      } else {
        c.add(it->name + " at a=" + fmt(a), it->pass, it->observed, it->threshold, 0.0);
      }
    }
  };
  for (double a : {0.2, 0.4}) pick(a, {"median_below_mean", "mode_at_zero"});
  for (double a : {0.8, 0.9}) pick(a, {"median_above_mean"});
  for (double a : {0.3, 0.5}) pick(a, {"mode_bound_below_median"});
}

void criterion_10(const RngState& rng, Checks& c) {
  for (double r : {0.3, 0.5, 0.7}) {
    const auto k = check_branch_cdf(r, kN, rng);
    c.ks(k.label, k.p_value);
  }
  const auto ml = check_branch_ml_limit(0.6, kN, rng);
  c.ks(ml.label, ml.p_value);
  for (double a : {0.5, 0.7, 0.9}) {
    const auto m = y_alpha_moments(a);
    c.add("mass of Y(" + fmt(a) + ")", std::abs(m.mass - 1.0) <= 1e-6, m.mass, 1.0, 1e-6);
    c.add("mean of Y(" + fmt(a) + ")", std::abs(m.mean - 1.0) <= 1e-6, m.mean, 1.0, 1e-6);
  }
  const std::vector<double> rhos = {0.3, 0.5, 0.7};
  c.chain(check_lintel_chain(rhos, kN, rng));
}

void criterion_11(const RngState& rng, Checks& c) {
  const Alpha alpha(0.7), beta(0.3);
  const auto left = draw(kN, rng.substream(1), [=](RngState& g) { return std::log(sample_joe_left(beta, alpha, g)); });
  const auto right = draw(kN, rng.substream(2), [=](RngState& g) { return std::log(sample_joe_right(beta, alpha, g)); });
  for (double s : {0.5, 1.0, 2.0}) {
    const double target = joe_moment(beta, alpha, s);
    auto pw = [s](double x) { return std::exp(s * x); };
    c.mean("Joe left s=" + fmt(s), estimate_mean(left, pw), target);
    c.mean("Joe right s=" + fmt(s), estimate_mean(right, pw), target);
  }
  const Alpha half(0.5);
  const auto k = draw(kN, rng.substream(3), [half](RngState& g) { return sample_kanter(half, g); });
  for (int n = 1; n <= 4; ++n) {
    c.mean("E[K(1/2)^" + std::to_string(2 * n) + "]",
           estimate_mean(k, [n](double x) { return std::pow(x, 2 * n); }), binomial_moment_X(2.0, n));
  }
}

struct CriterionMeta {
  const char* title;
  const char* expected;
  const char* tolerance;
};

constexpr CriterionMeta kMeta[kCriterionCount] = {
    {"moment oracle for rational factorization plans",
     "E[plan^s] = Gamma(1+ns)/Gamma(1+ps) for both plans; plans equal in law", "3 standard errors; KS p > 0.01"},
    {"alpha = 1/2 exactness", "Z(1/2) has CDF erfc(1/(2 sqrt x)); median 1.0990", "KS p > 0.01; |median - 1.0990| <= 0.005"},
    {"Mittag-Leffler bounds and evaluator consistency",
     "bounds strictly bracket E_a(-x); series = integral on overlap; E_{1/2}(-1) = e erfc(1)",
     "strict; 1e-8; 1e-10"},
    {"stable-to-Frechet chains", "st chain S ... L and cx chain L ... eS with unit means",
     "DKW at delta 1e-3 (st); standardized stop-loss (cx); 3 standard errors"},
    {"Mittag-Leffler convex chain", "Gamma(1+a)M_a decreasing in cx order; unit means",
     "standardized stop-loss; 3 standard errors"},
    {"Mittag-Leffler vs exponential", "M_a <st G(1-a)L, G(1+a)M_a <cx L; swapped claims rejected",
     "DKW / standardized stop-loss"},
    {"Kanter certificates", "ratios >= 1, log-convex, endpoint limits; K bounded; K_a = K_{1-a} in law",
     "second differences >= -1e-9; limits to 1e-6; 0 violations; KS p > 0.01"},
    {"median bounds and behaviour", "m_a inside its bounds; increasing on [0.80, 0.95]; m_0.1 > 1e3; m_S <= 0.2274",
     "99% order-statistic CI"},
    {"mean-median-mode inequalities", "median < mean and mode at 0 (a <= 1/2); median > mean (a >= 0.7726); mode bound < median",
     "99% order-statistic CI; histogram 3 sd"},
    {"one-sided branches", "closed-form Cauchy branch; X+(1/r,r) = M_r; Y_a mass and mean 1; st chain in r",
     "KS p > 0.01; 1e-6; DKW"},
    {"Joe identity and binomial moments", "both sides match Gamma(1+s)/(Gamma(1+(1-a)s)Gamma(1+bs)); E[K_{1/2}^{2n}] = C(2n, n)",
     "3 standard errors"},
};

void write_number(JsonWriter& w, const char* key, double x) {
  w.key(key);
  if (std::isfinite(x))
    w.value(x);
  else
    w.null();
}

}  // namespace

std::string_view status_name(CriterionStatus s) {
  switch (s) {
    case CriterionStatus::Pass: return "pass";
    case CriterionStatus::Fail: return "fail";
    case CriterionStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string_view criterion_title(int id) {
  if (id < 1 || id > kCriterionCount) throw std::invalid_argument("criterion id must be in 1..11");
  return kMeta[id - 1].title;
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
  const std::string_view title = criterion_title(id);
  const auto t0 = std::chrono::steady_clock::now();
  const RngState rng(seed, static_cast<std::uint64_t>(id));
  Checks c;
  switch (id) {
    case 1: criterion_1(rng, c); break;
    case 2: criterion_2(rng, c); break;
    case 3: criterion_3(c); break;
    case 4: criterion_4(rng, c); break;
    case 5: criterion_5(rng, c); break;
    case 6: criterion_6(rng, c); break;
    case 7: criterion_7(rng, c); break;
    case 8: criterion_8(rng, c); break;
    case 9: criterion_9(rng, c); break;
    case 10: criterion_10(rng, c); break;
    case 11: criterion_11(rng, c); break;
  }
  const auto t1 = std::chrono::steady_clock::now();

  const auto passed = std::count_if(c.v.begin(), c.v.end(), [](const SubCheck& s) { return s.pass; });
  const bool inconclusive = std::any_of(c.v.begin(), c.v.end(), [](const SubCheck& s) { return s.inconclusive; });
  CriterionStatus status = CriterionStatus::Pass;
  if (passed != static_cast<long>(c.v.size())) status = inconclusive ? CriterionStatus::Inconclusive : CriterionStatus::Fail;

  const CriterionMeta& sp = kMeta[id - 1];
  return {id,
          std::string(title),
          status,
          std::to_string(passed) + " of " + std::to_string(c.v.size()) + " sub-checks pass",
          sp.expected,
          sp.tolerance,
          std::chrono::duration<double, std::milli>(t1 - t0).count(),
          std::move(c.v)};
}

bool ReproReport::all_pass() const {
  return std::all_of(criteria.begin(), criteria.end(),
                     [](const CriterionResult& r) { return r.status == CriterionStatus::Pass; });
}

std::string ReproReport::to_json(bool include_runtime) const {
  JsonWriter w;
  w.begin_object().field("seed", seed).field("suite", suite).field("all_pass", all_pass());
  w.key("criteria").begin_array();
  for (const auto& r : criteria) {
    w.begin_object()
        .field("id", r.id)
        .field("name", r.name)
        .field("status", status_name(r.status))
        .field("observed", r.observed)
        .field("expected", r.expected)
        .field("tolerance", r.tolerance);
    if (include_runtime) w.field("runtime_ms", r.runtime_ms);
    w.key("checks").begin_array();
    for (const auto& s : r.checks) {
      w.begin_object().field("name", s.name).field("pass", s.pass);
      write_number(w, "observed", s.observed);
      write_number(w, "expected", s.expected);
      write_number(w, "tolerance", s.tolerance);
      w.end_object();
    }
    w.end_array().end_object();
  }
  w.end_array().end_object();
  return w.str();
}

ReproReport run_repro(std::string_view suite, std::uint64_t seed,
                      const std::function<void(const CriterionResult&)>& progress) {
  std::vector<int> ids;
  if (suite == "all") {
    for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
  } else {
    std::size_t pos = 0;
    while (pos <= suite.size()) {
      const auto end = std::min(suite.find(',', pos), suite.size());
      const std::string tok(suite.substr(pos, end - pos));
      std::size_t used = 0;
      int id = 0;
      try {
        id = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != tok.size() || id < 1 || id > kCriterionCount)
        throw std::invalid_argument("suite must be 'all' or a comma-separated list of criterion ids in 1..11");
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
      pos = end + 1;
    }
    std::sort(ids.begin(), ids.end());
  }
  ReproReport rep{seed, std::string(suite), {}};
  for (int id : ids) {
    rep.criteria.push_back(run_criterion(id, seed));
    if (progress) progress(rep.criteria.back());
  }
  return rep;
}

}  // namespace stableorders
