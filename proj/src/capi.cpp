#include "stableorders/stableorders.h"

#include <cmath>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "stableorders/branches.hpp"
#include "stableorders/distributions.hpp"
#include "stableorders/factorization.hpp"
#include "stableorders/json_writer.hpp"
#include "stableorders/medians.hpp"
#include "stableorders/mittag_leffler.hpp"
#include "stableorders/orderings.hpp"
#include "stableorders/repro.hpp"
#include "stableorders/rng.hpp"
#include "stableorders/special.hpp"
#include "stableorders/stats.hpp"

struct so_rng {
  stableorders::RngState state;
};

struct so_plan {
  stableorders::FactorizationPlan plan;
};

namespace {

using namespace stableorders;

thread_local std::string g_last_error;

template <typename F>
so_status guard(F&& body) {
  try {
    body();
    g_last_error.clear();
    return SO_OK;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return SO_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return SO_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SO_ERR_NO_MEMORY;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SO_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SO_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw std::invalid_argument(std::string(what) + " must not be null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void copy_out(const std::vector<double>& v, double* out) { std::memcpy(out, v.data(), v.size() * sizeof(double)); }

void write_median(JsonWriter& w, const MedianEstimate& m) {
  w.begin_object()
      .field("value", m.value)
      .field("ci_lower", m.ci_lower)
      .field("ci_upper", m.ci_upper)
      .field("ci_halfwidth", m.ci_halfwidth)
      .field("n", static_cast<std::uint64_t>(m.n))
      .end_object();
}

std::vector<double> sample_dist(const RngState& rng, std::string_view dist, double alpha, double gamma, size_t n) {
  if (dist == "Z" || dist == "M" || dist == "K") {
    const Alpha a(alpha);
    if (dist == "Z") return draw(n, rng, [a](RngState& g) { return sample_positive_stable(a, g); });
    if (dist == "M") return draw(n, rng, [a](RngState& g) { return sample_mittag_leffler(a, g); });
    return draw(n, rng, [a](RngState& g) { return sample_kanter(a, g); });
  }
  if (dist == "S") return draw(n, rng, [](RngState& g) { return sample_log_stable_S(g); });
  if (dist == "L") return draw(n, rng, [](RngState& g) { return sample_exponential(g); });
  if (dist == "F") {
    if (!(gamma > 0.0)) throw std::domain_error("Frechet sampling requires gamma > 0");
    return draw(n, rng, [gamma](RngState& g) { return sample_frechet(gamma, g); });
  }
  throw std::invalid_argument("unknown distribution '" + std::string(dist) + "' (expected Z, M, K, S, L or F)");
}

// E[X^s] for the law sampled by sample_dist, with Z read as Z^{-1}.
double moment_oracle(std::string_view dist, double alpha, double gamma, double s) {
  if (dist == "Z") return moment_Z_negative(Alpha(alpha), s);
  if (dist == "M" || dist == "K") {
    const double a = Alpha(alpha).value();
    if (!(s > -1.0)) throw std::domain_error("moments of M and K require s > -1");
    const double lm = log_gamma(1.0 + s) - log_gamma(1.0 + a * s);
    return std::exp(dist == "M" ? lm : lm - log_gamma(1.0 + (1.0 - a) * s));
  }
  if (dist == "S") {
    if (!(s >= 0.0)) throw std::domain_error("moments of S require s >= 0");
    return s == 0.0 ? 1.0 : std::pow(s / std::exp(1.0), s);
  }
  if (dist == "L") {
    if (!(s > -1.0)) throw std::domain_error("moments of L require s > -1");
    return std::tgamma(1.0 + s);
  }
  if (dist == "F") {
    if (!(gamma > 0.0)) throw std::domain_error("Frechet sampling requires gamma > 0");
    if (!(gamma * s < 1.0)) throw std::domain_error("moments of the Frechet law require gamma * s < 1");
    return std::tgamma(1.0 - gamma * s);
  }
  throw std::invalid_argument("unknown distribution '" + std::string(dist) + "' (expected Z, M, K, S, L or F)");
}

// Keeps only the steps of one order type (and the means for cx).
ChainReport filter_chain(ChainReport c, OrderClaim keep, const std::string& name) {
  ChainReport out;
  out.name = name;
  for (auto& s : c.steps)
    if (s.claim == keep) out.add(std::move(s));
  if (keep == OrderClaim::CxDominates)
    for (auto& m : c.means) out.add_mean(m.label, m.estimate, m.expected);
  return out;
}

Alpha single_alpha(const double* alphas, size_t count, const char* claim) {
  if (count != 1) throw std::invalid_argument(std::string(claim) + " takes exactly one alpha");
  return Alpha(alphas[0]);
}

std::pair<Alpha, Alpha> beta_alpha(const double* alphas, size_t count, const char* claim) {
  if (count != 2) throw std::invalid_argument(std::string(claim) + " takes two values: beta, alpha");
  return {Alpha(alphas[0]), Alpha(alphas[1])};
}

}  // namespace

extern "C" {

const char* so_version(void) { return "0.1.0"; }

const char* so_last_error(void) { return g_last_error.c_str(); }

void so_string_free(char* s) { std::free(s); }

unsigned so_thread_count(void) { return thread_count(); }

so_status so_rng_create(uint64_t seed, uint64_t stream, so_rng** out) {
  return guard([&] {
    require(out, "out");
    *out = new so_rng{RngState(seed, stream)};
  });
}

void so_rng_destroy(so_rng* rng) { delete rng; }

uint64_t so_rng_seed(const so_rng* rng) { return rng ? rng->state.seed() : 0; }

so_status so_sample(const so_rng* rng, const char* dist, double alpha, double gamma, size_t n, double* out) {
  return guard([&] {
    require(rng, "rng");
    require(dist, "dist");
    if (n > 0) require(out, "out");
    copy_out(sample_dist(rng->state, dist, alpha, gamma, n), out);
  });
}

so_status so_moments_json(const so_rng* rng, const char* dist, double alpha, double gamma, const double* s, size_t ns,
                          size_t n, int* all_pass, char** json) {
  return guard([&] {
    require(rng, "rng");
    require(dist, "dist");
    require(json, "json");
    if (ns > 0) require(s, "s");
    if (n < 2) throw std::invalid_argument("moments require n >= 2");
    const std::string_view d(dist);
    std::vector<double> expected(ns);
    for (size_t i = 0; i < ns; ++i) expected[i] = moment_oracle(d, alpha, gamma, s[i]);
    const auto x = sample_dist(rng->state, d, alpha, gamma, n);
    const bool inverse = d == "Z";
    JsonWriter w;
    bool ok = true;
    w.begin_array();
    for (size_t i = 0; i < ns; ++i) {
      const double si = s[i];
      const auto est = estimate_mean(x, [si, inverse](double v) { return std::pow(inverse ? 1.0 / v : v, si); });
      const bool pass = est.within(expected[i], 3.0);
      ok = ok && pass;
      w.begin_object()
          .field("s", si)
          .field("estimate", est.estimate)
          .field("std_error", est.std_error)
          .field("expected", expected[i])
          .field("z", est.z_score(expected[i]))
          .field("pass", pass)
          .end_object();
    }
    w.end_array();
    if (all_pass) *all_pass = ok ? 1 : 0;
    *json = dup(w.str());
  });
}

so_status so_ml_eval_json(double alpha, double x, int with_bounds, char** json) {
  return guard([&] {
    require(json, "json");
    const Alpha a(alpha);
    const auto e = ml_eval(a, x);
    JsonWriter w;
    w.begin_object().field("alpha", alpha).field("x", x).field("value", e.value);
    if (with_bounds) {
      const auto b = ml_bounds(a, x);
      w.field("lower", b.lower).field("upper", b.upper).field("bracketed", b.lower < e.value && e.value < b.upper);
    }
    w.field("regime", regime_name(e.regime)).field("est_abs_error", e.est_abs_error).end_object();
    *json = dup(w.str());
  });
}

so_status so_ml_bounds_json(double alpha, double x, char** json) {
  return guard([&] {
    require(json, "json");
    if (!(x >= 0.0 && std::isfinite(x))) throw std::domain_error("x must be finite and >= 0");
    const auto b = ml_bounds(Alpha(alpha), x);
    JsonWriter w;
    w.begin_object().field("alpha", alpha).field("x", x).field("lower", b.lower).field("upper", b.upper).end_object();
    *json = dup(w.str());
  });
}

so_status so_order_check_json(const so_rng* rng, const char* claim, const double* alphas, size_t count, size_t n,
                              int* pass, char** json) {
  return guard([&] {
    require(rng, "rng");
    require(claim, "claim");
    require(json, "json");
    if (count > 0) require(alphas, "alphas");
    const std::string c(claim);
    const std::span<const double> list(alphas, count);
    const RngState& g = rng->state;
    auto emit = [&](const ChainReport& r) {
      if (pass) *pass = r.pass ? 1 : 0;
      *json = dup(r.to_json());
    };
    if (c == "thmA-st") return emit(check_theorem_A_st(list, n, g));
    if (c == "thmA-cx") return emit(check_theorem_A_cx(list, n, g));
    if (c == "thmB") return emit(check_theorem_B(list, n, g));
    if (c == "thmC-st")
      return emit(filter_chain(check_theorem_C(single_alpha(alphas, count, claim), n, g), OrderClaim::StDominates, c));
    if (c == "thmC-cx")
      return emit(filter_chain(check_theorem_C(single_alpha(alphas, count, claim), n, g), OrderClaim::CxDominates, c));
    if (c == "mike") {
      const auto [b, a] = beta_alpha(alphas, count, claim);
      return emit(check_theorem_Mike(b, a, n, g));
    }
    if (c == "frechet-corollary") return emit(check_frechet_corollary(single_alpha(alphas, count, claim), n, g));
    for (KanterClaim k : {KanterClaim::StK, KanterClaim::CxK, KanterClaim::StKa, KanterClaim::CxKa}) {
      if (c != kanter_claim_name(k)) continue;
      const auto [b, a] = beta_alpha(alphas, count, claim);
      const auto all = kanter_ratio_certificates(b, a, 4096);
      for (const auto& cert : all) {
        if (cert.claim != k) continue;
        if (pass) *pass = cert.pass ? 1 : 0;
        *json = dup(kanter_certificates_json({cert}));
        return;
      }
      throw std::domain_error(c + " requires beta < alpha <= 1/2");
    }
    throw std::invalid_argument("unknown claim '" + c +
                                "' (expected thmA-st, thmA-cx, thmB, thmC-st, thmC-cx, mike, kanter-stK, kanter-cxK, "
                                "kanter-stKa, kanter-cxKa or frechet-corollary)");
  });
}

so_status so_median_json(const so_rng* rng, const char* dist, double alpha, size_t n, int with_bounds,
                         int use_certified_ms, char** json) {
  return guard([&] {
    require(rng, "rng");
    require(dist, "dist");
    require(json, "json");
    const MedianDist d = parse_median_dist(dist);
    const bool needs_alpha = d == MedianDist::Z || d == MedianDist::M;
    std::optional<Alpha> a;
    if (needs_alpha || with_bounds) a = Alpha(alpha);
    if (with_bounds && d != MedianDist::Z) throw std::invalid_argument("--bounds applies to the median of Z only");
    const auto m = estimate_median(d, needs_alpha ? a : std::nullopt, n, rng->state);
    JsonWriter w;
    w.begin_object().field("dist", median_dist_name(d));
    if (needs_alpha) w.field("alpha", alpha);
    w.key("median");
    write_median(w, m);
    if (with_bounds) {
      double ms = median_S_ceiling();
      std::optional<MedianEstimate> ms_est;
      if (!use_certified_ms) {
        ms_est = estimate_m_S(std::max<size_t>(n, 1000000), rng->state.substream_for(0x6d53));
        ms = ms_est->value;
      }
      const auto b = median_bounds(*a, ms);
      w.key("m_S").begin_object().field("value", ms).field("source", ms_est ? "estimate" : "certified");
      if (ms_est) {
        w.key("estimate");
        write_median(w, *ms_est);
      }
      w.end_object();
      w.key("bounds").raw(b.to_json());
      w.field("within_bounds",
              m.value >= b.best_lower() - m.ci_halfwidth && m.value <= b.upper + m.ci_halfwidth);
    }
    w.end_object();
    *json = dup(w.str());
  });
}

so_status so_mmm_check_json(const so_rng* rng, double alpha, size_t n, int* pass, int* covered, char** json) {
  return guard([&] {
    require(rng, "rng");
    require(json, "json");
    const auto r = check_mmm_inequalities(Alpha(alpha), n, rng->state);
    if (pass) *pass = r.pass ? 1 : 0;
    if (covered) *covered = r.covered ? 1 : 0;
    *json = dup(r.to_json());
  });
}

so_status so_plan_create(int p, int n, const char* kind, so_plan** out) {
  return guard([&] {
    require(kind, "kind");
    require(out, "out");
    const RationalAlpha r(p, n);
    const std::string k(kind);
    if (k == "beta-gamma")
      *out = new so_plan{build_beta_gamma_plan(r)};
    else if (k == "beta")
      *out = new so_plan{build_beta_plan(r)};
    else if (k == "K")
      *out = new so_plan{build_K_np_plan(r)};
    else
      throw std::invalid_argument("unknown plan kind '" + k + "' (expected beta-gamma, beta or K)");
  });
}

void so_plan_destroy(so_plan* plan) { delete plan; }

so_status so_plan_json(const so_plan* plan, char** json) {
  return guard([&] {
    require(plan, "plan");
    require(json, "json");
    *json = dup(plan->plan.to_json());
  });
}

so_status so_plan_sample(const so_plan* plan, const so_rng* rng, size_t n, double* out) {
  return guard([&] {
    require(plan, "plan");
    require(rng, "rng");
    if (n > 0) require(out, "out");
    const auto& p = plan->plan;
    copy_out(draw(n, rng->state, [&p](RngState& g) { return p.sample(g); }), out);
  });
}

so_status so_plan_moment(const so_plan* plan, double s, double* out) {
  return guard([&] {
    require(plan, "plan");
    require(out, "out");
    *out = plan->plan.analytic_moment(s);
  });
}

so_status so_plan_target_moment(int p, int n, double s, double* out) {
  return guard([&] {
    require(out, "out");
    *out = plan_target_moment(RationalAlpha(p, n), s);
  });
}

so_status so_branch_sample(const so_rng* rng, double alpha, double rho, size_t n, double* out) {
  return guard([&] {
    require(rng, "rng");
    if (n > 0) require(out, "out");
    copy_out(sample_branch_batch({alpha, rho}, n, rng->state), out);
  });
}

so_status so_branch_density_json(double rho, double x, char** json) {
  return guard([&] {
    require(json, "json");
    if (!(x >= 0.0)) throw std::domain_error("branch density requires x >= 0");
    JsonWriter w;
    w.begin_object()
        .field("rho", rho)
        .field("x", x)
        .field("c_rho", cauchy_branch_scale(rho))
        .field("density", cauchy_branch_density(rho, x))
        .field("cdf", cauchy_branch_cdf(rho, x))
        .end_object();
    *json = dup(w.str());
  });
}

so_status so_repro_json(const char* suite, uint64_t seed, int include_runtime, so_progress_fn progress, void* user,
                        int* all_pass, char** json) {
  return guard([&] {
    require(suite, "suite");
    require(json, "json");
    std::function<void(const CriterionResult&)> cb;
    if (progress) {
      cb = [&](const CriterionResult& r) {
        progress(r.id, std::string(status_name(r.status)).c_str(), r.runtime_ms, user);
      };
    }
    const auto rep = run_repro(suite, seed, cb);
    if (all_pass) *all_pass = rep.all_pass() ? 1 : 0;
    *json = dup(rep.to_json(include_runtime != 0));
  });
}

}  // extern "C"
