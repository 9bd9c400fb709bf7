#include "stableorders/factorization.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "stableorders/json_writer.hpp"
#include "stableorders/special.hpp"

namespace stableorders {

RationalAlpha::RationalAlpha(int p_, int n_) : p(p_), n(n_) {
  if (!(p >= 1 && p < n)) throw std::domain_error("rational alpha p/n requires 1 <= p < n");
}

std::vector<int> compute_q_indices(RationalAlpha r) {
  std::vector<int> q(r.p + 1);
  q[0] = 0;
  q[r.p] = r.n;
  for (int j = 1; j < r.p; ++j) {
    // largest i with i p < j n
    const long long jn = static_cast<long long>(j) * r.n;
    q[j] = static_cast<int>((jn + r.p - 1) / r.p - 1);
  }
  return q;
}

std::vector<int> interior_offsets(RationalAlpha r) {
  const auto q = compute_q_indices(r);
  std::vector<int> out;
  out.reserve(r.n - r.p);
  for (int j = 0; j < r.p; ++j)
    for (int i = q[j] + 1; i <= q[j + 1] - 1; ++i) out.push_back(i - j);
  return out;
}

FactorizationPlan::FactorizationPlan(double log_prefactor, std::vector<Factor> factors)
    : log_prefactor_(log_prefactor), factors_(std::move(factors)) {
  for (const auto& f : factors_) {
    const bool ok = f.kind == FactorKind::Beta ? (f.a > 0.0 && f.b > 0.0) : f.a > 0.0;
    if (!ok) throw std::domain_error("factorization plan factor has a non-positive parameter");
  }
}

double FactorizationPlan::prefactor() const { return std::exp(log_prefactor_); }

FactorizationPlan FactorizationPlan::raised(double power) const {
  auto fs = factors_;
  for (auto& f : fs) f.exponent *= power;
  return FactorizationPlan(log_prefactor_ * power, std::move(fs));
}

double FactorizationPlan::sample_log(RngState& rng) const {
  double acc = log_prefactor_;
  for (const auto& f : factors_) {
    switch (f.kind) {
      case FactorKind::Beta: acc += f.exponent * sample_log_beta_variate(f.a, f.b, rng); break;
      case FactorKind::Gamma: acc += f.exponent * sample_log_gamma_variate(f.a, rng); break;
      case FactorKind::ExpPower: acc += f.exponent * f.a * std::log(sample_exponential(rng)); break;
    }
  }
  return acc;
}

double FactorizationPlan::sample(RngState& rng) const { return std::exp(sample_log(rng)); }

double FactorizationPlan::analytic_moment(double s) const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  double acc = log_prefactor_ * s;
  for (const auto& f : factors_) {
    const double t = s * f.exponent;
    switch (f.kind) {
      case FactorKind::Beta:
        if (!(f.a + t > 0.0)) return inf;
        acc += log_gamma(f.a + t) + log_gamma(f.a + f.b) - log_gamma(f.a) - log_gamma(f.a + f.b + t);
        break;
      case FactorKind::Gamma:
        if (!(f.a + t > 0.0)) return inf;
        acc += log_gamma(f.a + t) - log_gamma(f.a);
        break;
      case FactorKind::ExpPower:
        if (!(1.0 + f.a * t > 0.0)) return inf;
        acc += log_gamma(1.0 + f.a * t);
        break;
    }
  }
  return std::exp(acc);
}

std::string FactorizationPlan::to_json() const {
  JsonWriter w;
  w.begin_object().field("prefactor", prefactor()).field("log_prefactor", log_prefactor_);
  w.key("factors").begin_array();
  for (const auto& f : factors_) {
    w.begin_object();
    switch (f.kind) {
      case FactorKind::Beta:
        w.field("kind", "Beta").key("params").begin_array().value(f.a).value(f.b).end_array();
        break;
      case FactorKind::Gamma:
        w.field("kind", "Gamma").key("params").begin_array().value(f.a).end_array();
        break;
      case FactorKind::ExpPower:
        w.field("kind", "ExpPower").key("params").begin_array().value(f.a).end_array();
        break;
    }
    w.field("exponent", f.exponent).end_object();
  }
  w.end_array().end_object();
  return w.str();
}

namespace {

double nlogn(int k) { return k * std::log(static_cast<double>(k)); }

// B_{q_j/n, j/p - q_j/n} for j = 1..p-1.
void append_edge_betas(RationalAlpha r, const std::vector<int>& q, std::vector<Factor>& out) {
  for (int j = 1; j < r.p; ++j) {
    const double a = static_cast<double>(q[j]) / r.n;
    const double b = static_cast<double>(j) / r.p - a;
    out.push_back({FactorKind::Beta, a, b, 1.0});
  }
}

std::vector<Factor> beta_only_factors(RationalAlpha r) {
  const auto q = compute_q_indices(r);
  const int m = r.n - r.p;
  std::vector<Factor> fs;
  for (int j = 0; j < r.p; ++j) {
    for (int i = q[j] + 1; i <= q[j + 1] - 1; ++i) {
      const double a = static_cast<double>(i) / r.n;
      // (i-j)/(n-p) - i/n = (p i - j n)/(n (n-p)) > 0 by the choice of q_j
      const double b = static_cast<double>(static_cast<long long>(r.p) * i - static_cast<long long>(j) * r.n) /
                       (static_cast<double>(r.n) * m);
      fs.push_back({FactorKind::Beta, a, b, 1.0});
    }
  }
  append_edge_betas(r, q, fs);
  return fs;
}

}  // namespace

FactorizationPlan build_beta_gamma_plan(RationalAlpha r) {
  const auto q = compute_q_indices(r);
  std::vector<Factor> fs;
  for (int j = 0; j < r.p; ++j)
    for (int i = q[j] + 1; i <= q[j + 1] - 1; ++i)
      fs.push_back({FactorKind::Gamma, static_cast<double>(i) / r.n, 0.0, 1.0});
  append_edge_betas(r, q, fs);
  return FactorizationPlan(nlogn(r.n) - nlogn(r.p), std::move(fs));
}

FactorizationPlan build_beta_plan(RationalAlpha r) {
  std::vector<Factor> fs{{FactorKind::ExpPower, static_cast<double>(r.n - r.p), 0.0, 1.0}};
  for (auto& f : beta_only_factors(r)) fs.push_back(f);
  return FactorizationPlan(nlogn(r.n) - nlogn(r.p) - nlogn(r.n - r.p), std::move(fs));
}

FactorizationPlan build_K_np_plan(RationalAlpha r) {
  return FactorizationPlan(nlogn(r.n) - nlogn(r.p) - nlogn(r.n - r.p), beta_only_factors(r));
}

double plan_target_moment(RationalAlpha r, double s) {
  return std::exp(log_gamma(1.0 + r.n * s) - log_gamma(1.0 + r.p * s));
}

double binomial_moment_X(double p_real, int nth) {
  if (!(p_real >= 1.0)) throw std::domain_error("binomial_moment_X requires p >= 1");
  if (nth < 0) throw std::domain_error("binomial_moment_X requires a non-negative order");
  if (nth == 0) return 1.0;
  return std::exp(log_gamma(1.0 + nth * p_real) - log_gamma(1.0 + nth * (p_real - 1.0)) - log_gamma(1.0 + nth));
}

namespace {

void check_joe(Alpha beta, Alpha alpha) {
  if (!(beta.value() < alpha.value())) throw std::domain_error("the identity requires 0 < beta < alpha < 1");
}

}  // namespace

double joe_moment(Alpha beta, Alpha alpha, double s) {
  check_joe(beta, alpha);
  const double a = alpha.value(), b = beta.value();
  return std::exp(log_gamma(1.0 + s) - log_gamma(1.0 + (1.0 - a) * s) - log_gamma(1.0 + b * s));
}

double sample_joe_left(Alpha beta, Alpha alpha, RngState& rng) {
  check_joe(beta, alpha);
  const Alpha g((1.0 - alpha.value()) / (1.0 - beta.value()));
  const double lz = sample_log_positive_stable(g, rng);
  return std::exp((alpha.value() - 1.0) * lz) * sample_kanter(beta, rng);
}

double sample_joe_right(Alpha beta, Alpha alpha, RngState& rng) {
  check_joe(beta, alpha);
  const Alpha g(beta.value() / alpha.value());
  const double lz = sample_log_positive_stable(g, rng);
  return std::exp(-beta.value() * lz) * sample_kanter(alpha, rng);
}

double legendre_gauss_residual(double z, int p) {
  const double lhs = 0.5 * (p - 1) * std::log(2.0 * kPi) + (0.5 - z) * std::log(static_cast<double>(p)) + log_gamma(z);
  double rhs = 0.0;
  for (int k = 0; k < p; ++k) rhs += log_gamma((z + k) / p);
  return std::fabs(std::expm1(lhs - rhs));
}

}  // namespace stableorders
