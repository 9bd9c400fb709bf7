#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stableorders/stableorders.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Carries a library failure out to main, which prints it and exits 2.
struct LibraryError {
  std::string message;
};

void check(so_status s) {
  if (s != SO_OK) throw LibraryError{so_last_error()};
}

std::string number(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

// Owns a string returned by the C API.
struct CString {
  char* p = nullptr;
  ~CString() { so_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct Rng {
  so_rng* h = nullptr;
  explicit Rng(std::uint64_t seed) { check(so_rng_create(seed, 0, &h)); }
  ~Rng() { so_rng_destroy(h); }
};

/// {"command": ..., <fields>, "result": <json>}
class Envelope {
 public:
  explicit Envelope(const std::string& command) { text_ = "{\"command\":" + quoted(command); }
  Envelope& field(const std::string& k, const std::string& raw_json) {
    text_ += "," + quoted(k) + ":" + raw_json;
    return *this;
  }
  Envelope& num(const std::string& k, double v) { return field(k, number(v)); }
  Envelope& uint(const std::string& k, std::uint64_t v) { return field(k, std::to_string(v)); }
  Envelope& str(const std::string& k, const std::string& v) { return field(k, quoted(v)); }
  std::string close(const std::string& result) { return text_ + ",\"result\":" + result + "}\n"; }

 private:
  std::string text_;
};

struct Output {
  std::string file;
  std::string dir;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--out", file, "Write output to this file instead of stdout");
    cmd->add_option("--out-dir", dir, "Directory for output files (default name per command)");
  }

  void write(const std::string& text, const std::string& default_name, bool binary = false) const {
    std::filesystem::path path;
    if (!dir.empty()) {
      std::filesystem::create_directories(dir);
      path = std::filesystem::path(dir) / (file.empty() ? default_name : file);
    } else if (!file.empty()) {
      path = file;
    }
    if (path.empty()) {
      std::cout << text;
      std::cout.flush();
      return;
    }
    std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
    if (!out) throw LibraryError{"cannot open output file " + path.string()};
    out << text;
  }
};

std::string values_json(const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + number(v[i]);
  return s + "]";
}

std::string values_csv(const std::vector<double>& v) {
  std::string s = "value\n";
  for (double x : v) s += number(x) + "\n";
  return s;
}

std::string values_binary(const std::vector<double>& v) {
  return std::string(reinterpret_cast<const char*>(v.data()), v.size() * sizeof(double));
}

void emit_samples(const Output& out, const std::string& format, const std::vector<double>& v, Envelope env,
                  const std::string& stem) {
  if (format == "csv")
    out.write(values_csv(v), stem + ".csv");
  else if (format == "bin")
    out.write(values_binary(v), stem + ".bin", true);
  else
    out.write(env.close(values_json(v)), stem + ".json");
}

void progress(int id, const char* status, double ms, void*) {
  std::fprintf(stderr, "criterion %2d: %-12s %9.0f ms\n", id, status, ms);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Samplers, special functions and order checks for positive stable laws"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(so_version()));

  std::uint64_t seed = 42;
  std::size_t n = 1000000;
  double alpha = std::nan(""), gamma = std::nan(""), rho = std::nan(""), x = std::nan("");
  std::string dist, format = "json", claim, kind = "beta-gamma", suite = "all";
  std::vector<double> alphas, powers;
  int plan_n = 0, plan_p = 0;
  bool bounds = false, certified_ms = false, no_timing = false;
  Output out;

  auto* sample = app.add_subcommand("sample", "Draw from Z, M, K, S, L or F");
  sample->add_option("--dist", dist, "Z, M, K, S, L or F")->required();
  sample->add_option("--alpha", alpha, "Stability index in (0,1)");
  sample->add_option("--gamma", gamma, "Frechet exponent");
  sample->add_option("--n", n, "Number of draws")->check(CLI::PositiveNumber);
  sample->add_option("--format", format, "json, csv or bin")->check(CLI::IsMember({"json", "csv", "bin"}));
  sample->add_option("--seed", seed, "RNG seed");
  out.add_to(sample);

  auto* moments = app.add_subcommand("moments", "Monte Carlo moments against closed forms");
  moments->add_option("--dist", dist, "Z (moments of 1/Z), M, K, S, L or F")->required();
  moments->add_option("--alpha", alpha, "Stability index in (0,1)");
  moments->add_option("--gamma", gamma, "Frechet exponent");
  moments->add_option("--s", powers, "Comma-separated powers")->delimiter(',')->required();
  moments->add_option("--n", n, "Number of draws")->check(CLI::PositiveNumber);
  moments->add_option("--seed", seed, "RNG seed");
  out.add_to(moments);

  auto* ml_eval = app.add_subcommand("ml-eval", "Evaluate E_alpha(-x)");
  ml_eval->add_option("--alpha", alpha)->required();
  ml_eval->add_option("--x", x)->required();
  ml_eval->add_flag("--bounds", bounds, "Add the optimal two-sided bounds");
  out.add_to(ml_eval);

  auto* ml_bounds = app.add_subcommand("ml-bounds", "Bounds 1/(1+G(1-a)x) <= E_a(-x) <= 1/(1+x/G(1+a))");
  ml_bounds->add_option("--alpha", alpha)->required();
  ml_bounds->add_option("--x", x)->required();
  out.add_to(ml_bounds);

  auto* order = app.add_subcommand("order-check", "Empirical stochastic / convex order checks");
  order->add_option("--claim", claim,
                    "thmA-st, thmA-cx, thmB, thmC-st, thmC-cx, mike, kanter-stK, kanter-cxK, kanter-stKa, "
                    "kanter-cxKa, frechet-corollary")
      ->required();
  order->add_option("--alphas", alphas, "Comma-separated alphas; (beta,alpha) for mike and kanter-*")
      ->delimiter(',')
      ->required();
  order->add_option("--n", n, "Draws per law");
  order->add_option("--seed", seed, "RNG seed");
  out.add_to(order);

  auto* median = app.add_subcommand("median", "Median with a 99% order-statistic CI");
  median->add_option("--dist", dist, "Z, M, S or L")->required();
  median->add_option("--alpha", alpha);
  median->add_option("--n", n);
  median->add_option("--seed", seed);
  median->add_flag("--bounds", bounds, "Add the median bounds (Z only)");
  median->add_flag("--ms-certified", certified_ms, "Use m_S = 0.2274682 instead of a fresh estimate");
  out.add_to(median);

  auto* mmm = app.add_subcommand("mmm-check", "Mean, median and mode inequalities for M_alpha and Z_alpha");
  mmm->add_option("--alpha", alpha)->required();
  mmm->add_option("--n", n);
  mmm->add_option("--seed", seed);
  out.add_to(mmm);

  auto* factorize = app.add_subcommand("factorize", "Beta-Gamma plan for Z_{p/n}^{-p}");
  factorize->add_option("--n", plan_n)->required();
  factorize->add_option("--p", plan_p)->required();
  factorize->add_option("--kind", kind, "beta-gamma, beta or K")->check(CLI::IsMember({"beta-gamma", "beta", "K"}));
  factorize->add_option("--s", powers, "Also report analytic and target moments at these powers")->delimiter(',');
  out.add_to(factorize);

  auto* branch = app.add_subcommand("branch", "Draw from the positive branch X+(alpha, rho)");
  branch->add_option("--alpha", alpha)->required();
  branch->add_option("--rho", rho)->required();
  branch->add_option("--n", n)->check(CLI::PositiveNumber);
  branch->add_option("--seed", seed);
  branch->add_option("--format", format, "json, csv or bin")->check(CLI::IsMember({"json", "csv", "bin"}));
  out.add_to(branch);

  auto* bdens = app.add_subcommand("branch-density", "Closed-form density and CDF of c_rho X+(1, rho)");
  bdens->add_option("--rho", rho)->required();
  bdens->add_option("--x", x)->required();
  out.add_to(bdens);

  auto* repro = app.add_subcommand("repro", "Run the acceptance suite");
  repro->add_option("--suite", suite, "all or comma-separated criterion ids");
  repro->add_option("--seed", seed);
  repro->add_flag("--no-timing", no_timing, "Leave runtime_ms out for byte-stable output");
  out.add_to(repro);

  // Per-command defaults that differ from the globals.
  sample->preparse_callback([&](std::size_t) { n = 10, seed = 1; });
  branch->preparse_callback([&](std::size_t) { n = 10, seed = 1; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    if (argc > 1 && !app.get_subcommands().size()) std::cerr << app.help();
    return kExitUsage;
  }

  try {
    if (*sample) {
      Rng rng(seed);
      std::vector<double> v(n);
      check(so_sample(rng.h, dist.c_str(), alpha, gamma, n, v.data()));
      Envelope env("sample");
      env.str("dist", dist).num("alpha", alpha).num("gamma", gamma).uint("n", n).uint("seed", seed);
      emit_samples(out, format, v, env, "sample");
      return kExitOk;
    }
    if (*moments) {
      Rng rng(seed);
      CString js;
      int pass = 0;
      check(so_moments_json(rng.h, dist.c_str(), alpha, gamma, powers.data(), powers.size(), n, &pass, &js.p));
      Envelope env("moments");
      env.str("dist", dist).num("alpha", alpha).num("gamma", gamma).uint("n", n).uint("seed", seed);
      env.field("pass", pass ? "true" : "false");
      out.write(env.close(js.str()), "moments.json");
      return pass ? kExitOk : kExitCheckFailed;
    }
    if (*ml_eval) {
      CString js;
      check(so_ml_eval_json(alpha, x, bounds ? 1 : 0, &js.p));
      out.write(js.str() + "\n", "ml-eval.json");
      if (bounds && js.str().find("\"bracketed\":false") != std::string::npos) return kExitCheckFailed;
      return kExitOk;
    }
    if (*ml_bounds) {
      CString js;
      check(so_ml_bounds_json(alpha, x, &js.p));
      out.write(js.str() + "\n", "ml-bounds.json");
      return kExitOk;
    }
    if (*order) {
      Rng rng(seed);
      CString js;
      int pass = 0;
      check(so_order_check_json(rng.h, claim.c_str(), alphas.data(), alphas.size(), n, &pass, &js.p));
      Envelope env("order-check");
      env.str("claim", claim).field("alphas", values_json(alphas)).uint("n", n).uint("seed", seed);
      env.field("pass", pass ? "true" : "false");
      out.write(env.close(js.str()), "order-check.json");
      return pass ? kExitOk : kExitCheckFailed;
    }
    if (*median) {
      Rng rng(seed);
      CString js;
      check(so_median_json(rng.h, dist.c_str(), alpha, n, bounds ? 1 : 0, certified_ms ? 1 : 0, &js.p));
      Envelope env("median");
      env.uint("n", n).uint("seed", seed);
      out.write(env.close(js.str()), "median.json");
      if (bounds && js.str().find("\"within_bounds\":false") != std::string::npos) return kExitCheckFailed;
      return kExitOk;
    }
    if (*mmm) {
      Rng rng(seed);
      CString js;
      int pass = 0, covered = 0;
      check(so_mmm_check_json(rng.h, alpha, n, &pass, &covered, &js.p));
      Envelope env("mmm-check");
      env.uint("n", n).uint("seed", seed);
      out.write(env.close(js.str()), "mmm-check.json");
      return !covered || pass ? kExitOk : kExitCheckFailed;
    }
    if (*factorize) {
      so_plan* plan = nullptr;
      check(so_plan_create(plan_p, plan_n, kind.c_str(), &plan));
      std::unique_ptr<so_plan, void (*)(so_plan*)> owner(plan, so_plan_destroy);
      CString js;
      check(so_plan_json(plan, &js.p));
      Envelope env("factorize");
      env.uint("n", static_cast<std::uint64_t>(plan_n)).uint("p", static_cast<std::uint64_t>(plan_p)).str("kind", kind);
      if (!powers.empty()) {
        std::string rows = "[";
        for (std::size_t i = 0; i < powers.size(); ++i) {
          double analytic = 0.0, target = 0.0;
          check(so_plan_moment(plan, powers[i], &analytic));
          rows += std::string(i ? "," : "") + "{\"s\":" + number(powers[i]) + ",\"analytic\":" + number(analytic);
          if (kind != "K") {
            check(so_plan_target_moment(plan_p, plan_n, powers[i], &target));
            rows += ",\"target\":" + number(target);
          }
          rows += "}";
        }
        env.field("moments", rows + "]");
      }
      out.write(env.close(js.str()), "factorize.json");
      return kExitOk;
    }
    if (*branch) {
      Rng rng(seed);
      std::vector<double> v(n);
      check(so_branch_sample(rng.h, alpha, rho, n, v.data()));
      Envelope env("branch");
      env.num("alpha", alpha).num("rho", rho).uint("n", n).uint("seed", seed);
      emit_samples(out, format, v, env, "branch");
      return kExitOk;
    }
    if (*bdens) {
      CString js;
      check(so_branch_density_json(rho, x, &js.p));
      out.write(js.str() + "\n", "branch-density.json");
      return kExitOk;
    }
    if (*repro) {
      CString js;
      int pass = 0;
      check(so_repro_json(suite.c_str(), seed, no_timing ? 0 : 1, progress, nullptr, &pass, &js.p));
      out.write(js.str() + "\n", "repro.json");
      return pass ? kExitOk : kExitCheckFailed;
    }
  } catch (const LibraryError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cerr << app.help();
  return kExitUsage;
}
