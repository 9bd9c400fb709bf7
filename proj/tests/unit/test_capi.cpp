#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include "stableorders/stableorders.h"

namespace {
struct Json {
  char* p = nullptr;
  ~Json() { so_string_free(p); }
  std::string str() const { return p ? p : ""; }
};
}  // namespace

TEST_CASE("rng handles and sampling") {
  so_rng* rng = nullptr;
  REQUIRE(so_rng_create(42, 0, &rng) == SO_OK);
  CHECK(so_rng_seed(rng) == 42);
  std::vector<double> a(1000), b(1000);
  CHECK(so_sample(rng, "Z", 0.5, 0.0, a.size(), a.data()) == SO_OK);
  CHECK(so_sample(rng, "Z", 0.5, 0.0, b.size(), b.data()) == SO_OK);
  CHECK(a == b);
  for (const char* d : {"M", "K", "S", "L"}) CHECK(so_sample(rng, d, 0.4, 0.0, 10, a.data()) == SO_OK);
  CHECK(so_sample(rng, "F", 0.0, 2.0, 10, a.data()) == SO_OK);
  so_rng_destroy(rng);
}

TEST_CASE("error codes and last error") {
  so_rng* rng = nullptr;
  REQUIRE(so_rng_create(1, 0, &rng) == SO_OK);
  double out[4];
  CHECK(so_sample(rng, "Z", 1.5, 0.0, 4, out) == SO_ERR_DOMAIN);
  CHECK(std::string(so_last_error()).find("alpha") != std::string::npos);
  CHECK(so_sample(rng, "Q", 0.5, 0.0, 4, out) == SO_ERR_INVALID_ARGUMENT);
  CHECK(so_sample(nullptr, "Z", 0.5, 0.0, 4, out) == SO_ERR_INVALID_ARGUMENT);
  CHECK(so_sample(rng, "F", 0.5, -1.0, 4, out) == SO_ERR_DOMAIN);
  Json j;
  CHECK(so_ml_eval_json(0.5, -1.0, 0, &j.p) == SO_ERR_DOMAIN);
  CHECK(j.p == nullptr);
  CHECK(so_rng_create(1, 0, nullptr) == SO_ERR_INVALID_ARGUMENT);
  so_rng_destroy(rng);
}

TEST_CASE("ml json") {
  Json j;
  REQUIRE(so_ml_eval_json(0.5, 1.0, 1, &j.p) == SO_OK);
  const auto s = j.str();
  CHECK(s.find("\"value\":0.42758357") != std::string::npos);
  CHECK(s.find("\"bracketed\":true") != std::string::npos);
  Json b;
  REQUIRE(so_ml_bounds_json(0.5, 1.0, &b.p) == SO_OK);
  CHECK(b.str().find("\"lower\"") != std::string::npos);
}

TEST_CASE("plans through the C interface") {
  so_plan* plan = nullptr;
  REQUIRE(so_plan_create(3, 5, "beta-gamma", &plan) == SO_OK);
  double m = 0.0, t = 0.0;
  CHECK(so_plan_moment(plan, 1.0, &m) == SO_OK);
  CHECK(so_plan_target_moment(3, 5, 1.0, &t) == SO_OK);
  CHECK(m == doctest::Approx(20.0));
  CHECK(t == doctest::Approx(20.0));
  Json j;
  CHECK(so_plan_json(plan, &j.p) == SO_OK);
  CHECK(j.str().front() == '{');
  so_plan_destroy(plan);
  CHECK(so_plan_create(5, 3, "beta", &plan) != SO_OK);
  CHECK(so_plan_create(1, 3, "other", &plan) == SO_ERR_INVALID_ARGUMENT);
}

TEST_CASE("order checks and medians") {
  so_rng* rng = nullptr;
  REQUIRE(so_rng_create(42, 0, &rng) == SO_OK);
  const double alphas[] = {0.4};
  int pass = 0;
  Json j;
  REQUIRE(so_order_check_json(rng, "thmC-st", alphas, 1, 20000, &pass, &j.p) == SO_OK);
  CHECK(pass == 1);
  Json bad;
  CHECK(so_order_check_json(rng, "nope", alphas, 1, 20000, &pass, &bad.p) == SO_ERR_INVALID_ARGUMENT);
  Json med;
  REQUIRE(so_median_json(rng, "Z", 0.5, 100000, 1, 1, &med.p) == SO_OK);
  CHECK(med.str().find("within_bounds") != std::string::npos);
  so_rng_destroy(rng);
}

TEST_CASE("branches") {
  so_rng* rng = nullptr;
  REQUIRE(so_rng_create(3, 0, &rng) == SO_OK);
  double out[16];
  CHECK(so_branch_sample(rng, 1.0, 0.5, 16, out) == SO_OK);
  CHECK(so_branch_sample(rng, 1.5, 0.8, 16, out) == SO_ERR_DOMAIN);
  Json j;
  CHECK(so_branch_density_json(0.5, 0.0, &j.p) == SO_OK);
  CHECK(j.str().find("\"density\":0.405284") != std::string::npos);
  so_rng_destroy(rng);
}

TEST_CASE("repro suite parsing") {
  Json j;
  int all = 0;
  CHECK(so_repro_json("0", 42, 0, nullptr, nullptr, &all, &j.p) == SO_ERR_INVALID_ARGUMENT);
  CHECK(so_repro_json("x", 42, 0, nullptr, nullptr, &all, &j.p) == SO_ERR_INVALID_ARGUMENT);
  CHECK(so_thread_count() >= 1);
  CHECK(std::strlen(so_version()) > 0);
}
