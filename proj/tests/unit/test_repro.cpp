#include <doctest.h>

#include <stdexcept>

#include "stableorders/repro.hpp"

using namespace stableorders;

TEST_CASE("suite parsing") {
  CHECK_THROWS_AS(run_repro("12", 42), std::invalid_argument);
  CHECK_THROWS_AS(run_repro("", 42), std::invalid_argument);
  CHECK_THROWS_AS(run_repro("3,,4", 42), std::invalid_argument);
  CHECK_THROWS_AS(run_criterion(0, 42), std::invalid_argument);
  for (int k = 1; k <= kCriterionCount; ++k) CHECK_FALSE(criterion_title(k).empty());
}

TEST_CASE("deterministic report without timing") {
  int calls = 0;
  const auto a = run_repro("3", 42, [&](const CriterionResult&) { ++calls; });
  const auto b = run_repro("3", 42);
  CHECK(calls == 1);
  REQUIRE(a.criteria.size() == 1);
  CHECK(a.criteria[0].id == 3);
  CHECK(a.criteria[0].status == CriterionStatus::Pass);
  CHECK(a.all_pass());
  CHECK(a.to_json(false) == b.to_json(false));
  CHECK(a.to_json(false).find("runtime_ms") == std::string::npos);
  CHECK(a.to_json(true).find("runtime_ms") != std::string::npos);
}
