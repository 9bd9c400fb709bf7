#ifndef STABLEORDERS_REPRO_HPP
#define STABLEORDERS_REPRO_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace stableorders {

enum class CriterionStatus { Pass, Fail, Inconclusive };
std::string_view status_name(CriterionStatus s);

/// One numeric comparison inside a criterion. Non-finite fields print as null.
struct SubCheck {
  std::string name;
  bool pass;
  double observed;
  double expected;
  double tolerance;
  bool inconclusive = false;
};

struct CriterionResult {
  int id;
  std::string name;
  CriterionStatus status;
  std::string observed;
  std::string expected;
  std::string tolerance;
  double runtime_ms;
  std::vector<SubCheck> checks;
};

inline constexpr int kCriterionCount = 11;

/// Runs acceptance criterion `id` (1..11). Criterion k draws from RngState(seed, k).
CriterionResult run_criterion(int id, std::uint64_t seed);

/// Short title of criterion `id`.
std::string_view criterion_title(int id);

struct ReproReport {
  std::uint64_t seed;
  std::string suite;
  std::vector<CriterionResult> criteria;

  bool all_pass() const;
  /// runtime_ms is omitted when include_runtime is false, giving byte-stable output.
  std::string to_json(bool include_runtime = true) const;
};

/// suite: "all" or a comma-separated list of ids, e.g. "2,3,7". Throws
/// std::invalid_argument for anything else. `progress` is called after each
/// criterion finishes.
ReproReport run_repro(std::string_view suite, std::uint64_t seed,
                      const std::function<void(const CriterionResult&)>& progress = {});

}  // namespace stableorders

#endif
