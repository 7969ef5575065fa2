#pragma once
// The acceptance suites behind `tyinv selftest` and the acceptance test
// binary. Each suite is a self-contained sweep with pass/fail bookkeeping.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace tyinv::harness {

enum class SuiteLevel { Quick, Full };

struct SuiteOptions {
  SuiteLevel level = SuiteLevel::Full;
  std::uint64_t seed = 20240601;
  int parallelism = 1;
  /// Runs the pentagon suite against a deliberately broken associator, so
  /// that suite must report failure.
  bool corrupt_associator = false;
};

struct SuiteResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  /// Wall-clock budget in seconds; 0 when the suite has none.
  double budget = 0.0;
  std::int64_t checks = 0;
  std::int64_t failures = 0;
  std::string summary;
  /// At most a handful of failure descriptions.
  std::vector<std::string> failure_samples;
};

inline constexpr int kSuiteCount = 9;

/// Suites run by a level: 1..6 for Quick, 1..9 for Full.
std::vector<int> suites_for(SuiteLevel level);

std::string suite_name(int id);

/// Runs one suite. Throws InvalidInput for an unknown id.
SuiteResult run_suite(int id, const SuiteOptions& options);

/// Runs the suites in order; `on_done` (if set) sees each result as it lands.
std::vector<SuiteResult> run_suites(const std::vector<int>& ids, const SuiteOptions& options,
                                    const std::function<void(const SuiteResult&)>& on_done = {});

/// {"passed":..., "suites":[{"id":..,"name":..,"passed":..,"checks":..,
/// "failures":..,"failure_samples":[...]}]}; timings are left out.
std::string results_to_json(const std::vector<SuiteResult>& results);

}  // namespace tyinv::harness
