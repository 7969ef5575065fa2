// One line per acceptance criterion; exit status 1 when any criterion fails.

#include <cstdio>
#include <cstring>
#include <string>

#include "tyinv/harness/acceptance.hpp"

int main(int argc, char** argv) {
  using namespace tyinv::harness;
  SuiteOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) options.level = SuiteLevel::Quick;
    if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc) options.parallelism = std::stoi(argv[++i]);
  }
  std::vector<int> ids;
  for (int id = 1; id <= kSuiteCount; ++id) ids.push_back(id);
  const auto results = run_suites(ids, options, [](const SuiteResult& r) {
    std::printf("AC%d %-26s %s  %.2f s%s  %lld checks, %lld failures; %s\n", r.id, r.name.c_str(),
                r.passed ? "PASS" : "FAIL", r.seconds,
                r.budget > 0 ? (" (budget " + std::to_string(static_cast<int>(r.budget)) + " s)").c_str() : "",
                static_cast<long long>(r.checks), static_cast<long long>(r.failures), r.summary.c_str());
    for (const auto& f : r.failure_samples) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  });
  int failed = 0;
  for (const auto& r : results) failed += !r.passed;
  std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
  return failed == 0 ? 0 : 1;
}
