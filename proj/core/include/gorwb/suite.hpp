#pragma once

// Acceptance properties over a corpus. Each criterion is an exact check whose
// title names the statement it instantiates; details carry one line per
// object or table row so a failure can be traced to its input.

#include <string>
#include <vector>

#include "gorwb/corpus.hpp"

namespace gorwb {

struct SuiteOptions {
  std::size_t bound = kDefaultBound;
  std::uint64_t seed = 0;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> details;
};

inline constexpr int kCriterionCount = 9;

std::string criterionTitle(int id);
/// Exceptions raised while checking are caught and reported as failures.
CriterionResult runCriterion(int id, const Corpus& corpus, const SuiteOptions& options);
std::vector<CriterionResult> runSuite(const Corpus& corpus, const SuiteOptions& options);

}  // namespace gorwb
