#pragma once

#include <string>
#include <vector>

#include "rovib/registry.hpp"

namespace rovib::tools {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  bool skipped = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteOptions {
  /// Leave out the criteria that need finite-difference solves.
  bool skip_oracle = false;
};

struct SuiteReport {
  std::vector<CriterionResult> results;
  double seconds = 0.0;

  bool pass() const noexcept;
};

/// Runs every acceptance criterion against the registry's H2 and Ar2
/// entries. Exceptions inside a criterion turn into failures.
SuiteReport run_acceptance(const Registry& registry,
                           const SuiteOptions& options = {});

/// "[PASS] 1 title (0.001 s): detail"
std::string format_line(const CriterionResult& result);

}  // namespace rovib::tools
