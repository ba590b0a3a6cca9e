#pragma once

#include <string>
#include <vector>

namespace monofock {

enum class CheckStatus { Pass, Fail, Flagged };

struct CheckResult {
  std::string name;
  std::string inputs;  // JSON fragment describing the inputs
  CheckStatus status = CheckStatus::Fail;
  std::string details;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  int count(CheckStatus s) const;
  /// Flagged items record known paper discrepancies; they do not fail.
  bool ok() const { return count(CheckStatus::Fail) == 0; }
};

/// suite in {"fock", "poly", "binomial", "spectral", "all"}.
SuiteReport run_verification(const std::string& suite);

std::string report_to_json(const SuiteReport& report);

}  // namespace monofock
