#pragma once

// Identity battery behind `walkarea verify`.

#include <string>
#include <vector>

namespace walkarea {

struct CheckResult {
  std::string name;      // short id, e.g. "composition-count"
  std::string identity;  // what is being checked
  bool passed = false;
  std::string detail;    // first failure or a summary
  double seconds = 0;
};

struct VerifyOptions {
  /// "core" runs reduced sizes bounded by max_n; "full" runs the complete
  /// ranges (max_n still caps the cluster-based checks when given).
  std::string suite = "core";
  int max_n = 4;
  int threads = 1;
};

/// Throws std::invalid_argument for an unknown suite or max_n < 1.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

}  // namespace walkarea
