// Runs every verification for one prime and collects a machine-readable
// report. Checks are grouped; a failed or skipped check marks the checks of
// dependent groups as skipped.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace cohomcheck {

inline constexpr const char* kVersion = "0.1.0";

struct VerifyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CheckResult {
  std::string id, paper_ref, status;  // status: pass, fail, skipped
  nlohmann::ordered_json witness;
  double runtime_ms = 0;
};

struct VerifyOptions {
  int p = 3;
  /// Group names ("structure", "cyclic", ...) or exact check ids; empty runs all.
  std::vector<std::string> only;
  bool long_mode = false;
};

struct VerificationReport {
  int p = 0;
  std::vector<CheckResult> checks;
  std::string version;
  bool ok() const;
  int count(const std::string& status) const;
  /// Report with runtimes zeroed, for determinism comparisons.
  nlohmann::ordered_json to_json(bool with_runtimes = true) const;
};

/// Check groups in run order.
std::vector<std::string> check_groups();

/// Throws VerifyError for p = 2, non-primes, and primes outside the supported
/// range (3 and 5; 7, 11, 13 with long_mode, where only the checks that do not
/// build the atlas groups run).
VerificationReport verify_all(const VerifyOptions& opts);

}  // namespace cohomcheck
