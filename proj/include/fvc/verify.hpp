#pragma once

#include <string>
#include <vector>

namespace fvc::verify {

/// One row of the verification report.
struct CheckResult {
  std::string name;
  std::string anchor;  // short statement of the identity being checked
  double expected;
  double computed;
  double deviation;
  double tolerance;
  bool pass;
};

struct VerifyOptions {
  double tolerance_override = -1.0;  // < 0: keep per-check tolerances
  std::string only;                  // substring filter on check names
};

/// Runs the built-in verification battery: special-function identities,
/// the worked variation example, the factorized-form identity, the
/// coefficient adjudication against the numerical oracle, the step
/// diagnostics, and the classical Euler-Lagrange reduction. The
/// "uux-stated-form" row documents a known-bad coefficient set and passes
/// when it deviates from the oracle.
std::vector<CheckResult> run_checks(const VerifyOptions& options = {});

bool all_pass(const std::vector<CheckResult>& checks);

}  // namespace fvc::verify
