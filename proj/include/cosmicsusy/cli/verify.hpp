#pragma once

#include <string>
#include <vector>

#include "cosmicsusy/cli/series_table.hpp"

namespace cosmicsusy::cli {

enum class Suite { Fast, All };

struct CheckResult {
  std::string name;
  double tolerance = 0.0;
  double achieved = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  // Name of the first failing check, empty if none.
  std::string first_failure() const;
  // Columns check, tolerance, achieved, pass.
  SeriesTable table() const;
};

// Runs the invariant checks of every module. Fast skips the finite-difference
// eigenvalue runs. Each tolerance is multiplied by tolerance_scale before the
// comparison.
VerifyReport run_verify(Suite suite, double tolerance_scale = 1.0);

}  // namespace cosmicsusy::cli
