#pragma once

#include <string>
#include <vector>

// Built-in acceptance suite: ten end-to-end checks covering the optimizer's
// exact and asymptotic cases, the closed-form information limits, the
// scaling identity, oracle equivalences, Monte Carlo calibration, the
// coding threshold, the counterexample residuals, and byte-level
// reproducibility of the commands.

namespace phasekit {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;   // measured values, single line
  double seconds = 0.0;
};

std::vector<CriterionResult> run_acceptance_suite();

}  // namespace phasekit
