#pragma once

/// The invariant suite: every analytic identity, conservation law, spectral
/// property and dual-route check the library promises, each reduced to a
/// named residual with a pinned tolerance.  The CLI `verify` subcommand and
/// the acceptance harness both run this list.

#include <cstddef>
#include <string>
#include <vector>

namespace lossgain {

struct CheckResult {
  std::string name;
  int criterion = 0;  // acceptance criterion this check belongs to (1..11)
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::size_t n_max = 30;       // Fock truncation for spectral checks
  std::size_t n_max_low = 0;    // smaller truncation for convergence checks (default n_max - 10)
  std::size_t grid_n = 512;     // ground-state grid resolution
  std::size_t oracle_basis = 360;  // basis size of the independent 1D Hall oracle
  double tol_scale = 1.0;       // multiplies every tolerance (LOSSGAIN_TOL)
  int jobs = 1;                 // parallel check execution
};

std::vector<CheckResult> run_all_checks(const VerifyOptions& opts = {});

}  // namespace lossgain
