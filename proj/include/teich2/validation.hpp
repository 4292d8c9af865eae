#pragma once

// Invariant suite over a parameter grid: every cross-check between the closed
// forms and their independent numeric routes, reported as max residuals.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "teich2/octagon.hpp"

namespace teich2 {

// Cell-centred n_a x n_alpha grid: alpha_tilde over [-pi/4 + m, pi/4 - m],
// and for each alpha_tilde, a over [1/(sqrt 2 cos alpha_tilde) + m, 1 - m].
// Rows with an empty a-interval are skipped.
std::vector<OctagonParams> parameter_grid(int n_a, int n_alpha, double margin);

struct ValidationConfig {
  int n_a = 20;
  int n_alpha = 20;
  double margin = 0.02;
  std::uint64_t seed = 1;
  int orbit_samples = 256;
  std::size_t interior_samples = 100;  // per grid point, for side pairing
  double fd_step = 1e-5;
  std::map<std::string, double> tolerance_overrides;
};

struct CheckResult {
  std::string name;
  std::string module;
  double max_residual;
  double tolerance;
  std::size_t samples;
  bool passed;
  std::string note;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  std::size_t grid_points = 0;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
};

// Default tolerance of every check, by name.
const std::map<std::string, double>& default_tolerances();

ValidationReport run_validation(const ValidationConfig& config);

}  // namespace teich2
