#pragma once

#include <functional>

namespace teich2 {

struct QuadratureResult {
  double value;
  double error_estimate;
  long evaluations;
};

// Globally adaptive Gauss-Kronrod (G7/K15) on [lo, hi]: bisects the interval
// with the largest error until the summed estimate is below `abs_tol` or
// `max_intervals` is reached (QuadratureError).
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    double abs_tol, int max_intervals = 2000);

}  // namespace teich2
