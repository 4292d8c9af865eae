#include "teich2/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

#include "teich2/errors.hpp"

namespace teich2 {

namespace {

// Kronrod nodes on [0, 1] (symmetric), with Kronrod and embedded Gauss weights.
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kKronrod[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kGauss[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo, hi, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment kronrod15(const std::function<double(double)>& f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(mid);
  double kronrod = kKronrod[7] * fc;
  double gauss = kGauss[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const double sum = f(mid - dx) + f(mid + dx);
    kronrod += kKronrod[i] * sum;
    if (i % 2 == 1) gauss += kGauss[i / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    double abs_tol, int max_intervals) {
  if (lo == hi) return {0.0, 0.0, 0};
  std::priority_queue<Segment> heap;
  Segment first = kronrod15(f, lo, hi);
  long evaluations = 15;
  double value = first.value;
  double error = first.error;
  heap.push(first);
  int intervals = 1;
  while (error > abs_tol) {
    if (intervals >= max_intervals) {
      throw QuadratureError("adaptive quadrature did not converge", error, evaluations);
    }
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Segment left = kronrod15(f, worst.lo, mid);
    const Segment right = kronrod15(f, mid, worst.hi);
    evaluations += 30;
    ++intervals;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to shed the drift of the running updates.
  value = 0.0;
  error = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  return {value, error, evaluations};
}

}  // namespace teich2
