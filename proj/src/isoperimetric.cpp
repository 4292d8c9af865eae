#include "teich2/isoperimetric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/roots.hpp>

#include "teich2/errors.hpp"
#include "teich2/hyperbolic.hpp"
#include "teich2/octagon.hpp"
#include "teich2/parallel.hpp"
#include "teich2/quadrature.hpp"

namespace teich2 {

namespace {

const double kSqrt2 = std::sqrt(2.0);

// sqrt(E^2 - 24E + 16) written as sqrt((E - E_reg)(E - 12 + 8 sqrt 2)) so it
// stays accurate as E approaches E_reg.
double orbit_discriminant_root(double e) {
  if (!(e > 4.0)) throw DomainError("orbit level E must exceed 4");
  const double gap = e - e_regular();
  if (gap < 0.0) {
    const double disc = e * e - 24.0 * e + 16.0;
    if (disc < -1e-12) throw DomainError("orbit level E is below E_reg = 12 + 8 sqrt(2)");
    return 0.0;
  }
  return std::sqrt(gap * (e - 12.0 + 8.0 * kSqrt2));
}

}  // namespace

double e_regular() { return 12.0 + 8.0 * kSqrt2; }
double p_regular() { return 8.0 * std::acosh(5.0 + 4.0 * kSqrt2); }
double a_regular() { return std::pow(2.0, -0.25); }

double e_of_p(double perimeter) {
  if (!(perimeter > 0.0)) throw DomainError("perimeter must be positive");
  return 2.0 * (std::cosh(perimeter / 8.0) + 1.0);
}

double p_of_e(double e) {
  if (!(e > 4.0)) throw DomainError("E must exceed 4");
  return 8.0 * std::acosh(0.5 * e - 1.0);
}

double e_of_a(double a) {
  const double a2 = a * a;
  return 4.0 * a2 / ((1.0 - a2) * (2.0 * a2 - 1.0));
}

std::pair<double, double> a_extremes(double e) {
  const double d = orbit_discriminant_root(e);
  const double k = 0.5 / std::sqrt(e);
  return {k * std::sqrt(3.0 * e - 4.0 - d), k * std::sqrt(3.0 * e - 4.0 + d)};
}

OrbitSample orbit_point(double e, double phi) {
  const double d = orbit_discriminant_root(e);
  const double c = std::cos(phi);
  const double a = std::sqrt(3.0 * e - 4.0 + c * d) / (2.0 * std::sqrt(e));
  // E - 12 - cos(phi) D, rewritten with (E - 12)^2 - D^2 = 128 so that large E
  // does not cancel near phi = 0.
  const double s = std::sin(0.5 * phi);
  const double inner = 2.0 * (e - 12.0) * s * s + c * 128.0 / (e - 12.0 + d);
  if (!(inner > 0.0)) throw DomainError("orbit radicand E - 12 - cos(phi) D must be positive");
  const double ratio =
      std::sqrt(e - 4.0) * d * std::sin(phi) / (kSqrt2 * e * std::sqrt(inner));
  return {e, phi, a, std::atan(ratio)};
}

std::pair<double, double> asymptotic_orbit(double phi) {
  const double a = 0.5 * std::sqrt(3.0 + std::cos(phi));
  // sin(phi)/sqrt(2(1 - cos phi)) = cos(phi/2) on (0, 2 pi); extends to phi = 0.
  return {a, std::atan(std::cos(0.5 * phi))};
}

double orbit_tangent_ratio(double e_star, double a) {
  const double one_a2 = 1.0 - a * a;
  const double lead = (e_star - 4.0) * one_a2 / (e_star * one_a2 - 4.0);
  return std::sqrt(lead) * std::sqrt(std::max(0.0, 1.0 - e_of_a(a) / e_star));
}

AreaResult wp_area(double p_star, double abs_tol) {
  const double p_reg = p_regular();
  if (p_star < p_reg - 1e-12) throw DomainError("P* must be at least P_reg");
  if (p_star <= p_reg) return {p_star, 0.0, 0.0, 0};

  const double e_star = e_of_p(p_star);
  const auto [lo, hi] = a_extremes(e_star);
  const double width = hi - lo;

  // a = lo + width (1 - cos theta)/2 absorbs the square-root endpoint behaviour.
  auto integrand = [&](double theta) {
    const double a = lo + 0.5 * width * (1.0 - std::cos(theta));
    const double jacobian = 0.5 * width * std::sin(theta);
    const double f = orbit_tangent_ratio(e_star, a);
    if (!(f < 1.0)) throw DomainError("orbit tangent ratio reached 1");
    const double a2 = a * a;
    return 16.0 * a / ((1.0 - a2) * std::sqrt(2.0 * a2 - 1.0)) * std::atanh(f) * jacobian;
  };
  const QuadratureResult q = integrate_adaptive(integrand, 0.0, kPi, abs_tol);
  return {p_star, q.value, q.error_estimate, q.evaluations};
}

AreaResult wp_area_double_integral(double p_star) {
  namespace bq = boost::math::quadrature;
  namespace bt = boost::math::tools;

  const double p_reg = p_regular();
  if (p_star < p_reg - 1e-12) throw DomainError("P* must be at least P_reg");
  if (p_star <= p_reg) return {p_star, 0.0, 0.0, 0};

  auto perim = [](double a, double t) { return perimeter(OctagonParams::validate(a, t)); };
  auto solve = [&](auto&& f, double lo, double hi) {
    std::uintmax_t iters = 200;
    const auto r = bt::toms748_solve(f, lo, hi, bt::eps_tolerance<double>(52), iters);
    return 0.5 * (r.first + r.second);
  };

  // Extent of the region along alpha_tilde = 0, where P(a, 0) is minimal at a_reg.
  const double a_reg = a_regular();
  auto on_axis = [&](double a) { return perim(a, 0.0) - p_star; };
  const double a_lo = solve(on_axis, 1.0 / kSqrt2 + 1e-9, a_reg);
  const double a_hi = solve(on_axis, a_reg, 1.0 - 1e-9);

  long evaluations = 0;
  auto slice = [&](double a) {
    ++evaluations;
    if (perim(a, 0.0) >= p_star) return 0.0;
    // Domain edge in alpha_tilde for this a; the perimeter diverges there.
    const double t_edge = std::acos(1.0 / (kSqrt2 * a)) * (1.0 - 1e-12);
    double t_max = t_edge;
    if (perim(a, t_edge) > p_star) {
      t_max = solve([&](double t) { return perim(a, t) - p_star; }, 0.0, t_edge);
    }
    auto coefficient = [a](double t) {
      const double c = std::cos(t);
      return 8.0 * a / ((1.0 - a * a) * (2.0 * a * a * c * c - 1.0));
    };
    return 2.0 * bq::gauss_kronrod<double, 31>::integrate(coefficient, 0.0, t_max, 15, 1e-13);
  };

  bq::tanh_sinh<double> outer;
  double error = 0.0;
  const double value = outer.integrate(slice, a_lo, a_hi, 1e-12, &error);
  return {p_star, value, error, evaluations};
}

std::vector<double> sample_range(double p_min, double p_max, double step) {
  if (!(step > 0.0)) throw DomainError("sample step must be positive");
  std::vector<double> out;
  for (std::size_t i = 0;; ++i) {
    const double p = p_min + static_cast<double>(i) * step;
    if (p > p_max + 1e-9) break;
    out.push_back(p);
  }
  return out;
}

ParabolaFit fit_parabola(std::span<const double> x, std::span<const double> area) {
  if (x.size() != area.size()) throw DomainError("fit inputs differ in length");
  if (x.size() < 3) throw DomainError("parabola fit needs at least 3 samples");

  // Modified Gram-Schmidt on the columns (x^2, x).
  const std::size_t n = x.size();
  std::vector<double> q1(n), q2(n);
  for (std::size_t i = 0; i < n; ++i) {
    q1[i] = x[i] * x[i];
    q2[i] = x[i];
  }
  auto dot = [n](const std::vector<double>& u, auto&& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += u[i] * v[i];
    return s;
  };
  const double r11 = std::sqrt(dot(q1, q1));
  for (double& v : q1) v /= r11;
  const double r12 = dot(q1, q2);
  for (std::size_t i = 0; i < n; ++i) q2[i] -= r12 * q1[i];
  const double r22 = std::sqrt(dot(q2, q2));
  if (!(r22 > 0.0)) throw DomainError("parabola fit design matrix is rank deficient");
  for (double& v : q2) v /= r22;

  const double y1 = dot(q1, area);
  const double y2 = dot(q2, area);
  const double c2 = y2 / r22;
  const double c1 = (y1 - r12 * c2) / r11;

  ParabolaFit fit{c1, c2, 0.0, 0.0, n};
  double sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = c1 * x[i] * x[i] + c2 * x[i] - area[i];
    sq += r * r;
    if (std::abs(area[i]) > 1e-12) {
      fit.max_relative_residual = std::max(fit.max_relative_residual, std::abs(r / area[i]));
    }
  }
  fit.residual_norm = std::sqrt(sq);
  return fit;
}

ParabolaFit parabola_fit(double p_min, double p_max, double step) {
  const double p_reg = p_regular();
  if (p_min < p_reg - 1e-12) throw DomainError("P_min must be at least P_reg");
  if (!(p_max > p_min)) throw DomainError("P_max must exceed P_min");
  const std::vector<double> ps = sample_range(p_min, p_max, step);
  std::vector<double> x(ps.size()), area(ps.size());
  parallel_for(ps.size(), [&](std::size_t i) {
    x[i] = ps[i] - p_reg;
    area[i] = wp_area(ps[i]).area;
  });
  return fit_parabola(x, area);
}

}  // namespace teich2
