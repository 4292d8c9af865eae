#pragma once

// Curves of constant perimeter in the (a, alpha_tilde) plane, parametrised by
// E = 2 (cosh(P/8) + 1) and an angle phi, and the Weil-Petersson area they
// enclose.

#include <span>
#include <utility>
#include <vector>

namespace teich2 {

// Regular octagon: E_reg = 12 + 8 sqrt(2), P_reg = 8 arccosh(5 + 4 sqrt(2)), a_reg = 2^{-1/4}.
double e_regular();
double p_regular();
double a_regular();

double e_of_p(double perimeter);
// Inverse of e_of_p; DomainError for E <= 4.
double p_of_e(double e);

// E along alpha_tilde = 0: 4 a^2 / ((1 - a^2)(2 a^2 - 1)).
double e_of_a(double a);

// Extremes (a_-, a_+) of a on the orbit of level E. DomainError below E_reg.
std::pair<double, double> a_extremes(double e);

struct OrbitSample {
  double e;
  double phi;
  double a;
  double alpha_tilde;
};

// Point of the orbit of level E >= E_reg at angle phi. phi in (0, pi) gives
// alpha_tilde > 0; phi = 0 and pi give a_+ and a_-.
OrbitSample orbit_point(double e, double phi);

// Limit of orbit_point as E -> infinity. At phi = 0 the alpha_tilde limit is
// +pi/4 (and -pi/4 as phi -> 2 pi from below).
std::pair<double, double> asymptotic_orbit(double phi);

// f(E*, a) = sqrt((E* - 4)(1 - a^2) / (E* (1 - a^2) - 4)) sqrt(1 - E(a)/E*),
// which equals tan(alpha_tilde) / sqrt(2 a^2 - 1) on the orbit of level E*.
double orbit_tangent_ratio(double e_star, double a);

struct AreaResult {
  double p_star;
  double area;
  double quad_error_estimate;
  long evaluations;
};

// WP area enclosed by the orbit P = P*, reduced to a single integral over a.
AreaResult wp_area(double p_star, double abs_tol = 1e-8);

// Independent route: integrates the WP coefficient over {P < P*} as an
// iterated integral, locating the boundary by root-finding on the perimeter.
AreaResult wp_area_double_integral(double p_star);

struct ParabolaFit {
  double c1;  // coefficient of (P - P_reg)^2
  double c2;  // coefficient of (P - P_reg)
  double residual_norm;
  double max_relative_residual;  // over samples with nonzero area
  std::size_t samples;
};

// Least squares of area ~ c1 x^2 + c2 x (no constant term), x = P - P_reg.
ParabolaFit fit_parabola(std::span<const double> x, std::span<const double> area);

// Samples wp_area at P_min, P_min + step, ... <= P_max and fits.
ParabolaFit parabola_fit(double p_min, double p_max, double step);

// P values P_min, P_min + step, ... up to P_max (inclusive within 1e-9).
std::vector<double> sample_range(double p_min, double p_max, double step);

}  // namespace teich2
