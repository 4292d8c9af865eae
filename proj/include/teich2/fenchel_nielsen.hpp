#pragma once

// Fenchel-Nielsen data of the two pants decompositions of the surface and the
// Weil-Petersson two-form on the (a, alpha_tilde) plane.
//
// Decomposition "unprimed": gamma_1, gamma_2 through the side midpoints
// (p_0 p_1 and p_2 p_3 arcs), gamma_3 along the main diagonal. The "primed"
// decomposition is its image under (a, alpha_tilde) -> (b, -alpha_tilde).
//
// Twist sign: tau_{1,2} carry the sign of alpha_tilde, so the primed twists
// tau'(a, alpha_tilde) = tau(b, -alpha_tilde) carry the opposite sign.

#include <array>

#include "teich2/octagon.hpp"

namespace teich2 {

struct TraceParams {
  std::array<double, 3> c{};
  std::array<double, 3> d{};
};

struct PantsData {
  std::array<double, 3> lengths{};
  std::array<double, 3> twists{};
  std::array<double, 3> c{};
  std::array<double, 3> d{};
  double p_aux = 0.0;  // c1^2 + c2^2 + c3^2 + 2 c1 c2 c3 - 1
  bool primed = false;
};

// l_{1,2} = 2 arccosh(a^2 / (1 - a^2)), l_3 = 2 ln((1 + a)/(1 - a)).
std::array<double, 3> fn_lengths(const OctagonParams& params);

// Same lengths measured on the octagon: 2 dist(p+, p-) and dist(-a, a), or for
// the primed decomposition 2 dist(i p+, p-) and the diagonal through the b
// vertices.
std::array<double, 3> fn_lengths_geometric(const OctagonGeometry& geom, bool primed = false);

// Argument (2a^2 - 1)/(a^2 (1 - b^2)) - 1 of the twist arccosh.
double twist_arccosh_argument(const OctagonParams& params);

// tau_{1,2} = sgn(alpha_tilde) arccosh(argument), tau_3 = ln((1 + a)/(1 - a)).
std::array<double, 3> fn_twists(const OctagonParams& params);

// c_k, d_k from traces of products of the M(omega_k) matrices.
TraceParams trace_params(const OctagonGeometry& geom);

// c_{1,2} = a^2/(1-a^2), c_3 = (1+a^2)/(1-a^2),
// d_{1,2} = 4/((1-a^2)(1-b^2)) - 1, d_3 = 2/(1-a^2)^2 - 1.
TraceParams trace_params_closed(const OctagonParams& params);

// d_k reconstructed from (c, tau): p_aux/(c_k^2 - 1) (1 + cosh tau_k) - 1.
std::array<double, 3> d_from_twists(const std::array<double, 3>& c,
                                    const std::array<double, 3>& twists);

PantsData pants_data(const OctagonParams& params);

// Pants data of the primed decomposition, expressed at (a, alpha_tilde).
PantsData primed_fn(const OctagonParams& params);

struct LTReport {
  double l3_residual;          // L_3 - (2 L_1 + 1)
  double tau3_residual;        // tau_3 - l_3 / 2
  double l3_primed_residual;   // L'_3 - (2 L'_1 + 1)
  double tau3_primed_residual; // tau'_3 - l'_3 / 2
  double l1_primed_residual;   // L'_1 - (T_1^2 2 L_1/(L_1 - 1) - 1)
  double t1_primed_residual;   // T'_1 - sqrt(...)

  double max_abs() const;
};

// L = cosh(l/2), T = cosh(tau/2) relations between the two decompositions.
LTReport lt_relations_check(const OctagonParams& params);

// 8a / ((1 - a^2)(2 a^2 cos^2 alpha_tilde - 1)), the coefficient of da ^ d alpha_tilde.
double wp_coefficient(const OctagonParams& params);

struct WPFiniteDifference {
  double value;          // 1/2 sum_k (dl_k ^ dtau_k) coefficient, unprimed
  double k3_summand;     // dl_3 ^ dtau_3 coefficient
  double pair_summand;   // dl_1 ^ dtau_1 coefficient
  double primed_value;   // same for the primed decomposition
  double primed_pair_summand;
  double primed_k3_summand;
  double primed_value_flipped;  // primed value with the opposite twist sign
  double step;
};

// Central differences of the Wolpert sum. Step is h max(1, |a|, |alpha_tilde|).
// Throws StepTooLarge if a stencil point leaves the admissible region.
WPFiniteDifference wp_fd_check(const OctagonParams& params, double h = 1e-5);

}  // namespace teich2
