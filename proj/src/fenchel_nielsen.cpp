#include "teich2/fenchel_nielsen.hpp"

#include <algorithm>
#include <cmath>

#include "teich2/errors.hpp"
#include "teich2/hyperbolic.hpp"

namespace teich2 {

namespace {

double sign_of(double x) { return (x > 0.0) - (x < 0.0); }

// arccosh(1 + x) for x >= 0 without forming 1 + x.
double acosh1p(double x) { return std::log1p(x + std::sqrt(x * (2.0 + x))); }

struct LengthTwist {
  double l1, tau1, l3, tau3;
};

LengthTwist length_twist(const OctagonParams& params) {
  const auto l = fn_lengths(params);
  const auto t = fn_twists(params);
  return {l[0], t[0], l[2], t[2]};
}

OctagonParams shifted(const OctagonParams& params, double da, double dat) {
  try {
    return OctagonParams::validate(params.a() + da, params.alpha_tilde() + dat, 0.0);
  } catch (const OutOfDomain& e) {
    throw StepTooLarge(std::string("finite-difference step leaves the domain: ") + e.what());
  }
}

struct Gradient {
  LengthTwist d_a, d_at;
};

template <class F>
Gradient central_difference(const OctagonParams& params, double h, F&& f) {
  const LengthTwist ap = f(shifted(params, h, 0.0));
  const LengthTwist am = f(shifted(params, -h, 0.0));
  const LengthTwist tp = f(shifted(params, 0.0, h));
  const LengthTwist tm = f(shifted(params, 0.0, -h));
  auto diff = [h](const LengthTwist& p, const LengthTwist& m) {
    const double s = 0.5 / h;
    return LengthTwist{(p.l1 - m.l1) * s, (p.tau1 - m.tau1) * s, (p.l3 - m.l3) * s,
                       (p.tau3 - m.tau3) * s};
  };
  return {diff(ap, am), diff(tp, tm)};
}

}  // namespace

std::array<double, 3> fn_lengths(const OctagonParams& params) {
  const double a = params.a();
  const double a2 = a * a;
  const double arg = a2 / (1.0 - a2);
  if (!(arg >= 1.0)) throw DomainError("length arccosh argument below 1 (a <= 1/sqrt(2))");
  const double l1 = 2.0 * std::acosh(arg);
  const double l3 = 4.0 * std::atanh(a);  // 2 ln((1+a)/(1-a))
  return {l1, l1, l3};
}

std::array<double, 3> fn_lengths_geometric(const OctagonGeometry& geom, bool primed) {
  if (!primed) {
    const double l1 = 2.0 * dist(geom.p_plus, geom.p_minus);
    const auto [lo, hi] = geom.diagonal_endpoints();
    return {l1, 2.0 * dist(geom.side_midpoint(2), geom.side_midpoint(3)), dist(lo, hi)};
  }
  const double l1 = 2.0 * dist(geom.side_midpoint(2), geom.p_minus);
  const double l2 = 2.0 * dist(geom.side_midpoint(4), geom.side_midpoint(3));
  return {l1, l2, dist(geom.vertices[1], geom.vertices[5])};
}

double twist_arccosh_argument(const OctagonParams& params) {
  const double a2 = params.a() * params.a();
  const double b = params.b();
  return (2.0 * a2 - 1.0) / (a2 * (1.0 - b * b)) - 1.0;
}

std::array<double, 3> fn_twists(const OctagonParams& params) {
  const double published = twist_arccosh_argument(params);
  if (published < 1.0 - 1e-12) throw DomainError("twist arccosh argument below 1");
  // The argument equals 1 + 2 sin^2(at) / (2 a^2 cos^2(at) - 1).
  const double a = params.a();
  const double s = std::sin(params.alpha_tilde());
  const double c = std::cos(params.alpha_tilde());
  const double excess = 2.0 * s * s / (2.0 * a * a * c * c - 1.0);
  const double tau1 = sign_of(params.alpha_tilde()) * acosh1p(excess);
  return {tau1, tau1, 2.0 * std::atanh(a)};
}

TraceParams trace_params(const OctagonGeometry& geom) {
  std::array<Mobius, 6> m;
  for (int k = 0; k < 6; ++k) m[k] = m_half_turn(geom.omega(k));
  auto tr = [](const Mobius& x) { return x.trace(); };
  TraceParams out;
  out.c = {-0.5 * tr(m[0] * m[1]), -0.5 * tr(m[2] * m[3]), -0.5 * tr(m[4] * m[5])};
  auto half_sq = [&](const Mobius& x) { return 0.5 * tr(x) * tr(x) - 1.0; };
  out.d = {half_sq(m[0] * m[4] * m[5]), half_sq(m[2] * m[1] * m[0]), half_sq(m[5] * m[3] * m[2])};
  return out;
}

TraceParams trace_params_closed(const OctagonParams& params) {
  const double a2 = params.a() * params.a();
  const double b = params.b();
  const double one_a2 = 1.0 - a2;
  const double c12 = a2 / one_a2;
  const double d12 = 4.0 / (one_a2 * (1.0 - b * b)) - 1.0;
  return {{c12, c12, (1.0 + a2) / one_a2}, {d12, d12, 2.0 / (one_a2 * one_a2) - 1.0}};
}

std::array<double, 3> d_from_twists(const std::array<double, 3>& c,
                                    const std::array<double, 3>& twists) {
  const double p = c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + 2.0 * c[0] * c[1] * c[2] - 1.0;
  std::array<double, 3> d{};
  for (int k = 0; k < 3; ++k) {
    d[k] = p / (c[k] * c[k] - 1.0) * (1.0 + std::cosh(twists[k])) - 1.0;
  }
  return d;
}

PantsData pants_data(const OctagonParams& params) {
  const TraceParams tp = trace_params(build_geometry(params));
  PantsData out;
  out.lengths = fn_lengths(params);
  out.twists = fn_twists(params);
  out.c = tp.c;
  out.d = tp.d;
  out.p_aux = tp.c[0] * tp.c[0] + tp.c[1] * tp.c[1] + tp.c[2] * tp.c[2] +
              2.0 * tp.c[0] * tp.c[1] * tp.c[2] - 1.0;
  return out;
}

PantsData primed_fn(const OctagonParams& params) {
  PantsData out = pants_data(params.dual());
  out.primed = true;
  return out;
}

double LTReport::max_abs() const {
  return std::max({std::abs(l3_residual), std::abs(tau3_residual), std::abs(l3_primed_residual),
                   std::abs(tau3_primed_residual), std::abs(l1_primed_residual),
                   std::abs(t1_primed_residual)});
}

LTReport lt_relations_check(const OctagonParams& params) {
  const auto l = fn_lengths(params);
  const auto t = fn_twists(params);
  const OctagonParams dual = params.dual();
  const auto lp = fn_lengths(dual);
  const auto tp = fn_twists(dual);

  const double L1 = std::cosh(0.5 * l[0]);
  const double L3 = std::cosh(0.5 * l[2]);
  const double T1 = std::cosh(0.5 * t[0]);
  const double L1p = std::cosh(0.5 * lp[0]);
  const double L3p = std::cosh(0.5 * lp[2]);
  const double T1p = std::cosh(0.5 * tp[0]);
  const double T1sq = T1 * T1;

  LTReport r{};
  r.l3_residual = L3 - (2.0 * L1 + 1.0);
  r.tau3_residual = t[2] - 0.5 * l[2];
  r.l3_primed_residual = L3p - (2.0 * L1p + 1.0);
  r.tau3_primed_residual = tp[2] - 0.5 * lp[2];
  r.l1_primed_residual = L1p - (T1sq * 2.0 * L1 / (L1 - 1.0) - 1.0);
  r.t1_primed_residual =
      T1p - std::sqrt((L1 * L1 * T1sq + L1 * T1sq - L1 * L1 + 1.0) / (2.0 * L1 * T1sq - L1 + 1.0));
  return r;
}

double wp_coefficient(const OctagonParams& params) {
  const double a = params.a();
  const double c = std::cos(params.alpha_tilde());
  return 8.0 * a / ((1.0 - a * a) * (2.0 * a * a * c * c - 1.0));
}

WPFiniteDifference wp_fd_check(const OctagonParams& params, double h) {
  if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
  const double step =
      h * std::max({1.0, std::abs(params.a()), std::abs(params.alpha_tilde())});

  auto wedge = [](double fa, double ft, double ga, double gt) { return fa * gt - ft * ga; };

  const Gradient g = central_difference(params, step, length_twist);
  const double pair = wedge(g.d_a.l1, g.d_at.l1, g.d_a.tau1, g.d_at.tau1);
  const double k3 = wedge(g.d_a.l3, g.d_at.l3, g.d_a.tau3, g.d_at.tau3);

  const Gradient gp = central_difference(
      params, step, [](const OctagonParams& p) { return length_twist(p.dual()); });
  const double pair_p = wedge(gp.d_a.l1, gp.d_at.l1, gp.d_a.tau1, gp.d_at.tau1);
  const double k3_p = wedge(gp.d_a.l3, gp.d_at.l3, gp.d_a.tau3, gp.d_at.tau3);

  WPFiniteDifference out{};
  out.value = 0.5 * (2.0 * pair + k3);
  out.k3_summand = k3;
  out.pair_summand = pair;
  out.primed_value = 0.5 * (2.0 * pair_p + k3_p);
  out.primed_pair_summand = pair_p;
  out.primed_k3_summand = k3_p;
  out.primed_value_flipped = 0.5 * (-2.0 * pair_p + k3_p);
  out.step = step;
  return out;
}

}  // namespace teich2
