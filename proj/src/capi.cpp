#include "teich2/teich2.h"

#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "teich2/errors.hpp"
#include "teich2/fenchel_nielsen.hpp"
#include "teich2/fuchsian.hpp"
#include "teich2/hyperbolic.hpp"
#include "teich2/isoperimetric.hpp"
#include "teich2/octagon.hpp"
#include "teich2/validation.hpp"

struct teich2_octagon {
  teich2::OctagonGeometry geom;
};

struct teich2_group {
  teich2::OctagonGeometry geom;
  teich2::GeneratorSet gens;
};

struct teich2_ball {
  teich2::OctagonGeometry geom;
  teich2::GroupBall ball;
};

struct teich2_report {
  teich2::ValidationReport report;
};

namespace {

thread_local std::string g_last_error;
thread_local teich2_domain_bound g_last_bound = TEICH2_BOUND_NONE;

teich2_status fail(teich2_status status, const char* message) {
  g_last_error = message;
  return status;
}

teich2_domain_bound to_c(teich2::DomainBound b) {
  switch (b) {
    case teich2::DomainBound::lower_a: return TEICH2_BOUND_LOWER_A;
    case teich2::DomainBound::upper_a: return TEICH2_BOUND_UPPER_A;
    case teich2::DomainBound::alpha_range: return TEICH2_BOUND_ALPHA_RANGE;
  }
  return TEICH2_BOUND_NONE;
}

// Runs body() and maps exceptions onto status codes.
template <class F>
teich2_status guarded(F&& body) {
  g_last_error.clear();
  g_last_bound = TEICH2_BOUND_NONE;
  try {
    body();
    return TEICH2_OK;
  } catch (const teich2::OutOfDomain& e) {
    g_last_bound = to_c(e.which());
    return fail(TEICH2_ERR_DOMAIN, e.what());
  } catch (const teich2::StepTooLarge& e) {
    return fail(TEICH2_ERR_STEP_TOO_LARGE, e.what());
  } catch (const teich2::DomainError& e) {
    return fail(TEICH2_ERR_DOMAIN, e.what());
  } catch (const teich2::CapacityError& e) {
    return fail(TEICH2_ERR_CAPACITY, e.what());
  } catch (const teich2::QuadratureError& e) {
    return fail(TEICH2_ERR_QUADRATURE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(TEICH2_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TEICH2_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TEICH2_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TEICH2_ERR_INTERNAL, "unknown error");
  }
}

#define TEICH2_REQUIRE(cond, what)                                  \
  do {                                                              \
    if (!(cond)) return fail(TEICH2_ERR_INVALID_ARGUMENT, what);    \
  } while (0)

teich2::Complex from_c(teich2_complex z) { return {z.re, z.im}; }
teich2_complex to_c(teich2::Complex z) { return {z.real(), z.imag()}; }

teich2_mobius to_c(const teich2::Mobius& m) { return {to_c(m.u()), to_c(m.v())}; }
teich2::Mobius from_c(const teich2_mobius& m) { return {from_c(m.u), from_c(m.v)}; }

template <std::size_t N>
void copy(const std::array<double, N>& src, double* dst) {
  for (std::size_t i = 0; i < N; ++i) dst[i] = src[i];
}

teich2_pants to_c(const teich2::PantsData& p) {
  teich2_pants out{};
  copy(p.lengths, out.lengths);
  copy(p.twists, out.twists);
  copy(p.c, out.c);
  copy(p.d, out.d);
  out.p_aux = p.p_aux;
  out.primed = p.primed ? 1 : 0;
  return out;
}

}  // namespace

extern "C" {

const char* teich2_version(void) { return "1.0.0"; }

const char* teich2_last_error(void) { return g_last_error.c_str(); }

teich2_domain_bound teich2_last_domain_bound(void) { return g_last_bound; }

const char* teich2_status_string(teich2_status status) {
  switch (status) {
    case TEICH2_OK: return "ok";
    case TEICH2_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case TEICH2_ERR_DOMAIN: return "domain";
    case TEICH2_ERR_STEP_TOO_LARGE: return "step_too_large";
    case TEICH2_ERR_CAPACITY: return "capacity";
    case TEICH2_ERR_QUADRATURE: return "quadrature";
    case TEICH2_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

teich2_status teich2_dist(teich2_complex z, teich2_complex w, double* out) {
  TEICH2_REQUIRE(out, "out is null");
  return guarded([&] { *out = teich2::dist(teich2::DiskPoint(from_c(z)), teich2::DiskPoint(from_c(w))); });
}

teich2_status teich2_mobius_apply(const teich2_mobius* t, teich2_complex z, teich2_complex* out) {
  TEICH2_REQUIRE(t && out, "null argument");
  return guarded([&] { *out = to_c(from_c(*t).apply(teich2::DiskPoint(from_c(z))).z()); });
}

teich2_status teich2_mobius_compose(const teich2_mobius* a, const teich2_mobius* b,
                                    teich2_mobius* out) {
  TEICH2_REQUIRE(a && b && out, "null argument");
  return guarded([&] { *out = to_c(from_c(*a) * from_c(*b)); });
}

teich2_status teich2_mobius_inverse(const teich2_mobius* a, teich2_mobius* out) {
  TEICH2_REQUIRE(a && out, "null argument");
  return guarded([&] { *out = to_c(from_c(*a).inverse()); });
}

teich2_status teich2_half_turn(teich2_complex p, teich2_mobius* out) {
  TEICH2_REQUIRE(out, "out is null");
  return guarded([&] { *out = to_c(teich2::half_turn(teich2::DiskPoint(from_c(p)))); });
}

teich2_status teich2_m_half_turn(teich2_complex omega, teich2_mobius* out) {
  TEICH2_REQUIRE(out, "out is null");
  return guarded([&] { *out = to_c(teich2::m_half_turn(from_c(omega))); });
}

teich2_status teich2_rotation(double phi, teich2_mobius* out) {
  TEICH2_REQUIRE(out, "out is null");
  return guarded([&] { *out = to_c(teich2::rotation(phi)); });
}

teich2_status teich2_octagon_create(double a, double alpha_tilde, double margin,
                                    teich2_octagon** out) {
  TEICH2_REQUIRE(out, "out is null");
  *out = nullptr;
  return guarded([&] {
    const auto params = teich2::OctagonParams::validate(a, alpha_tilde, margin);
    *out = new teich2_octagon{teich2::build_geometry(params)};
  });
}

void teich2_octagon_destroy(teich2_octagon* octagon) { delete octagon; }

teich2_status teich2_octagon_get_info(const teich2_octagon* octagon, teich2_octagon_info* out) {
  TEICH2_REQUIRE(octagon && out, "null argument");
  return guarded([&] {
    const auto& g = octagon->geom;
    teich2_octagon_info info{};
    info.a = g.params.a();
    info.alpha_tilde = g.params.alpha_tilde();
    info.alpha = g.params.alpha();
    info.b = g.b;
    info.beta = g.beta;
    info.t_plus = g.t_plus;
    info.t_minus = g.t_minus;
    info.r_plus = g.arc_plus.radius();
    info.phi_plus = g.arc_plus.phi();
    info.r_minus = g.arc_minus.radius();
    info.phi_minus = g.arc_minus.phi();
    info.omega_plus = to_c(g.omega_plus);
    info.omega_minus = to_c(g.omega_minus);
    info.omega4 = g.omega4;
    info.p_plus = to_c(g.p_plus.z());
    info.p_minus = to_c(g.p_minus.z());
    for (int k = 0; k < 8; ++k) info.vertices[k] = to_c(g.vertices[k].z());
    info.perimeter = teich2::perimeter(g.params);
    info.perimeter_numeric = teich2::perimeter_numeric(g);
    const auto angles = teich2::interior_angles_numeric(g);
    info.angle_at_a = angles.at_a;
    info.angle_at_b = angles.at_b;
    info.area_from_angles = teich2::area_from_angles(angles);
    *out = info;
  });
}

teich2_status teich2_octagon_side_arc(const teich2_octagon* octagon, int side, double* radius,
                                      double* phi) {
  TEICH2_REQUIRE(octagon && radius && phi, "null argument");
  TEICH2_REQUIRE(side >= 0 && side < 8, "side must be in 0..7");
  return guarded([&] {
    const auto arc = octagon->geom.side_arc(side);
    *radius = arc.radius();
    *phi = arc.phi();
  });
}

teich2_status teich2_group_create(const teich2_octagon* octagon, teich2_group** out) {
  TEICH2_REQUIRE(octagon && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new teich2_group{octagon->geom, teich2::generators(octagon->geom.params)};
  });
}

void teich2_group_destroy(teich2_group* group) { delete group; }

teich2_status teich2_group_letter(const teich2_group* group, int letter, teich2_mobius* out) {
  TEICH2_REQUIRE(group && out, "null argument");
  TEICH2_REQUIRE(letter >= 0 && letter < teich2::kLetterCount, "letter must be in 0..7");
  *out = to_c(group->gens[static_cast<teich2::Letter>(letter)]);
  return TEICH2_OK;
}

teich2_status teich2_group_normalization(const teich2_group* group, double* out) {
  TEICH2_REQUIRE(group && out, "null argument");
  *out = group->gens.normalization;
  return TEICH2_OK;
}

teich2_status teich2_group_relation(const teich2_group* group, teich2_relation_info* out) {
  TEICH2_REQUIRE(group && out, "null argument");
  return guarded([&] {
    const auto r = teich2::relation_check(group->gens);
    *out = {to_c(r.product), r.sign, r.defect};
  });
}

teich2_status teich2_group_construction_defect(const teich2_group* group, double* via_m,
                                               double* via_half_turn) {
  TEICH2_REQUIRE(group && via_m && via_half_turn, "null argument");
  return guarded([&] {
    *via_m = teich2::max_projective_distance(group->gens, teich2::generators_from_m(group->geom));
    *via_half_turn = teich2::max_projective_distance(
        group->gens, teich2::generators_from_half_turns(group->geom));
  });
}

teich2_status teich2_group_side_pairing(const teich2_group* group, size_t interior_samples,
                                        uint64_t seed, teich2_side_pairing_info* out) {
  TEICH2_REQUIRE(group && out, "null argument");
  return guarded([&] {
    const auto r = teich2::side_pairing_check(group->geom, group->gens, interior_samples, seed);
    teich2_side_pairing_info info{};
    copy(r.endpoint_residual, info.endpoint_residual);
    copy(r.midpoint_residual, info.midpoint_residual);
    info.interior_samples = r.interior_samples;
    info.interior_violations = r.interior_violations;
    *out = info;
  });
}

teich2_status teich2_ball_create(const teich2_group* group, int radius, size_t capacity,
                                 teich2_ball** out) {
  TEICH2_REQUIRE(group && out, "null argument");
  TEICH2_REQUIRE(radius >= 0, "radius must be nonnegative");
  *out = nullptr;
  return guarded([&] {
    const size_t cap = capacity == 0 ? teich2::kDefaultBallCapacity : capacity;
    *out = new teich2_ball{group->geom, teich2::ball(group->gens, radius, cap)};
  });
}

void teich2_ball_destroy(teich2_ball* ball) { delete ball; }

size_t teich2_ball_size(const teich2_ball* ball) { return ball ? ball->ball.size() : 0; }

teich2_status teich2_ball_sphere_size(const teich2_ball* ball, int n, size_t* out) {
  TEICH2_REQUIRE(ball && out, "null argument");
  TEICH2_REQUIRE(n >= 0 && static_cast<size_t>(n) < ball->ball.sphere_sizes.size(),
                 "sphere index out of range");
  *out = ball->ball.sphere_sizes[static_cast<size_t>(n)];
  return TEICH2_OK;
}

teich2_status teich2_ball_element(const teich2_ball* ball, size_t index, teich2_mobius* element,
                                  char* word, size_t buffer_size, size_t* required_size) {
  TEICH2_REQUIRE(ball, "ball is null");
  TEICH2_REQUIRE(index < ball->ball.size(), "element index out of range");
  const auto& e = ball->ball.elements[index];
  if (element) *element = to_c(e.element);
  const std::string text = teich2::format_word(e.word);
  if (required_size) *required_size = text.size() + 1;
  if (word && buffer_size > 0) {
    if (buffer_size < text.size() + 1) {
      word[0] = '\0';
      return fail(TEICH2_ERR_INVALID_ARGUMENT, "word buffer too small");
    }
    std::memcpy(word, text.c_str(), text.size() + 1);
  }
  return TEICH2_OK;
}

teich2_status teich2_ball_cell(const teich2_ball* ball, size_t index, teich2_complex vertices[8]) {
  TEICH2_REQUIRE(ball && vertices, "null argument");
  TEICH2_REQUIRE(index < ball->ball.size(), "element index out of range");
  const auto& m = ball->ball.elements[index].element;
  for (int k = 0; k < 8; ++k) vertices[k] = to_c(m.apply(ball->geom.vertices[k].z()));
  return TEICH2_OK;
}

teich2_status teich2_fn_pants(const teich2_octagon* octagon, int primed, teich2_pants* out) {
  TEICH2_REQUIRE(octagon && out, "null argument");
  return guarded([&] {
    const auto& p = octagon->geom.params;
    *out = to_c(primed ? teich2::primed_fn(p) : teich2::pants_data(p));
  });
}

teich2_status teich2_fn_lengths_geometric(const teich2_octagon* octagon, int primed,
                                          double out[3]) {
  TEICH2_REQUIRE(octagon && out, "null argument");
  return guarded([&] { copy(teich2::fn_lengths_geometric(octagon->geom, primed != 0), out); });
}

teich2_status teich2_fn_trace_closed(const teich2_octagon* octagon, double c[3], double d[3]) {
  TEICH2_REQUIRE(octagon && c && d, "null argument");
  return guarded([&] {
    const auto t = teich2::trace_params_closed(octagon->geom.params);
    copy(t.c, c);
    copy(t.d, d);
  });
}

teich2_status teich2_fn_lt_check(const teich2_octagon* octagon, teich2_lt_info* out) {
  TEICH2_REQUIRE(octagon && out, "null argument");
  return guarded([&] {
    const auto r = teich2::lt_relations_check(octagon->geom.params);
    *out = {r.l3_residual,          r.tau3_residual,      r.l3_primed_residual,
            r.tau3_primed_residual, r.l1_primed_residual, r.t1_primed_residual};
  });
}

teich2_status teich2_wp_coefficient(const teich2_octagon* octagon, double* out) {
  TEICH2_REQUIRE(octagon && out, "null argument");
  return guarded([&] { *out = teich2::wp_coefficient(octagon->geom.params); });
}

teich2_status teich2_wp_fd_check(const teich2_octagon* octagon, double h, teich2_wp_fd* out) {
  TEICH2_REQUIRE(octagon && out, "null argument");
  return guarded([&] {
    const auto r = teich2::wp_fd_check(octagon->geom.params, h);
    *out = {r.value,
            r.k3_summand,
            r.pair_summand,
            r.primed_value,
            r.primed_pair_summand,
            r.primed_k3_summand,
            r.primed_value_flipped,
            r.step};
  });
}

double teich2_e_regular(void) { return teich2::e_regular(); }
double teich2_p_regular(void) { return teich2::p_regular(); }
double teich2_a_regular(void) { return teich2::a_regular(); }

teich2_status teich2_e_of_p(double p, double* out) {
  TEICH2_REQUIRE(out, "out is null");
  return guarded([&] { *out = teich2::e_of_p(p); });
}

teich2_status teich2_p_of_e(double e, double* out) {
  TEICH2_REQUIRE(out, "out is null");
  return guarded([&] { *out = teich2::p_of_e(e); });
}

teich2_status teich2_a_extremes(double e, double* a_minus, double* a_plus) {
  TEICH2_REQUIRE(a_minus && a_plus, "null argument");
  return guarded([&] {
    const auto [lo, hi] = teich2::a_extremes(e);
    *a_minus = lo;
    *a_plus = hi;
  });
}

teich2_status teich2_orbit_point(double e, double phi, teich2_orbit_sample* out) {
  TEICH2_REQUIRE(out, "out is null");
  return guarded([&] {
    const auto s = teich2::orbit_point(e, phi);
    *out = {s.e, s.phi, s.a, s.alpha_tilde};
  });
}

teich2_status teich2_asymptotic_orbit(double phi, double* a, double* alpha_tilde) {
  TEICH2_REQUIRE(a && alpha_tilde, "null argument");
  return guarded([&] {
    const auto [x, y] = teich2::asymptotic_orbit(phi);
    *a = x;
    *alpha_tilde = y;
  });
}

teich2_status teich2_wp_area(double p_star, teich2_area* out) {
  TEICH2_REQUIRE(out, "out is null");
  return guarded([&] {
    const auto r = teich2::wp_area(p_star);
    *out = {r.p_star, r.area, r.quad_error_estimate, r.evaluations};
  });
}

teich2_status teich2_wp_area_double_integral(double p_star, teich2_area* out) {
  TEICH2_REQUIRE(out, "out is null");
  return guarded([&] {
    const auto r = teich2::wp_area_double_integral(p_star);
    *out = {r.p_star, r.area, r.quad_error_estimate, r.evaluations};
  });
}

teich2_status teich2_parabola_fit(double p_min, double p_max, double step, teich2_fit* out) {
  TEICH2_REQUIRE(out, "out is null");
  return guarded([&] {
    const auto f = teich2::parabola_fit(p_min, p_max, step);
    *out = {f.c1, f.c2, f.residual_norm, f.max_relative_residual, f.samples};
  });
}

teich2_status teich2_fit_parabola(const double* x, const double* area, size_t n,
                                  teich2_fit* out) {
  TEICH2_REQUIRE(x && area && out, "null argument");
  return guarded([&] {
    const auto f = teich2::fit_parabola({x, n}, {area, n});
    *out = {f.c1, f.c2, f.residual_norm, f.max_relative_residual, f.samples};
  });
}

void teich2_validation_config_default(teich2_validation_config* config) {
  if (!config) return;
  const teich2::ValidationConfig d;
  *config = {d.n_a,      d.n_alpha, d.margin,  d.seed, d.orbit_samples, d.interior_samples,
             d.fd_step, nullptr,   nullptr,   0};
}

teich2_status teich2_validation_run(const teich2_validation_config* config, teich2_report** out) {
  TEICH2_REQUIRE(config && out, "null argument");
  TEICH2_REQUIRE(config->tolerance_count == 0 ||
                     (config->tolerance_names && config->tolerance_values),
                 "tolerance arrays are null");
  *out = nullptr;
  return guarded([&] {
    teich2::ValidationConfig c;
    c.n_a = config->n_a;
    c.n_alpha = config->n_alpha;
    c.margin = config->margin;
    c.seed = config->seed;
    c.orbit_samples = config->orbit_samples;
    c.interior_samples = config->interior_samples;
    c.fd_step = config->fd_step;
    for (size_t i = 0; i < config->tolerance_count; ++i) {
      c.tolerance_overrides[config->tolerance_names[i]] = config->tolerance_values[i];
    }
    *out = new teich2_report{teich2::run_validation(c)};
  });
}

void teich2_report_destroy(teich2_report* report) { delete report; }

size_t teich2_report_size(const teich2_report* report) {
  return report ? report->report.checks.size() : 0;
}

size_t teich2_report_grid_points(const teich2_report* report) {
  return report ? report->report.grid_points : 0;
}

int teich2_report_passed(const teich2_report* report) {
  return report && report->report.passed() ? 1 : 0;
}

teich2_status teich2_report_check(const teich2_report* report, size_t index, teich2_check* out) {
  TEICH2_REQUIRE(report && out, "null argument");
  TEICH2_REQUIRE(index < report->report.checks.size(), "check index out of range");
  const auto& c = report->report.checks[index];
  *out = {c.name.c_str(), c.module.c_str(), c.note.c_str(), c.max_residual,
          c.tolerance,    c.samples,        c.passed ? 1 : 0};
  return TEICH2_OK;
}

}  // extern "C"
