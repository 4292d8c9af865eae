#include "teich2/validation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "teich2/errors.hpp"
#include "teich2/fenchel_nielsen.hpp"
#include "teich2/fuchsian.hpp"
#include "teich2/hyperbolic.hpp"
#include "teich2/isoperimetric.hpp"
#include "teich2/parallel.hpp"

namespace teich2 {

std::vector<OctagonParams> parameter_grid(int n_a, int n_alpha, double margin) {
  if (n_a < 1 || n_alpha < 1) throw DomainError("grid dimensions must be positive");
  if (!(margin >= 0.0 && margin <= 0.2)) throw std::invalid_argument("grid margin must lie in [0, 0.2]");
  std::vector<OctagonParams> grid;
  const double at_lo = -kPi / 4.0 + margin;
  const double at_span = kPi / 2.0 - 2.0 * margin;
  for (int j = 0; j < n_alpha; ++j) {
    const double at = at_lo + (j + 0.5) / n_alpha * at_span;
    const double a_lo = lower_a_bound(at) + margin;
    const double a_hi = 1.0 - margin;
    if (!(a_hi > a_lo)) continue;
    for (int i = 0; i < n_a; ++i) {
      const double a = a_lo + (i + 0.5) / n_a * (a_hi - a_lo);
      grid.push_back(OctagonParams::validate(a, at, margin));
    }
  }
  return grid;
}

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> table = {
      {"hyperbolic.isometry", 1e-10},
      {"hyperbolic.geodesic_unit_speed", 1e-10},
      {"hyperbolic.m_half_turn_square", 1e-12},
      {"hyperbolic.half_turn_midpoint", 1e-12},
      {"octagon.angle_ordering", 0.0},
      {"octagon.t_minus_positive", 0.0},
      {"octagon.vertex_on_arc", 1e-10},
      {"octagon.midpoint_on_arc", 1e-10},
      {"octagon.involution", 1e-12},
      {"octagon.perimeter_oracle", 1e-8},
      {"octagon.perimeter_involution", 1e-9},
      {"octagon.opposite_sides", 1e-9},
      {"octagon.interior_angles", 1e-8},
      {"octagon.gauss_bonnet_area", 1e-8},
      {"group.relation", 1e-9},
      {"group.hyperbolic_generators", 0.0},
      {"group.three_constructions", 1e-9},
      {"group.rotation_conjugation", 1e-12},
      {"group.side_pairing", 1e-9},
      {"group.interior_disjointness", 0.0},
      {"fn.c_cosh", 1e-9},
      {"fn.d_closed_vs_trace", 1e-9},
      {"fn.d_twist_consistency", 1e-9},
      {"fn.length_oracles", 1e-9},
      {"fn.twist_argument", 1e-9},
      {"fn.primed_involution", 1e-12},
      {"fn.lt_relations", 1e-9},
      {"fn.wolpert_fd", 1e-5},
      {"fn.wolpert_k3", 1e-9},
      {"fn.wolpert_primed", 1e-5},
      {"fn.wolpert_pair_primed", 1e-5},
      {"fn.twist_sign_convention", 0.0},
      {"fn.wp_positive", 0.0},
      {"orbit.regular_constants", 1e-4},
      {"orbit.perimeter_constancy", 1e-8},
      {"orbit.mirror_symmetry", 1e-12},
      {"orbit.endpoints", 1e-12},
      {"orbit.a_extremes_backsubstitution", 1e-9},
      {"orbit.tangent_ratio", 1e-9},
      {"orbit.asymptotics", 1e-3},
      {"area.regular_zero", 1e-10},
      {"area.single_vs_double", 1e-4},
      {"area.monotone", 0.0},
  };
  return table;
}

namespace {

struct PointContext {
  const OctagonParams& params;
  OctagonGeometry geom;
  GeneratorSet gens;
};

struct GridCheck {
  const char* name;
  const char* module;
  std::function<double(const PointContext&)> residual;
};

double rel(double x, double ref) { return std::abs(x - ref) / std::max(1.0, std::abs(ref)); }

template <std::size_t N>
double max_rel(const std::array<double, N>& x, const std::array<double, N>& ref) {
  double worst = 0.0;
  for (std::size_t i = 0; i < N; ++i) worst = std::max(worst, rel(x[i], ref[i]));
  return worst;
}

std::vector<GridCheck> grid_checks(const ValidationConfig& config) {
  const double fd_step = config.fd_step;
  const std::size_t interior = config.interior_samples;
  const std::uint64_t seed = config.seed;
  return {
      {"octagon.angle_ordering", "octagon_model",
       [](const PointContext& c) {
         const double pp = c.geom.arc_plus.phi();
         const double pm = c.geom.arc_minus.phi();
         const double al = c.params.alpha();
         return (0.0 < pp && pp < al && al < pm && pm < kPi / 2.0) ? 0.0 : 1.0;
       }},
      {"octagon.t_minus_positive", "octagon_model",
       [](const PointContext& c) { return c.geom.t_minus > 0.0 ? 0.0 : 1.0; }},
      {"octagon.vertex_on_arc", "octagon_model",
       [](const PointContext& c) {
         double worst = 0.0;
         for (int k = 0; k < 8; ++k) {
           const GeodesicArc arc = c.geom.side_arc(k);
           worst = std::max({worst, arc.residual(c.geom.vertices[k].z()),
                             arc.residual(c.geom.vertices[(k + 1) % 8].z())});
         }
         return worst;
       }},
      {"octagon.midpoint_on_arc", "octagon_model",
       [](const PointContext& c) {
         double worst = 0.0;
         for (int k = 0; k < 8; ++k) {
           const DiskPoint m = c.geom.side_midpoint(k);
           worst = std::max(worst, c.geom.side_arc(k).residual(m.z()));
           worst = std::max(worst, std::abs(dist(m, c.geom.vertices[k]) -
                                            dist(m, c.geom.vertices[(k + 1) % 8])));
         }
         return worst;
       }},
      {"octagon.involution", "octagon_model",
       [](const PointContext& c) { return std::abs(c.params.dual().b() - c.params.a()); }},
      {"octagon.perimeter_oracle", "octagon_model",
       [](const PointContext& c) {
         return std::abs(perimeter(c.params) - perimeter_numeric(c.geom));
       }},
      {"octagon.perimeter_involution", "octagon_model",
       [](const PointContext& c) {
         return std::abs(perimeter(c.params) - perimeter(c.params.dual()));
       }},
      {"octagon.opposite_sides", "octagon_model",
       [](const PointContext& c) {
         double worst = 0.0;
         for (int k = 0; k < 4; ++k) {
           worst = std::max(worst, std::abs(side_length(c.geom, k) - side_length(c.geom, k + 4)));
         }
         return worst;
       }},
      {"octagon.interior_angles", "octagon_model",
       [](const PointContext& c) {
         const InteriorAngles ang = interior_angles_numeric(c.geom);
         return std::max(std::abs(ang.at_a - c.geom.beta),
                         std::abs(ang.at_b - (kPi / 2.0 - c.geom.beta)));
       }},
      {"octagon.gauss_bonnet_area", "octagon_model",
       [](const PointContext& c) {
         return std::abs(area_from_angles(interior_angles_numeric(c.geom)) - 4.0 * kPi);
       }},
      {"group.relation", "fuchsian_group",
       [](const PointContext& c) { return relation_check(c.gens).defect; }},
      {"group.hyperbolic_generators", "fuchsian_group",
       [](const PointContext& c) {
         double violations = 0.0;
         for (int k = 0; k < 4; ++k) {
           if (!(std::abs(c.gens.g(k).trace()) > 2.0)) violations += 1.0;
         }
         return violations;
       }},
      {"group.three_constructions", "fuchsian_group",
       [](const PointContext& c) {
         return std::max(max_projective_distance(c.gens, generators_from_m(c.geom)),
                         max_projective_distance(c.gens, generators_from_half_turns(c.geom)));
       }},
      {"group.rotation_conjugation", "fuchsian_group",
       [](const PointContext& c) {
         double worst = 0.0;
         for (const GeneratorSet& g :
              {c.gens, generators_from_m(c.geom), generators_from_half_turns(c.geom)}) {
           const RotationReport r = rotation_check(g);
           double scale = 1.0;
           for (const Mobius& m : g.letters) scale = std::max(scale, std::abs(m.u()));
           worst = std::max(
               worst, std::max(r.quarter_turn_residual, r.half_turn_inverse_residual) / scale);
         }
         return worst;
       }},
      {"group.side_pairing", "fuchsian_group",
       [](const PointContext& c) { return side_pairing_check(c.geom, c.gens, 0).max_residual(); }},
      {"group.interior_disjointness", "fuchsian_group",
       [interior, seed](const PointContext& c) {
         return static_cast<double>(
             side_pairing_check(c.geom, c.gens, interior, seed).interior_violations);
       }},
      {"fn.c_cosh", "fenchel_nielsen",
       [](const PointContext& c) {
         const TraceParams tp = trace_params(c.geom);
         const auto l = fn_lengths(c.params);
         double worst = 0.0;
         for (int k = 0; k < 3; ++k) worst = std::max(worst, rel(tp.c[k], std::cosh(0.5 * l[k])));
         return worst;
       }},
      {"fn.d_closed_vs_trace", "fenchel_nielsen",
       [](const PointContext& c) {
         const TraceParams tp = trace_params(c.geom);
         const TraceParams closed = trace_params_closed(c.params);
         return std::max(max_rel(tp.c, closed.c), max_rel(tp.d, closed.d));
       }},
      {"fn.d_twist_consistency", "fenchel_nielsen",
       [](const PointContext& c) {
         const TraceParams tp = trace_params(c.geom);
         return max_rel(d_from_twists(tp.c, fn_twists(c.params)), tp.d);
       }},
      {"fn.length_oracles", "fenchel_nielsen",
       [](const PointContext& c) {
         const double unprimed = max_rel(fn_lengths_geometric(c.geom), fn_lengths(c.params));
         const double primed =
             max_rel(fn_lengths_geometric(c.geom, true), fn_lengths(c.params.dual()));
         return std::max(unprimed, primed);
       }},
      {"fn.twist_argument", "fenchel_nielsen",
       [](const PointContext& c) {
         const double tau = fn_twists(c.params)[0];
         return rel(std::cosh(tau), twist_arccosh_argument(c.params));
       }},
      {"fn.primed_involution", "fenchel_nielsen",
       [](const PointContext& c) {
         const OctagonParams back = c.params.dual().dual();
         const auto l0 = fn_lengths(c.params);
         const auto t0 = fn_twists(c.params);
         return std::max(max_rel(fn_lengths(back), l0), max_rel(fn_twists(back), t0));
       }},
      {"fn.lt_relations", "fenchel_nielsen",
       [](const PointContext& c) { return lt_relations_check(c.params).max_abs(); }},
      {"fn.wolpert_fd", "fenchel_nielsen",
       [fd_step](const PointContext& c) {
         const double w = wp_coefficient(c.params);
         return std::abs(wp_fd_check(c.params, fd_step).value - w) / w;
       }},
      {"fn.wolpert_k3", "fenchel_nielsen",
       [fd_step](const PointContext& c) {
         const auto fd = wp_fd_check(c.params, fd_step);
         return std::max(std::abs(fd.k3_summand), std::abs(fd.primed_k3_summand));
       }},
      {"fn.wolpert_primed", "fenchel_nielsen",
       [fd_step](const PointContext& c) {
         const auto fd = wp_fd_check(c.params, fd_step);
         return std::abs(fd.primed_value - fd.value) / std::abs(fd.value);
       }},
      {"fn.wolpert_pair_primed", "fenchel_nielsen",
       [fd_step](const PointContext& c) {
         const auto fd = wp_fd_check(c.params, fd_step);
         return std::abs(fd.primed_pair_summand - fd.pair_summand) / std::abs(fd.pair_summand);
       }},
      {"fn.twist_sign_convention", "fenchel_nielsen",
       [fd_step](const PointContext& c) {
         // The opposite primed-twist sign must give omega' = -omega, not omega.
         const auto fd = wp_fd_check(c.params, fd_step);
         const double w = wp_coefficient(c.params);
         return std::abs(fd.primed_value_flipped + w) / w < 1e-5 ? 0.0 : 1.0;
       }},
      {"fn.wp_positive", "fenchel_nielsen",
       [](const PointContext& c) { return wp_coefficient(c.params) > 0.0 ? 0.0 : 1.0; }},
  };
}

CheckResult make_result(const std::string& name, const std::string& module, double residual,
                        double tolerance, std::size_t samples, std::string note = {}) {
  const bool ok = std::isfinite(residual) && residual <= tolerance;
  return {name, module, residual, tolerance, samples, ok, std::move(note)};
}

}  // namespace

ValidationReport run_validation(const ValidationConfig& config) {
  std::map<std::string, double> tol = default_tolerances();
  for (const auto& [name, value] : config.tolerance_overrides) {
    if (tol.find(name) == tol.end()) throw std::invalid_argument("unknown tolerance name: " + name);
    tol[name] = value;
  }

  ValidationReport report;
  const std::vector<OctagonParams> grid = parameter_grid(config.n_a, config.n_alpha, config.margin);
  report.grid_points = grid.size();

  // Disk primitives on seeded random samples.
  {
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    auto random_point = [&](double radius) {
      while (true) {
        const Complex z(unit(rng), unit(rng));
        if (std::abs(z) < 1.0) return DiskPoint(z * radius);
      }
    };
    const GeneratorSet gens = generators(OctagonParams::validate(0.8, kPi / 12.0));
    double iso = 0.0, speed = 0.0, msq = 0.0, ht = 0.0;
    const int n = 100;
    for (int i = 0; i < n; ++i) {
      const DiskPoint z = random_point(0.9);
      const DiskPoint w = random_point(0.9);
      const Mobius& g = gens[static_cast<Letter>(i % kLetterCount)];
      const Mobius t = half_turn(random_point(0.5)) * rotation(3.0 * unit(rng));
      for (const Mobius& m : {g, t}) {
        const double d0 = dist(z, w);
        iso = std::max(iso, std::abs(dist(m.apply(z), m.apply(w)) - d0) / std::max(1.0, d0));
      }
      const GeodesicArc arc = (i % 2 == 0) ? GeodesicArc::circular(0.1 + 2.0 * std::abs(unit(rng)),
                                                                    kPi * unit(rng))
                                           : GeodesicArc::diameter(kPi * unit(rng));
      const double s1 = 3.0 * unit(rng);
      const double s2 = 3.0 * unit(rng);
      speed = std::max(speed, std::abs(dist(arc.point(s1), arc.point(s2)) - std::abs(s1 - s2)));
      const Complex omega = random_point(0.95).z();
      const Mobius m = m_half_turn(omega);
      msq = std::max({msq, (m * m).distance_to_minus_identity(), std::abs(m.trace())});
      const DiskPoint p = random_point(0.95);
      ht = std::max(ht, std::abs(half_turn(p).apply(-p.z()) - p.z()));
    }
    report.checks.push_back(
        make_result("hyperbolic.isometry", "hyperbolic_core", iso, tol["hyperbolic.isometry"], n));
    report.checks.push_back(make_result("hyperbolic.geodesic_unit_speed", "hyperbolic_core", speed,
                                        tol["hyperbolic.geodesic_unit_speed"], n));
    report.checks.push_back(make_result("hyperbolic.m_half_turn_square", "hyperbolic_core", msq,
                                        tol["hyperbolic.m_half_turn_square"], n));
    report.checks.push_back(make_result("hyperbolic.half_turn_midpoint", "hyperbolic_core", ht,
                                        tol["hyperbolic.half_turn_midpoint"], n));
  }

  // Grid sweep: one row of residuals per point, reduced in check order.
  const std::vector<GridCheck> checks = grid_checks(config);
  std::vector<std::vector<double>> rows(grid.size());
  std::vector<int> relation_sign(grid.size(), 0);
  parallel_for(grid.size(), [&](std::size_t i) {
    const PointContext ctx{grid[i], build_geometry(grid[i]), generators(grid[i])};
    relation_sign[i] = relation_check(ctx.gens).sign;
    rows[i].reserve(checks.size());
    for (const GridCheck& check : checks) rows[i].push_back(check.residual(ctx));
  });
  for (std::size_t c = 0; c < checks.size(); ++c) {
    double worst = 0.0;
    for (const auto& row : rows) {
      worst = std::isfinite(row[c]) ? std::max(worst, row[c]) : row[c];
      if (!std::isfinite(worst)) break;
    }
    std::string note;
    if (std::string(checks[c].name) == "group.relation") {
      const bool all_plus =
          std::all_of(relation_sign.begin(), relation_sign.end(), [](int s) { return s == 1; });
      const bool all_minus =
          std::all_of(relation_sign.begin(), relation_sign.end(), [](int s) { return s == -1; });
      note = all_plus ? "product is +identity" : all_minus ? "product is -identity" : "mixed sign";
    }
    report.checks.push_back(make_result(checks[c].name, checks[c].module, worst,
                                        tol[checks[c].name], grid.size(), note));
  }

  // Regular octagon constants.
  {
    const double p_reg = p_regular();
    const OctagonParams reg = OctagonParams::regular();
    const double worst = std::max({std::abs(p_reg - 24.45713), std::abs(e_regular() - e_of_p(p_reg)),
                                   std::abs(perimeter(reg) - p_reg), std::abs(fn_twists(reg)[0]),
                                   std::abs(reg.b() - reg.a())});
    report.checks.push_back(make_result("orbit.regular_constants", "isoperimetric", worst,
                                        tol["orbit.regular_constants"], 1));
  }

  // Orbits for P = 25, 27, ..., 41.
  {
    double constancy = 0.0, mirror = 0.0, endpoints = 0.0, backsub = 0.0, tangent = 0.0;
    std::size_t samples = 0, tangent_samples = 0;
    const int n = config.orbit_samples;
    for (int pi = 0; pi < 9; ++pi) {
      const double p = 25.0 + 2.0 * pi;
      const double e = e_of_p(p);
      const auto [lo, hi] = a_extremes(e);
      backsub = std::max({backsub, std::abs(e_of_a(lo) - e) / e, std::abs(e_of_a(hi) - e) / e});
      const OrbitSample s0 = orbit_point(e, 0.0);
      const OrbitSample s1 = orbit_point(e, kPi);
      endpoints = std::max({endpoints, std::abs(s0.alpha_tilde), std::abs(s1.alpha_tilde),
                            std::abs(s0.a - hi), std::abs(s1.a - lo)});
      for (int k = 0; k < n; ++k) {
        const double phi = 2.0 * kPi * k / n;
        const OrbitSample s = orbit_point(e, phi);
        const OctagonParams q = OctagonParams::validate(s.a, s.alpha_tilde);
        constancy = std::max(constancy, std::abs(perimeter(q) - p) / p);
        if (k > 0) {
          const OrbitSample m = orbit_point(e, 2.0 * kPi - phi);
          mirror = std::max({mirror, std::abs(m.a - s.a), std::abs(m.alpha_tilde + s.alpha_tilde)});
        }
        ++samples;
        // At a_- and a_+ the ratio is sqrt(1 - E(a)/E*) at a zero, so only
        // sqrt(eps) is attainable there; those points belong to orbit.endpoints.
        if (2 * k == n || k == 0) continue;
        const double expected = std::abs(std::tan(s.alpha_tilde)) / std::sqrt(2.0 * s.a * s.a - 1.0);
        tangent = std::max(tangent, std::abs(orbit_tangent_ratio(e, s.a) - expected));
        ++tangent_samples;
      }
    }
    report.checks.push_back(make_result("orbit.perimeter_constancy", "isoperimetric", constancy,
                                        tol["orbit.perimeter_constancy"], samples));
    report.checks.push_back(make_result("orbit.mirror_symmetry", "isoperimetric", mirror,
                                        tol["orbit.mirror_symmetry"], samples));
    report.checks.push_back(
        make_result("orbit.endpoints", "isoperimetric", endpoints, tol["orbit.endpoints"], 9));
    report.checks.push_back(make_result("orbit.a_extremes_backsubstitution", "isoperimetric",
                                        backsub, tol["orbit.a_extremes_backsubstitution"], 18));
    report.checks.push_back(make_result("orbit.tangent_ratio", "isoperimetric", tangent,
                                        tol["orbit.tangent_ratio"], tangent_samples,
                                        "phi = 0 and pi excluded"));

    const double e = e_of_p(200.0);
    double asym = 0.0;
    for (int k = 0; k < n; ++k) {
      const double phi = 2.0 * kPi * k / n;
      const OrbitSample s = orbit_point(e, phi);
      const auto [a_inf, at_inf] = asymptotic_orbit(phi);
      asym = std::max({asym, std::abs(s.a - a_inf), k == 0 ? 0.0 : std::abs(s.alpha_tilde - at_inf)});
    }
    report.checks.push_back(make_result("orbit.asymptotics", "isoperimetric", asym,
                                        tol["orbit.asymptotics"], static_cast<std::size_t>(n),
                                        "phi = 0 excluded from the alpha_tilde comparison"));
  }

  // WP areas.
  {
    report.checks.push_back(make_result("area.regular_zero", "isoperimetric",
                                        std::abs(wp_area(p_regular()).area),
                                        tol["area.regular_zero"], 1));
    const std::vector<double> targets = {25.0, 30.0, 35.0, 41.0};
    std::vector<double> single(targets.size()), twod(targets.size());
    parallel_for(targets.size(), [&](std::size_t i) {
      single[i] = wp_area(targets[i]).area;
      twod[i] = wp_area_double_integral(targets[i]).area;
    });
    double worst = 0.0;
    std::size_t drops = 0;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      worst = std::max(worst, std::abs(single[i] - twod[i]) / std::abs(twod[i]));
      if (i > 0 && !(single[i] > single[i - 1])) ++drops;
    }
    report.checks.push_back(make_result("area.single_vs_double", "isoperimetric", worst,
                                        tol["area.single_vs_double"], targets.size()));
    report.checks.push_back(make_result("area.monotone", "isoperimetric",
                                        static_cast<double>(drops), tol["area.monotone"],
                                        targets.size()));
  }
  return report;
}

}  // namespace teich2
