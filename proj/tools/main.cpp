// teich2 command-line front end. Talks to the library only through teich2.h.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "io.hpp"
#include "teich2/teich2.h"

namespace {

using teich2io::Json;

constexpr double kPi = 3.14159265358979323846;

enum ExitCode { kOk = 0, kFailure = 1, kArgument = 2, kDomain = 3, kValidation = 4 };

// Raised for any library or argument failure; carries the exit code.
struct CliError {
  int exit_code;
  std::string code;
  std::string message;
  std::string bound;
};

const char* bound_name(teich2_domain_bound b) {
  switch (b) {
    case TEICH2_BOUND_LOWER_A: return "lower_a";
    case TEICH2_BOUND_UPPER_A: return "upper_a";
    case TEICH2_BOUND_ALPHA_RANGE: return "alpha_range";
    default: return "";
  }
}

void check(teich2_status status) {
  if (status == TEICH2_OK) return;
  int exit_code = kFailure;
  if (status == TEICH2_ERR_INVALID_ARGUMENT) exit_code = kArgument;
  if (status == TEICH2_ERR_DOMAIN || status == TEICH2_ERR_STEP_TOO_LARGE) exit_code = kDomain;
  const std::string bound =
      status == TEICH2_ERR_DOMAIN ? bound_name(teich2_last_domain_bound()) : "";
  throw CliError{exit_code, teich2_status_string(status), teich2_last_error(), bound};
}

[[noreturn]] void argument_error(const std::string& message) {
  throw CliError{kArgument, "invalid_argument", message, ""};
}

std::string fmt(double x) { return teich2io::format_double(x); }

Json cjson(teich2_complex z) { return Json::array({z.re, z.im}); }

teich2_complex cmul(teich2_complex a, teich2_complex b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Json mobius_json(const teich2_mobius& m) {
  return Json{{"u", cjson(m.u)}, {"v", cjson(m.v)}, {"trace", 2.0 * m.u.re}};
}

template <class T>
struct Handle {
  T* ptr = nullptr;
  void (*destroy)(T*);
  explicit Handle(void (*d)(T*)) : destroy(d) {}
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { destroy(ptr); }
};

struct Octagon : Handle<teich2_octagon> {
  Octagon() : Handle(teich2_octagon_destroy) {}
};
struct Group : Handle<teich2_group> {
  Group() : Handle(teich2_group_destroy) {}
};
struct Ball : Handle<teich2_ball> {
  Ball() : Handle(teich2_ball_destroy) {}
};
struct Report : Handle<teich2_report> {
  Report() : Handle(teich2_report_destroy) {}
};

// Options shared by every subcommand.
struct Common {
  std::string format;
  std::string output = "-";
};

// (a, alpha) or (a, alpha_tilde) for the geometry commands.
struct ParamOptions {
  std::optional<double> a;
  std::optional<double> alpha;
  std::optional<double> alpha_tilde;
  double margin = 0.0;

  void attach(CLI::App* sub) {
    sub->add_option("--a", a, "vertex modulus a (default: regular octagon)");
    auto* o1 = sub->add_option("--alpha", alpha, "vertex angle alpha");
    auto* o2 = sub->add_option("--alpha_tilde,--alpha-tilde", alpha_tilde,
                               "alpha - pi/4 (default 0)");
    o1->excludes(o2);
    sub->add_option("--margin", margin, "distance kept from the domain boundary")
        ->capture_default_str();
  }

  std::pair<double, double> resolve() const {
    if (!(margin >= 0.0 && margin <= 0.2)) argument_error("--margin must lie in [0, 0.2]");
    double at = 0.0;
    if (alpha) at = *alpha - kPi / 4.0;
    if (alpha_tilde) at = *alpha_tilde;
    return {a.value_or(teich2_a_regular()), at};
  }
};

void create_octagon(const ParamOptions& p, Octagon& out) {
  const auto [a, at] = p.resolve();
  check(teich2_octagon_create(a, at, p.margin, &out.ptr));
}

Json params_json(const teich2_octagon_info& info) {
  return Json{{"a", info.a}, {"alpha", info.alpha}, {"alpha_tilde", info.alpha_tilde},
              {"b", info.b}};
}

std::string resolve_format(const Common& c, const char* fallback, bool csv_allowed) {
  const std::string f = c.format.empty() ? fallback : c.format;
  if (f == "csv" && !csv_allowed) argument_error("this command emits JSON only");
  return f;
}

int run_octagon(const Common& common, const ParamOptions& params) {
  resolve_format(common, "json", false);
  Octagon oct;
  create_octagon(params, oct);
  teich2_octagon_info info{};
  check(teich2_octagon_get_info(oct.ptr, &info));

  Json sides = Json::array();
  for (int k = 0; k < 8; ++k) {
    double r = 0, phi = 0;
    check(teich2_octagon_side_arc(oct.ptr, k, &r, &phi));
    sides.push_back(Json{{"side", k}, {"R", r}, {"phi", phi}});
  }
  Json vertices = Json::array();
  for (const auto& v : info.vertices) vertices.push_back(cjson(v));
  // p_0..p_3 = p+, p-, i p+, i p-, then p_{k+4} = -p_k.
  Json midpoints = Json::array();
  const teich2_complex base[4] = {info.p_plus, info.p_minus, cmul({0, 1}, info.p_plus),
                                  cmul({0, 1}, info.p_minus)};
  for (int k = 0; k < 8; ++k) {
    const teich2_complex p = base[k % 4];
    midpoints.push_back(k < 4 ? cjson(p) : cjson({-p.re, -p.im}));
  }
  const double angle_sum = 4.0 * (info.angle_at_a + info.angle_at_b);

  Json doc{{"command", "octagon"},
           {"params", params_json(info)},
           {"beta", info.beta},
           {"pi_half_minus_beta", kPi / 2.0 - info.beta},
           {"T_plus", info.t_plus},
           {"T_minus", info.t_minus},
           {"R_plus", info.r_plus},
           {"phi_plus", info.phi_plus},
           {"R_minus", info.r_minus},
           {"phi_minus", info.phi_minus},
           {"omega_plus", cjson(info.omega_plus)},
           {"omega_minus", cjson(info.omega_minus)},
           {"omega4", info.omega4},
           {"sides", sides},
           {"vertices", vertices},
           {"midpoints", midpoints},
           {"perimeter", info.perimeter},
           {"perimeter_vertex_sum", info.perimeter_numeric},
           {"angles",
            Json{{"at_a", info.angle_at_a},
                 {"at_b", info.angle_at_b},
                 {"sum", angle_sum},
                 {"beta_residual", std::abs(info.angle_at_a - info.beta)},
                 {"complement_residual", std::abs(info.angle_at_b - (kPi / 2.0 - info.beta))}}},
           {"area", Json{{"from_angles", info.area_from_angles}, {"expected", 4.0 * kPi}}}};
  teich2io::emit_json(doc, common.output);
  return kOk;
}

struct GroupOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
};

int run_group(const Common& common, const ParamOptions& params, const GroupOptions& opts) {
  resolve_format(common, "json", false);
  Octagon oct;
  create_octagon(params, oct);
  teich2_octagon_info info{};
  check(teich2_octagon_get_info(oct.ptr, &info));
  Group group;
  check(teich2_group_create(oct.ptr, &group.ptr));

  Json gens = Json::array();
  for (int letter = 0; letter < 8; ++letter) {
    teich2_mobius m{};
    check(teich2_group_letter(group.ptr, letter, &m));
    Json g = mobius_json(m);
    g["name"] = "g" + std::to_string(letter / 2) + (letter % 2 ? "^-1" : "");
    gens.push_back(g);
  }
  double norm = 0;
  check(teich2_group_normalization(group.ptr, &norm));
  teich2_relation_info rel{};
  check(teich2_group_relation(group.ptr, &rel));
  double via_m = 0, via_h = 0;
  check(teich2_group_construction_defect(group.ptr, &via_m, &via_h));
  teich2_side_pairing_info sp{};
  check(teich2_group_side_pairing(group.ptr, opts.samples, opts.seed, &sp));

  Json doc{{"command", "group"},
           {"params", params_json(info)},
           {"normalization", norm},
           {"generators", gens},
           {"relation",
            Json{{"word", "g0*g1^-1*g2*g3^-1*g0^-1*g1*g2^-1*g3"},
                 {"sign", rel.sign},
                 {"defect", rel.defect},
                 {"product", mobius_json(rel.product)}}},
           {"construction_defect", Json{{"via_m", via_m}, {"via_half_turn", via_h}}},
           {"side_pairing",
            Json{{"endpoint_residual", sp.endpoint_residual},
                 {"midpoint_residual", sp.midpoint_residual},
                 {"interior_samples", sp.interior_samples},
                 {"interior_violations", sp.interior_violations},
                 {"seed", opts.seed}}}};
  teich2io::emit_json(doc, common.output);
  return kOk;
}

Json pants_json(const teich2_pants& p, const double geometric[3]) {
  return Json{{"lengths", p.lengths},   {"lengths_geometric", Json::array({geometric[0], geometric[1], geometric[2]})},
              {"twists", p.twists},     {"c", p.c},
              {"d", p.d},               {"p_aux", p.p_aux}};
}

int run_fn(const Common& common, const ParamOptions& params, double h) {
  resolve_format(common, "json", false);
  Octagon oct;
  create_octagon(params, oct);
  teich2_octagon_info info{};
  check(teich2_octagon_get_info(oct.ptr, &info));

  teich2_pants unprimed{}, primed{};
  double geo[3], geo_primed[3], c[3], d[3];
  check(teich2_fn_pants(oct.ptr, 0, &unprimed));
  check(teich2_fn_pants(oct.ptr, 1, &primed));
  check(teich2_fn_lengths_geometric(oct.ptr, 0, geo));
  check(teich2_fn_lengths_geometric(oct.ptr, 1, geo_primed));
  check(teich2_fn_trace_closed(oct.ptr, c, d));
  teich2_lt_info lt{};
  check(teich2_fn_lt_check(oct.ptr, &lt));
  double coeff = 0;
  check(teich2_wp_coefficient(oct.ptr, &coeff));
  teich2_wp_fd fd{};
  check(teich2_wp_fd_check(oct.ptr, h, &fd));

  Json doc{{"command", "fn"},
           {"params", params_json(info)},
           {"unprimed", pants_json(unprimed, geo)},
           {"primed", pants_json(primed, geo_primed)},
           {"trace_closed", Json{{"c", c}, {"d", d}}},
           {"lt_residuals",
            Json{{"L3", lt.l3_residual},
                 {"tau3", lt.tau3_residual},
                 {"L3_primed", lt.l3_primed_residual},
                 {"tau3_primed", lt.tau3_primed_residual},
                 {"L1_primed", lt.l1_primed_residual},
                 {"T1_primed", lt.t1_primed_residual}}},
           {"wp_coefficient", coeff},
           {"wp_finite_difference",
            Json{{"step", fd.step},
                 {"value", fd.value},
                 {"pair_summand", fd.pair_summand},
                 {"k3_summand", fd.k3_summand},
                 {"primed_value", fd.primed_value},
                 {"primed_pair_summand", fd.primed_pair_summand},
                 {"primed_k3_summand", fd.primed_k3_summand},
                 {"primed_value_flipped_sign", fd.primed_value_flipped},
                 {"relative_error", std::abs(fd.value - coeff) / std::abs(coeff)},
                 {"primed_relative_error", std::abs(fd.primed_value - coeff) / std::abs(coeff)}}}};
  teich2io::emit_json(doc, common.output);
  return kOk;
}

struct OrbitOptions {
  std::vector<double> p;
  std::vector<double> e;
  int samples = 256;
};

int run_orbit(const Common& common, const OrbitOptions& opts) {
  const std::string format = resolve_format(common, "csv", true);
  if (opts.samples < 1) argument_error("--samples must be positive");
  std::vector<double> levels;
  if (!opts.e.empty()) {
    levels = opts.e;
  } else {
    const std::vector<double> ps = opts.p.empty()
                                       ? std::vector<double>{25, 27, 29, 31, 33, 35, 37, 39, 41}
                                       : opts.p;
    for (double p : ps) {
      double e = 0;
      check(teich2_e_of_p(p, &e));
      levels.push_back(e);
    }
  }

  teich2io::CsvTable table{{"P", "phi", "a", "alpha_tilde", "P_check"}, {}};
  Json orbits = Json::array();
  for (double e : levels) {
    double p = 0;
    check(teich2_p_of_e(e, &p));
    Json samples = Json::array();
    double worst = 0.0;
    for (int j = 0; j < opts.samples; ++j) {
      const double phi = 2.0 * kPi * j / opts.samples;
      teich2_orbit_sample s{};
      check(teich2_orbit_point(e, phi, &s));
      Octagon oct;
      check(teich2_octagon_create(s.a, s.alpha_tilde, 0.0, &oct.ptr));
      teich2_octagon_info info{};
      check(teich2_octagon_get_info(oct.ptr, &info));
      worst = std::max(worst, std::abs(info.perimeter - p) / p);
      table.add_row({fmt(p), fmt(phi), fmt(s.a), fmt(s.alpha_tilde), fmt(info.perimeter)});
      samples.push_back(Json{{"phi", phi}, {"a", s.a}, {"alpha_tilde", s.alpha_tilde},
                             {"P_check", info.perimeter}});
    }
    orbits.push_back(Json{{"P", p}, {"E", e}, {"max_relative_deviation", worst},
                          {"samples", samples}});
  }
  if (format == "csv") {
    teich2io::emit_csv(table, common.output);
  } else {
    teich2io::emit_json(Json{{"command", "orbit"}, {"orbits", orbits}}, common.output);
  }
  return kOk;
}

struct AreaOptions {
  std::vector<double> p;
  std::optional<double> from;
  double to = 41.0;
  double step = 0.5;
  bool check_2d = false;
};

int run_area(const Common& common, const AreaOptions& opts) {
  const std::string format = resolve_format(common, "csv", true);
  std::vector<double> ps = opts.p;
  if (ps.empty()) {
    if (!(opts.step > 0)) argument_error("--step must be positive");
    const double from = opts.from.value_or(teich2_p_regular());
    for (int i = 0;; ++i) {
      const double p = from + i * opts.step;
      if (p > opts.to + 1e-9) break;
      ps.push_back(p);
    }
  }

  std::vector<std::string> header{"P", "area"};
  if (opts.check_2d) {
    header.push_back("area_2d");
    header.push_back("relative_difference");
  }
  teich2io::CsvTable table{header, {}};
  Json rows = Json::array();
  std::vector<double> xs, areas;
  for (double p : ps) {
    teich2_area r{};
    check(teich2_wp_area(p, &r));
    xs.push_back(p - teich2_p_regular());
    areas.push_back(r.area);
    std::vector<std::string> row{fmt(p), fmt(r.area)};
    Json entry{{"P", p}, {"area", r.area}, {"error_estimate", r.quad_error_estimate}};
    if (opts.check_2d) {
      teich2_area r2{};
      check(teich2_wp_area_double_integral(p, &r2));
      const double rel = r.area == 0.0 ? std::abs(r2.area) : std::abs(r.area - r2.area) / r.area;
      row.push_back(fmt(r2.area));
      row.push_back(fmt(rel));
      entry["area_2d"] = r2.area;
      entry["relative_difference"] = rel;
    }
    table.add_row(row);
    rows.push_back(entry);
  }

  Json fit_json = nullptr;
  if (xs.size() >= 3) {
    teich2_fit fit{};
    check(teich2_fit_parabola(xs.data(), areas.data(), xs.size(), &fit));
    fit_json = Json{{"c1", fit.c1},
                    {"c2", fit.c2},
                    {"residual_norm", fit.residual_norm},
                    {"max_relative_residual", fit.max_relative_residual},
                    {"samples", fit.samples}};
    if (format == "csv") {
      std::fprintf(stderr, "fit: area = c1 (P - P_reg)^2 + c2 (P - P_reg), c1 = %s, c2 = %s\n",
                   fmt(fit.c1).c_str(), fmt(fit.c2).c_str());
    }
  }
  if (format == "csv") {
    teich2io::emit_csv(table, common.output);
  } else {
    teich2io::emit_json(Json{{"command", "area"},
                             {"P_regular", teich2_p_regular()},
                             {"samples", rows},
                             {"fit", fit_json}},
                        common.output);
  }
  return kOk;
}

struct TilingOptions {
  int radius = 2;
  std::size_t capacity = 0;
  std::string cells_path;
  std::string svg_path;
};

int run_tiling(const Common& common, const ParamOptions& params, const TilingOptions& opts) {
  const std::string format = resolve_format(common, "csv", true);
  if (opts.radius < 0) argument_error("--radius must be nonnegative");
  Octagon oct;
  create_octagon(params, oct);
  Group group;
  check(teich2_group_create(oct.ptr, &group.ptr));
  Ball ball;
  check(teich2_ball_create(group.ptr, opts.radius, opts.capacity, &ball.ptr));

  const std::size_t n = teich2_ball_size(ball.ptr);
  teich2io::CsvTable words{{"word", "u_re", "u_im", "v_re", "v_im"}, {}};
  std::vector<std::string> cell_header{"cell", "word"};
  for (int k = 0; k < 8; ++k) {
    cell_header.push_back("v" + std::to_string(k) + "_re");
    cell_header.push_back("v" + std::to_string(k) + "_im");
  }
  teich2io::CsvTable cells{cell_header, {}};
  std::vector<teich2io::Polygon> polygons;
  Json elements = Json::array();
  std::vector<char> buffer(64);

  for (std::size_t i = 0; i < n; ++i) {
    teich2_mobius m{};
    std::size_t need = 0;
    check(teich2_ball_element(ball.ptr, i, &m, nullptr, 0, &need));
    if (need > buffer.size()) buffer.resize(need);
    check(teich2_ball_element(ball.ptr, i, nullptr, buffer.data(), buffer.size(), nullptr));
    const std::string word = buffer.data();
    words.add_row({word, fmt(m.u.re), fmt(m.u.im), fmt(m.v.re), fmt(m.v.im)});

    teich2_complex v[8];
    check(teich2_ball_cell(ball.ptr, i, v));
    std::vector<std::string> row{std::to_string(i), word};
    teich2io::Polygon poly{};
    for (int k = 0; k < 8; ++k) {
      row.push_back(fmt(v[k].re));
      row.push_back(fmt(v[k].im));
      poly[k] = {v[k].re, v[k].im};
    }
    cells.add_row(row);
    polygons.push_back(poly);
    elements.push_back(Json{{"word", word}, {"u", cjson(m.u)}, {"v", cjson(m.v)}});
  }

  if (format == "csv") {
    teich2io::emit_csv(words, common.output);
  } else {
    Json spheres = Json::array();
    for (int r = 0; r <= opts.radius; ++r) {
      std::size_t s = 0;
      check(teich2_ball_sphere_size(ball.ptr, r, &s));
      spheres.push_back(s);
    }
    teich2io::emit_json(Json{{"command", "tiling"},
                             {"radius", opts.radius},
                             {"size", n},
                             {"sphere_sizes", spheres},
                             {"elements", elements}},
                        common.output);
  }
  if (!opts.cells_path.empty()) teich2io::emit_csv(cells, opts.cells_path);
  if (!opts.svg_path.empty()) teich2io::emit_svg(polygons, opts.svg_path);
  return kOk;
}

struct ValidateOptions {
  std::vector<int> grid{20, 20};
  double margin = 0.02;
  std::uint64_t seed = 1;
  int samples = 256;
  std::size_t interior_samples = 100;
  double fd_step = 1e-5;
  std::vector<std::string> tolerances;
};

int run_validate(const Common& common, const ValidateOptions& opts) {
  const std::string format = resolve_format(common, "json", true);
  if (!(opts.margin >= 0.0 && opts.margin <= 0.2)) argument_error("--margin must lie in [0, 0.2]");
  if (opts.grid[0] < 1 || opts.grid[1] < 1) argument_error("--grid sizes must be positive");

  std::vector<std::string> names;
  std::vector<double> values;
  for (const auto& t : opts.tolerances) {
    const auto eq = t.find('=');
    if (eq == std::string::npos || eq == 0) argument_error("--tol expects name=value, got " + t);
    names.push_back(t.substr(0, eq));
    try {
      std::size_t used = 0;
      values.push_back(std::stod(t.substr(eq + 1), &used));
      if (used != t.size() - eq - 1) throw std::invalid_argument(t);
    } catch (const std::exception&) {
      argument_error("--tol value is not a number: " + t);
    }
  }
  std::vector<const char*> name_ptrs;
  for (const auto& s : names) name_ptrs.push_back(s.c_str());

  teich2_validation_config config{};
  teich2_validation_config_default(&config);
  config.n_a = opts.grid[0];
  config.n_alpha = opts.grid[1];
  config.margin = opts.margin;
  config.seed = opts.seed;
  config.orbit_samples = opts.samples;
  config.interior_samples = opts.interior_samples;
  config.fd_step = opts.fd_step;
  config.tolerance_names = name_ptrs.data();
  config.tolerance_values = values.data();
  config.tolerance_count = names.size();

  Report report;
  check(teich2_validation_run(&config, &report.ptr));
  const bool passed = teich2_report_passed(report.ptr) != 0;

  teich2io::CsvTable table{{"name", "module", "max_residual", "tolerance", "samples", "passed"},
                           {}};
  Json checks = Json::array();
  for (std::size_t i = 0; i < teich2_report_size(report.ptr); ++i) {
    teich2_check c{};
    check(teich2_report_check(report.ptr, i, &c));
    table.add_row({c.name, c.module, fmt(c.max_residual), fmt(c.tolerance),
                   std::to_string(c.samples), c.passed ? "true" : "false"});
    Json entry{{"name", c.name},         {"module", c.module},   {"max_residual", c.max_residual},
               {"tolerance", c.tolerance}, {"samples", c.samples}, {"passed", c.passed != 0}};
    if (*c.note) entry["note"] = c.note;
    checks.push_back(entry);
    if (!c.passed) {
      std::fprintf(stderr, "FAILED %s: residual %s > tolerance %s\n", c.name,
                   fmt(c.max_residual).c_str(), fmt(c.tolerance).c_str());
    }
  }
  if (format == "csv") {
    teich2io::emit_csv(table, common.output);
  } else {
    teich2io::emit_json(Json{{"command", "validate"},
                             {"grid", Json{{"n_a", opts.grid[0]},
                                           {"n_alpha", opts.grid[1]},
                                           {"margin", opts.margin},
                                           {"points", teich2_report_grid_points(report.ptr)}}},
                             {"seed", opts.seed},
                             {"passed", passed},
                             {"checks", checks}},
                        common.output);
  }
  return passed ? kOk : kValidation;
}

bool wants_json(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--format=json") return true;
    if (arg == "--format" && i + 1 < argc && std::strcmp(argv[i + 1], "json") == 0) return true;
  }
  return false;
}

int report_error(const CliError& e, bool json) {
  std::fprintf(stderr, "teich2: error: %s\n", e.message.c_str());
  if (json) {
    Json err{{"code", e.code}, {"exit_code", e.exit_code}, {"message", e.message}};
    if (!e.bound.empty()) err["bound"] = e.bound;
    std::cout << teich2io::to_json(teich2io::versioned(Json{{"error", err}})) << std::flush;
  }
  return e.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus-2 octagon surfaces: geometry, Fuchsian group, Fenchel-Nielsen data, "
               "Weil-Petersson areas"};
  app.set_version_flag("--version", std::string(teich2_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--format", common.format, "output format (json or csv)")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("-o,--output", common.output, "output path, '-' for stdout")
      ->capture_default_str();

  ParamOptions oct_params, group_params, fn_params, tiling_params;

  auto* octagon = app.add_subcommand("octagon", "geometry of the octagon at (a, alpha)");
  oct_params.attach(octagon);

  auto* group = app.add_subcommand("group", "side-pairing generators and their checks");
  group_params.attach(group);
  GroupOptions group_opts;
  group->add_option("--samples", group_opts.samples, "interior points for the pairing test")
      ->capture_default_str();
  group->add_option("--seed", group_opts.seed)->capture_default_str();

  auto* fn = app.add_subcommand("fn", "Fenchel-Nielsen data and the Weil-Petersson form");
  fn_params.attach(fn);
  double fd_step = 1e-5;
  fn->add_option("--step", fd_step, "relative finite-difference step h")->capture_default_str();

  auto* orbit = app.add_subcommand("orbit", "constant-perimeter orbits");
  OrbitOptions orbit_opts;
  auto* op = orbit->add_option("--P", orbit_opts.p, "perimeter levels (default 25 27 ... 41)");
  auto* oe = orbit->add_option("--E", orbit_opts.e, "levels given as E = 2(cosh(P/8) + 1)");
  op->excludes(oe);
  orbit->add_option("--samples", orbit_opts.samples, "phi samples per orbit")
      ->capture_default_str();

  auto* area = app.add_subcommand("area", "Weil-Petersson area inside each orbit and parabola fit");
  AreaOptions area_opts;
  auto* ap = area->add_option("--P", area_opts.p, "explicit perimeter levels");
  auto* af = area->add_option("--from", area_opts.from, "first level (default P_reg)");
  auto* at = area->add_option("--to", area_opts.to, "last level")->capture_default_str();
  auto* as = area->add_option("--step", area_opts.step, "level spacing")->capture_default_str();
  ap->excludes(af)->excludes(at)->excludes(as);
  area->add_flag("--check-2d", area_opts.check_2d, "also integrate the 2-D form directly");

  auto* tiling = app.add_subcommand("tiling", "group ball and the tiling cells it generates");
  tiling_params.attach(tiling);
  TilingOptions tiling_opts;
  tiling->add_option("--radius,-n", tiling_opts.radius, "word-length radius")
      ->capture_default_str();
  tiling->add_option("--capacity", tiling_opts.capacity, "element cap (0 = library default)");
  tiling->add_option("--cells", tiling_opts.cells_path, "per-cell vertex CSV path");
  tiling->add_option("--svg", tiling_opts.svg_path, "SVG rendering path");

  auto* validate = app.add_subcommand("validate", "run the full invariant suite");
  ValidateOptions val_opts;
  validate->add_option("--grid", val_opts.grid, "grid size n_a n_alpha")
      ->expected(2)
      ->capture_default_str();
  validate->add_option("--margin", val_opts.margin)->capture_default_str();
  validate->add_option("--seed", val_opts.seed)->capture_default_str();
  validate->add_option("--samples", val_opts.samples, "phi samples per orbit")
      ->capture_default_str();
  validate->add_option("--interior-samples", val_opts.interior_samples)->capture_default_str();
  validate->add_option("--fd-step", val_opts.fd_step)->capture_default_str();
  validate->add_option("--tol", val_opts.tolerances, "override a tolerance, name=value");

  const bool json_errors = wants_json(argc, argv);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error({kArgument, "invalid_argument", e.what(), ""}, json_errors);
  }

  try {
    if (*octagon) return run_octagon(common, oct_params);
    if (*group) return run_group(common, group_params, group_opts);
    if (*fn) return run_fn(common, fn_params, fd_step);
    if (*orbit) return run_orbit(common, orbit_opts);
    if (*area) return run_area(common, area_opts);
    if (*tiling) return run_tiling(common, tiling_params, tiling_opts);
    if (*validate) return run_validate(common, val_opts);
  } catch (const CliError& e) {
    return report_error(e, json_errors);
  } catch (const teich2io::IoError& e) {
    return report_error({kFailure, "io", e.what(), ""}, json_errors);
  } catch (const std::exception& e) {
    return report_error({kFailure, "internal", e.what(), ""}, json_errors);
  }
  return kArgument;
}
