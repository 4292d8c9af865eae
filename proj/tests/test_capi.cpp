#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

#include "teich2/teich2.h"

TEST(CApi, StatusStringsAndVersion) {
  EXPECT_STREQ(teich2_status_string(TEICH2_OK), "ok");
  EXPECT_STREQ(teich2_status_string(TEICH2_ERR_DOMAIN), "domain");
  EXPECT_NE(std::string(teich2_version()), "");
}

TEST(CApi, DiskPrimitives) {
  double d = 0;
  ASSERT_EQ(teich2_dist({0, 0}, {0.5, 0}, &d), TEICH2_OK);
  EXPECT_NEAR(d, std::log(3.0), 1e-15);
  EXPECT_EQ(teich2_dist({0, 0}, {1.5, 0}, &d), TEICH2_ERR_DOMAIN);
  EXPECT_NE(std::string(teich2_last_error()), "");
  EXPECT_EQ(teich2_dist({0, 0}, {0, 0}, nullptr), TEICH2_ERR_INVALID_ARGUMENT);

  teich2_mobius h{}, inv{}, prod{};
  ASSERT_EQ(teich2_half_turn({0.3, 0.1}, &h), TEICH2_OK);
  teich2_complex z{};
  ASSERT_EQ(teich2_mobius_apply(&h, {-0.3, -0.1}, &z), TEICH2_OK);
  EXPECT_NEAR(z.re, 0.3, 1e-14);
  EXPECT_NEAR(z.im, 0.1, 1e-14);
  ASSERT_EQ(teich2_mobius_inverse(&h, &inv), TEICH2_OK);
  ASSERT_EQ(teich2_mobius_compose(&h, &inv, &prod), TEICH2_OK);
  EXPECT_NEAR(std::abs(prod.u.re), 1.0, 1e-13);
  EXPECT_NEAR(std::hypot(prod.v.re, prod.v.im), 0.0, 1e-13);

  teich2_mobius bad{{2, 0}, {0, 0}};
  EXPECT_EQ(teich2_mobius_inverse(&bad, &inv), TEICH2_ERR_DOMAIN);
}

TEST(CApi, OctagonLifecycleAndDomainBounds) {
  teich2_octagon* oct = nullptr;
  EXPECT_EQ(teich2_octagon_create(0.5, 0.0, 0.0, &oct), TEICH2_ERR_DOMAIN);
  EXPECT_EQ(oct, nullptr);
  EXPECT_EQ(teich2_last_domain_bound(), TEICH2_BOUND_LOWER_A);
  EXPECT_EQ(teich2_octagon_create(0.9, 1.0, 0.0, &oct), TEICH2_ERR_DOMAIN);
  EXPECT_EQ(teich2_last_domain_bound(), TEICH2_BOUND_ALPHA_RANGE);
  EXPECT_EQ(teich2_octagon_create(0.99, 0.0, 0.02, &oct), TEICH2_ERR_DOMAIN);
  EXPECT_EQ(teich2_last_domain_bound(), TEICH2_BOUND_UPPER_A);

  ASSERT_EQ(teich2_octagon_create(0.8, M_PI / 12.0, 0.0, &oct), TEICH2_OK);
  EXPECT_EQ(teich2_last_domain_bound(), TEICH2_BOUND_NONE);
  teich2_octagon_info info{};
  ASSERT_EQ(teich2_octagon_get_info(oct, &info), TEICH2_OK);
  EXPECT_NEAR(info.perimeter, 27.0233287060748, 1e-12);
  EXPECT_NEAR(info.perimeter_numeric, info.perimeter, 1e-10);
  EXPECT_NEAR(info.area_from_angles, 4.0 * M_PI, 1e-11);
  EXPECT_NEAR(info.alpha, M_PI / 3.0, 1e-15);
  double r = 0, phi = 0;
  EXPECT_EQ(teich2_octagon_side_arc(oct, 8, &r, &phi), TEICH2_ERR_INVALID_ARGUMENT);
  ASSERT_EQ(teich2_octagon_side_arc(oct, 1, &r, &phi), TEICH2_OK);
  EXPECT_NEAR(r, info.r_minus, 0.0);
  teich2_octagon_destroy(oct);
  teich2_octagon_destroy(nullptr);
}

TEST(CApi, GroupAndBall) {
  teich2_octagon* oct = nullptr;
  ASSERT_EQ(teich2_octagon_create(0.8, M_PI / 12.0, 0.0, &oct), TEICH2_OK);
  teich2_group* group = nullptr;
  ASSERT_EQ(teich2_group_create(oct, &group), TEICH2_OK);
  teich2_octagon_destroy(oct);  // the group keeps its own copy

  teich2_relation_info rel{};
  ASSERT_EQ(teich2_group_relation(group, &rel), TEICH2_OK);
  EXPECT_EQ(rel.sign, 1);
  EXPECT_LT(rel.defect, 1e-9);
  double via_m = 1, via_h = 1;
  ASSERT_EQ(teich2_group_construction_defect(group, &via_m, &via_h), TEICH2_OK);
  EXPECT_LT(via_m, 1e-9);
  EXPECT_LT(via_h, 1e-9);
  teich2_side_pairing_info sp{};
  ASSERT_EQ(teich2_group_side_pairing(group, 50, 3, &sp), TEICH2_OK);
  EXPECT_EQ(sp.interior_violations, 0u);
  teich2_mobius m{};
  EXPECT_EQ(teich2_group_letter(group, 8, &m), TEICH2_ERR_INVALID_ARGUMENT);

  teich2_ball* ball = nullptr;
  EXPECT_EQ(teich2_ball_create(group, 3, 50, &ball), TEICH2_ERR_CAPACITY);
  ASSERT_EQ(teich2_ball_create(group, 2, 0, &ball), TEICH2_OK);
  EXPECT_EQ(teich2_ball_size(ball), 65u);
  std::size_t s = 0;
  ASSERT_EQ(teich2_ball_sphere_size(ball, 2, &s), TEICH2_OK);
  EXPECT_EQ(s, 56u);
  EXPECT_EQ(teich2_ball_sphere_size(ball, 3, &s), TEICH2_ERR_INVALID_ARGUMENT);

  std::size_t need = 0;
  ASSERT_EQ(teich2_ball_element(ball, 64, nullptr, nullptr, 0, &need), TEICH2_OK);
  std::vector<char> small(need - 1);
  EXPECT_EQ(teich2_ball_element(ball, 64, nullptr, small.data(), small.size(), nullptr),
            TEICH2_ERR_INVALID_ARGUMENT);
  std::vector<char> buf(need);
  ASSERT_EQ(teich2_ball_element(ball, 64, &m, buf.data(), buf.size(), nullptr), TEICH2_OK);
  EXPECT_EQ(std::string(buf.data()), "g3^-1*g3^-1");
  ASSERT_EQ(teich2_ball_element(ball, 0, &m, buf.data(), buf.size(), nullptr), TEICH2_OK);
  EXPECT_EQ(std::string(buf.data()), "e");

  teich2_complex v[8];
  ASSERT_EQ(teich2_ball_cell(ball, 1, v), TEICH2_OK);
  for (const auto& z : v) EXPECT_LT(std::hypot(z.re, z.im), 1.0);
  teich2_ball_destroy(ball);
  teich2_group_destroy(group);
}

TEST(CApi, FenchelNielsenAndWeilPetersson) {
  teich2_octagon* oct = nullptr;
  ASSERT_EQ(teich2_octagon_create(0.8, M_PI / 12.0, 0.0, &oct), TEICH2_OK);
  teich2_pants p{};
  ASSERT_EQ(teich2_fn_pants(oct, 0, &p), TEICH2_OK);
  EXPECT_NEAR(p.lengths[0], 2.35585692173153, 1e-13);
  EXPECT_EQ(p.primed, 0);
  ASSERT_EQ(teich2_fn_pants(oct, 1, &p), TEICH2_OK);
  EXPECT_NEAR(p.lengths[0], 4.64430802418112, 1e-13);
  EXPECT_EQ(p.primed, 1);
  double geo[3], c[3], d[3];
  ASSERT_EQ(teich2_fn_lengths_geometric(oct, 1, geo), TEICH2_OK);
  EXPECT_NEAR(geo[0], p.lengths[0], 1e-9);
  ASSERT_EQ(teich2_fn_trace_closed(oct, c, d), TEICH2_OK);
  EXPECT_NEAR(d[2] + 1.0, 15.4320987654321, 1e-12);
  teich2_lt_info lt{};
  ASSERT_EQ(teich2_fn_lt_check(oct, &lt), TEICH2_OK);
  EXPECT_LT(std::abs(lt.l3_residual), 1e-9);
  double w = 0;
  ASSERT_EQ(teich2_wp_coefficient(oct, &w), TEICH2_OK);
  EXPECT_NEAR(w, 91.5171429851893, 1e-11);
  teich2_wp_fd fd{};
  ASSERT_EQ(teich2_wp_fd_check(oct, 1e-5, &fd), TEICH2_OK);
  EXPECT_NEAR(fd.value, w, 1e-5 * w);
  teich2_octagon_destroy(oct);

  ASSERT_EQ(teich2_octagon_create(0.9995, 0.0, 0.0, &oct), TEICH2_OK);
  EXPECT_EQ(teich2_wp_fd_check(oct, 0.01, &fd), TEICH2_ERR_STEP_TOO_LARGE);
  teich2_octagon_destroy(oct);
}

TEST(CApi, Isoperimetric) {
  EXPECT_NEAR(teich2_p_regular(), 24.4571347116960, 1e-12);
  double e = 0, p = 0;
  ASSERT_EQ(teich2_e_of_p(25.0, &e), TEICH2_OK);
  ASSERT_EQ(teich2_p_of_e(e, &p), TEICH2_OK);
  EXPECT_NEAR(p, 25.0, 1e-12);
  EXPECT_EQ(teich2_p_of_e(3.0, &p), TEICH2_ERR_DOMAIN);
  teich2_orbit_sample s{};
  ASSERT_EQ(teich2_orbit_point(31.3437472289130, 2.24469644104972, &s), TEICH2_OK);
  EXPECT_NEAR(s.a, 0.8, 1e-13);
  teich2_area area{};
  ASSERT_EQ(teich2_wp_area(30.0, &area), TEICH2_OK);
  EXPECT_NEAR(area.area, 16.2768188212, 1e-8);
  EXPECT_EQ(teich2_wp_area(10.0, &area), TEICH2_ERR_DOMAIN);
  const double x[] = {1, 2, 3}, y[] = {3, 8, 15};  // x^2 + 2x
  teich2_fit fit{};
  ASSERT_EQ(teich2_fit_parabola(x, y, 3, &fit), TEICH2_OK);
  EXPECT_NEAR(fit.c1, 1.0, 1e-13);
  EXPECT_NEAR(fit.c2, 2.0, 1e-13);
  EXPECT_EQ(teich2_fit_parabola(x, y, 2, &fit), TEICH2_ERR_DOMAIN);
}

TEST(CApi, ValidationReport) {
  teich2_validation_config config{};
  teich2_validation_config_default(&config);
  EXPECT_EQ(config.n_a, 20);
  config.n_a = 3;
  config.n_alpha = 3;
  config.orbit_samples = 16;
  config.interior_samples = 10;
  const char* names[] = {"orbit.asymptotics"};
  const double values[] = {0.5};
  config.tolerance_names = names;
  config.tolerance_values = values;
  config.tolerance_count = 1;

  teich2_report* report = nullptr;
  ASSERT_EQ(teich2_validation_run(&config, &report), TEICH2_OK);
  EXPECT_EQ(teich2_report_passed(report), 1);
  EXPECT_EQ(teich2_report_grid_points(report), 9u);
  bool found = false;
  for (std::size_t i = 0; i < teich2_report_size(report); ++i) {
    teich2_check c{};
    ASSERT_EQ(teich2_report_check(report, i, &c), TEICH2_OK);
    if (std::string(c.name) == "orbit.asymptotics") {
      found = true;
      EXPECT_EQ(c.tolerance, 0.5);
    }
  }
  EXPECT_TRUE(found);
  teich2_check c{};
  EXPECT_EQ(teich2_report_check(report, teich2_report_size(report), &c),
            TEICH2_ERR_INVALID_ARGUMENT);
  teich2_report_destroy(report);

  const char* bad[] = {"nope"};
  config.tolerance_names = bad;
  EXPECT_EQ(teich2_validation_run(&config, &report), TEICH2_ERR_INVALID_ARGUMENT);
  config.tolerance_count = 0;
  config.margin = 0.5;
  EXPECT_EQ(teich2_validation_run(&config, &report), TEICH2_ERR_INVALID_ARGUMENT);
}
