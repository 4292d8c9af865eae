/*
 * C interface to the teich2 library: two-parameter genus-2 octagons, their
 * Fuchsian groups, Fenchel-Nielsen data, Weil-Petersson form and areas.
 *
 * Every function returns a teich2_status; on failure teich2_last_error()
 * holds a thread-local message. Objects are opaque handles released with the
 * matching *_destroy function (destroying NULL is a no-op).
 */
#ifndef TEICH2_TEICH2_H
#define TEICH2_TEICH2_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define TEICH2_API __declspec(dllexport)
#else
#  define TEICH2_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum teich2_status {
  TEICH2_OK = 0,
  TEICH2_ERR_INVALID_ARGUMENT = 1,
  TEICH2_ERR_DOMAIN = 2,
  TEICH2_ERR_STEP_TOO_LARGE = 3,
  TEICH2_ERR_CAPACITY = 4,
  TEICH2_ERR_QUADRATURE = 5,
  TEICH2_ERR_INTERNAL = 6
} teich2_status;

/* Which inequality an out-of-domain (a, alpha_tilde) violated. */
typedef enum teich2_domain_bound {
  TEICH2_BOUND_NONE = 0,
  TEICH2_BOUND_LOWER_A = 1,
  TEICH2_BOUND_UPPER_A = 2,
  TEICH2_BOUND_ALPHA_RANGE = 3
} teich2_domain_bound;

typedef struct teich2_octagon teich2_octagon;
typedef struct teich2_group teich2_group;
typedef struct teich2_ball teich2_ball;
typedef struct teich2_report teich2_report;

typedef struct teich2_complex {
  double re;
  double im;
} teich2_complex;

/* SU(1,1) element [[u, v], [conj v, conj u]]. */
typedef struct teich2_mobius {
  teich2_complex u;
  teich2_complex v;
} teich2_mobius;

typedef struct teich2_octagon_info {
  double a;
  double alpha_tilde;
  double alpha;
  double b;
  double beta;
  double t_plus;
  double t_minus;
  double r_plus;
  double phi_plus;
  double r_minus;
  double phi_minus;
  teich2_complex omega_plus;
  teich2_complex omega_minus;
  double omega4;
  teich2_complex p_plus;
  teich2_complex p_minus;
  teich2_complex vertices[8];
  double perimeter;
  double perimeter_numeric;
  double angle_at_a;
  double angle_at_b;
  double area_from_angles;
} teich2_octagon_info;

typedef struct teich2_relation_info {
  teich2_mobius product;
  int sign;
  double defect;
} teich2_relation_info;

typedef struct teich2_side_pairing_info {
  double endpoint_residual[4];
  double midpoint_residual[4];
  size_t interior_samples;
  size_t interior_violations;
} teich2_side_pairing_info;

typedef struct teich2_pants {
  double lengths[3];
  double twists[3];
  double c[3];
  double d[3];
  double p_aux;
  int primed;
} teich2_pants;

typedef struct teich2_lt_info {
  double l3_residual;
  double tau3_residual;
  double l3_primed_residual;
  double tau3_primed_residual;
  double l1_primed_residual;
  double t1_primed_residual;
} teich2_lt_info;

typedef struct teich2_wp_fd {
  double value;
  double k3_summand;
  double pair_summand;
  double primed_value;
  double primed_pair_summand;
  double primed_k3_summand;
  double primed_value_flipped;
  double step;
} teich2_wp_fd;

typedef struct teich2_orbit_sample {
  double e;
  double phi;
  double a;
  double alpha_tilde;
} teich2_orbit_sample;

typedef struct teich2_area {
  double p_star;
  double area;
  double quad_error_estimate;
  long evaluations;
} teich2_area;

typedef struct teich2_fit {
  double c1;
  double c2;
  double residual_norm;
  double max_relative_residual;
  size_t samples;
} teich2_fit;

typedef struct teich2_validation_config {
  int n_a;
  int n_alpha;
  double margin;
  uint64_t seed;
  int orbit_samples;
  size_t interior_samples;
  double fd_step;
  /* Optional per-check overrides, parallel arrays of length tolerance_count. */
  const char* const* tolerance_names;
  const double* tolerance_values;
  size_t tolerance_count;
} teich2_validation_config;

typedef struct teich2_check {
  const char* name;   /* valid while the report lives */
  const char* module;
  const char* note;
  double max_residual;
  double tolerance;
  size_t samples;
  int passed;
} teich2_check;

TEICH2_API const char* teich2_version(void);
TEICH2_API const char* teich2_last_error(void);
/* Bound violated by the last TEICH2_ERR_DOMAIN from parameter validation. */
TEICH2_API teich2_domain_bound teich2_last_domain_bound(void);
TEICH2_API const char* teich2_status_string(teich2_status status);

/* Disk primitives. */
TEICH2_API teich2_status teich2_dist(teich2_complex z, teich2_complex w, double* out);
TEICH2_API teich2_status teich2_mobius_apply(const teich2_mobius* t, teich2_complex z,
                                             teich2_complex* out);
TEICH2_API teich2_status teich2_mobius_compose(const teich2_mobius* a, const teich2_mobius* b,
                                               teich2_mobius* out);
TEICH2_API teich2_status teich2_mobius_inverse(const teich2_mobius* a, teich2_mobius* out);
TEICH2_API teich2_status teich2_half_turn(teich2_complex p, teich2_mobius* out);
TEICH2_API teich2_status teich2_m_half_turn(teich2_complex omega, teich2_mobius* out);
TEICH2_API teich2_status teich2_rotation(double phi, teich2_mobius* out);

/* Octagon. */
TEICH2_API teich2_status teich2_octagon_create(double a, double alpha_tilde, double margin,
                                               teich2_octagon** out);
TEICH2_API void teich2_octagon_destroy(teich2_octagon* octagon);
TEICH2_API teich2_status teich2_octagon_get_info(const teich2_octagon* octagon,
                                                 teich2_octagon_info* out);
TEICH2_API teich2_status teich2_octagon_side_arc(const teich2_octagon* octagon, int side,
                                                 double* radius, double* phi);

/* Fuchsian group. Letters: 2k = g_k, 2k + 1 = g_k^-1. */
TEICH2_API teich2_status teich2_group_create(const teich2_octagon* octagon, teich2_group** out);
TEICH2_API void teich2_group_destroy(teich2_group* group);
TEICH2_API teich2_status teich2_group_letter(const teich2_group* group, int letter,
                                             teich2_mobius* out);
TEICH2_API teich2_status teich2_group_normalization(const teich2_group* group, double* out);
TEICH2_API teich2_status teich2_group_relation(const teich2_group* group,
                                               teich2_relation_info* out);
/* Max projective distance of the explicit generators to M_k M_5 and to H(p_k). */
TEICH2_API teich2_status teich2_group_construction_defect(const teich2_group* group,
                                                          double* via_m, double* via_half_turn);
TEICH2_API teich2_status teich2_group_side_pairing(const teich2_group* group,
                                                   size_t interior_samples, uint64_t seed,
                                                   teich2_side_pairing_info* out);

/* Group balls and tiling cells. capacity = 0 selects the default cap. */
TEICH2_API teich2_status teich2_ball_create(const teich2_group* group, int radius,
                                            size_t capacity, teich2_ball** out);
TEICH2_API void teich2_ball_destroy(teich2_ball* ball);
TEICH2_API size_t teich2_ball_size(const teich2_ball* ball);
TEICH2_API teich2_status teich2_ball_sphere_size(const teich2_ball* ball, int n, size_t* out);
/* Word as "e" or "g0*g1^-1*..." (NUL-terminated in a buffer of buffer_size;
 * required_size receives the length including the terminator). */
TEICH2_API teich2_status teich2_ball_element(const teich2_ball* ball, size_t index,
                                             teich2_mobius* element, char* word,
                                             size_t buffer_size, size_t* required_size);
TEICH2_API teich2_status teich2_ball_cell(const teich2_ball* ball, size_t index,
                                          teich2_complex vertices[8]);

/* Fenchel-Nielsen data and the Weil-Petersson form. */
TEICH2_API teich2_status teich2_fn_pants(const teich2_octagon* octagon, int primed,
                                         teich2_pants* out);
TEICH2_API teich2_status teich2_fn_lengths_geometric(const teich2_octagon* octagon, int primed,
                                                     double out[3]);
TEICH2_API teich2_status teich2_fn_trace_closed(const teich2_octagon* octagon, double c[3],
                                                double d[3]);
TEICH2_API teich2_status teich2_fn_lt_check(const teich2_octagon* octagon, teich2_lt_info* out);
TEICH2_API teich2_status teich2_wp_coefficient(const teich2_octagon* octagon, double* out);
TEICH2_API teich2_status teich2_wp_fd_check(const teich2_octagon* octagon, double h,
                                            teich2_wp_fd* out);

/* Isoperimetric orbits and WP areas. */
TEICH2_API double teich2_e_regular(void);
TEICH2_API double teich2_p_regular(void);
TEICH2_API double teich2_a_regular(void);
TEICH2_API teich2_status teich2_e_of_p(double p, double* out);
TEICH2_API teich2_status teich2_p_of_e(double e, double* out);
TEICH2_API teich2_status teich2_a_extremes(double e, double* a_minus, double* a_plus);
TEICH2_API teich2_status teich2_orbit_point(double e, double phi, teich2_orbit_sample* out);
TEICH2_API teich2_status teich2_asymptotic_orbit(double phi, double* a, double* alpha_tilde);
TEICH2_API teich2_status teich2_wp_area(double p_star, teich2_area* out);
TEICH2_API teich2_status teich2_wp_area_double_integral(double p_star, teich2_area* out);
TEICH2_API teich2_status teich2_parabola_fit(double p_min, double p_max, double step,
                                             teich2_fit* out);
/* Least squares area ~ c1 x^2 + c2 x over n samples, x = P - P_reg. */
TEICH2_API teich2_status teich2_fit_parabola(const double* x, const double* area, size_t n,
                                             teich2_fit* out);

/* Invariant suite. Unknown tolerance names and margins outside [0, 0.2]
 * give TEICH2_ERR_INVALID_ARGUMENT. */
TEICH2_API void teich2_validation_config_default(teich2_validation_config* config);
TEICH2_API teich2_status teich2_validation_run(const teich2_validation_config* config,
                                               teich2_report** out);
TEICH2_API void teich2_report_destroy(teich2_report* report);
TEICH2_API size_t teich2_report_size(const teich2_report* report);
TEICH2_API size_t teich2_report_grid_points(const teich2_report* report);
TEICH2_API int teich2_report_passed(const teich2_report* report);
TEICH2_API teich2_status teich2_report_check(const teich2_report* report, size_t index,
                                             teich2_check* out);

#ifdef __cplusplus
}
#endif

#endif /* TEICH2_TEICH2_H */
