/*
 * Copyright 2026 The zoegd Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * zoegd: zeroth-order optimization via Gaussian-smoothing gradient estimates
 * and perturbed estimated gradient descent, plus the benchmark problems and
 * statistical diagnostics that exercise it.
 *
 * C API conventions:
 *   - Objects are opaque handles created by *_create and released by the
 *     matching *_destroy. Destroy functions accept NULL.
 *   - Every fallible call returns a zoegd_status; ZOEGD_OK is 0. On failure
 *     zoegd_last_error() returns a thread-local message describing it.
 *   - Points are caller-owned double arrays of the problem dimension.
 *   - All randomness is derived from explicit 64-bit seeds; the same seed
 *     reproduces every result bit for bit.
 */
#ifndef ZOEGD_ZOEGD_H
#define ZOEGD_ZOEGD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define ZOEGD_API __declspec(dllexport)
#else
#  define ZOEGD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zoegd_status {
  ZOEGD_OK = 0,
  ZOEGD_E_INVALID_ARGUMENT = 1, /* malformed input (null pointer, bad length, ...) */
  ZOEGD_E_OUT_OF_RANGE = 2,     /* value outside the method's valid range */
  ZOEGD_E_CONFIG = 3,           /* configuration field unusable; message names it */
  ZOEGD_E_ORACLE_FAILURE = 4,   /* objective returned a non-finite value */
  ZOEGD_E_UNKNOWN_PROBLEM = 5,  /* not a catalog name; message lists the catalog */
  ZOEGD_E_UNSUPPORTED = 6,      /* problem lacks what the operation needs */
  ZOEGD_E_INSUFFICIENT_TRACE = 7,
  ZOEGD_E_INTERNAL = 8
} zoegd_status;

ZOEGD_API const char* zoegd_status_name(zoegd_status status);

/* Thread-local message for the most recent failure on this thread. */
ZOEGD_API const char* zoegd_last_error(void);

ZOEGD_API const char* zoegd_version(void);

/* ----------------------------------------------------------------------- */
/* Problem smoothness data                                                  */

typedef struct zoegd_problem_spec {
  int32_t d;            /* dimension, >= 1 */
  double l;             /* gradient-Lipschitz constant, > 0 */
  double rho;           /* Hessian-Lipschitz constant, > 0 */
  double b;             /* gradient-norm bound, > 0 */
  int32_t has_f_star;   /* f_star is meaningful */
  double f_star;        /* known global minimum (testbed problems) */
  int32_t has_domain;   /* domain_radius is meaningful */
  double domain_radius; /* radius of the ball the constants are declared on */
} zoegd_problem_spec;

/* ----------------------------------------------------------------------- */
/* Oracles: black-box access to f with exact query accounting               */

typedef struct zoegd_oracle zoegd_oracle;

/* User objective. Must be a pure function of (x, dim) and safe to call from
 * several threads at once. */
typedef double (*zoegd_oracle_fn)(const double* x, int32_t dim, void* user_data);

ZOEGD_API zoegd_status zoegd_oracle_create(int32_t dim, zoegd_oracle_fn fn, void* user_data,
                                           zoegd_oracle** out);
ZOEGD_API void zoegd_oracle_destroy(zoegd_oracle* oracle);
ZOEGD_API int32_t zoegd_oracle_dimension(const zoegd_oracle* oracle);
ZOEGD_API uint64_t zoegd_oracle_query_count(const zoegd_oracle* oracle);
/* Evaluates f(x), counting the query. */
ZOEGD_API zoegd_status zoegd_oracle_eval(zoegd_oracle* oracle, const double* x, double* out);

/* ----------------------------------------------------------------------- */
/* Benchmark problems: catalog oracles with analytic ground truth           */

typedef struct zoegd_problem zoegd_problem;

/* Number of catalog problems and their names. */
ZOEGD_API size_t zoegd_problem_catalog_size(void);
ZOEGD_API const char* zoegd_problem_catalog_name(size_t index);

ZOEGD_API zoegd_status zoegd_problem_create(const char* name, int32_t dim, zoegd_problem** out);
ZOEGD_API void zoegd_problem_destroy(zoegd_problem* problem);
ZOEGD_API zoegd_status zoegd_problem_get_spec(const zoegd_problem* problem,
                                              zoegd_problem_spec* out);
/* Borrowed view of the problem's counting oracle; valid while the problem
 * lives. Do not destroy it. */
ZOEGD_API zoegd_oracle* zoegd_problem_oracle(zoegd_problem* problem);
ZOEGD_API zoegd_status zoegd_problem_gradient(const zoegd_problem* problem, const double* x,
                                              double* grad_out);
ZOEGD_API zoegd_status zoegd_problem_hessian_min_eig(const zoegd_problem* problem, const double* x,
                                                     double* out);
/* Unit eigenvector of the smallest Hessian eigenvalue at x. */
ZOEGD_API zoegd_status zoegd_problem_min_eig_direction(const zoegd_problem* problem,
                                                       const double* x, double* dir_out);
ZOEGD_API size_t zoegd_problem_saddle_count(const zoegd_problem* problem);
ZOEGD_API zoegd_status zoegd_problem_saddle(const zoegd_problem* problem, size_t index,
                                            double* x_out);
ZOEGD_API size_t zoegd_problem_minimum_count(const zoegd_problem* problem);
ZOEGD_API zoegd_status zoegd_problem_minimum(const zoegd_problem* problem, size_t index,
                                             double* x_out);

/* Stationary-point classification of x under (epsilon, rho). */
typedef enum zoegd_stationary_kind {
  ZOEGD_NOT_STATIONARY = 0,
  ZOEGD_FIRST_ORDER_ONLY = 1,
  ZOEGD_SECOND_ORDER = 2
} zoegd_stationary_kind;

ZOEGD_API const char* zoegd_stationary_kind_name(zoegd_stationary_kind kind);

ZOEGD_API zoegd_status zoegd_classify_point(const zoegd_problem* problem, const double* x,
                                            double epsilon, double rho,
                                            zoegd_stationary_kind* kind_out,
                                            double* grad_norm_out, double* min_eig_out);

/* ----------------------------------------------------------------------- */
/* Gradient estimation                                                      */

typedef struct zoegd_estimator_schedule {
  double v;       /* smoothing radius */
  double sigma2;  /* per-sample variance bound */
  double m;       /* sample count, integral-valued (may exceed 2^53 for tight accuracies) */
  double eps_hat; /* accuracy the plan targets */
  double c_prime;
} zoegd_estimator_schedule;

/* v = eps_hat / (c' l (d+3)^1.5), sigma2 = 2 c'^2 (d+4) B^2,
 * m = ceil((32 sigma2 / eps_hat^2)(ln(1/eps_hat) + 1/4)).
 * Requires 0 < eps_hat < 1 and c_prime >= 3. warning_out (optional, may be
 * NULL) receives a note when the plan leaves the analysis' comfort zone. */
ZOEGD_API zoegd_status zoegd_estimator_schedule_derive(const zoegd_problem_spec* spec,
                                                       double eps_hat, double c_prime,
                                                       zoegd_estimator_schedule* out,
                                                       const char** warning_out);

/* One Gaussian-smoothing estimate at x:
 *   g_hat = (1/m') sum_i (f(x + v u_i) - f(x)) / v * u_i.
 * budget_override <= 0 keeps the schedule's m (which must then be runnable);
 * a positive value replaces it and marks the estimate non-theoretical. Writes
 * dim doubles to g_out; base_value_out/queries_out are optional. */
ZOEGD_API zoegd_status zoegd_estimate_gradient(zoegd_oracle* oracle, const double* x,
                                               const zoegd_estimator_schedule* schedule,
                                               uint64_t seed, int64_t budget_override,
                                               double* g_out, double* base_value_out,
                                               uint64_t* queries_out);

/* Fraction of trials whose estimate lands within schedule->eps_hat of the
 * problem's analytic gradient at x. */
ZOEGD_API zoegd_status zoegd_empirical_accuracy(zoegd_problem* problem, const double* x,
                                                const zoegd_estimator_schedule* schedule,
                                                int32_t trials, uint64_t seed,
                                                int64_t budget_override, double* fraction_out);

/* Upper bound on P(||u||^2 > a2) for u ~ N(0, I_d): (d/a2)^(-d/2) e^(-(a2-d)/2),
 * clamped to 1. Requires a2 > d. */
ZOEGD_API zoegd_status zoegd_gaussian_tail_bound(int32_t dim, double a2, double* out);

/* Monte-Carlo exceedance frequency of ||u||^2 > a2 over `draws` draws. */
ZOEGD_API zoegd_status zoegd_chi_squared_exceedance_mc(int32_t dim, double a2, uint64_t draws,
                                                       uint64_t seed, double* out);

/* ----------------------------------------------------------------------- */
/* Perturbed estimated gradient descent                                     */

typedef struct zoegd_egd_config {
  double epsilon;  /* target stationarity, > 0 */
  double eps_hat;  /* requested estimator accuracy, in (0,1) */
  double c;        /* step-size constant, in (0, 1/4) */
  double c_prime;  /* estimator constant, >= 3 */
  double delta;    /* failure probability, in (0,1) */
  double theta;    /* > 0 */
  double delta_f;  /* upper bound on f(x0) - f*, > 0 */
  uint64_t max_iterations;       /* 0 = twice the theoretical bound */
  int64_t sample_budget_override; /* <= 0: use the theoretical m */
  int32_t literal_perturbation;  /* keep the stale estimate after perturbing */
  int32_t exact_gradient;        /* diagnostics: analytic gradient instead of estimates */
  uint64_t trace_thin;           /* snapshot every k-th iteration, >= 1 */
} zoegd_egd_config;

/* Fills defaults: eps_hat 0.1, c 0.1, c' 3, delta 0.1, theta 4, thin 1;
 * epsilon and delta_f start at 0 and must be set by the caller. */
ZOEGD_API void zoegd_egd_config_default(zoegd_egd_config* config);

typedef struct zoegd_egd_schedule {
  double chi1;
  double c_hat;
  double chi;
  double chi_alt;
  double eta;
  double g_thres;
  double f_thres;
  uint64_t t_thres;
  double r;
  double gamma;
  double script_t;
  double script_p;
  double delta_hat;
  double eps_hat_ceiling_stationarity;
  double eps_hat_ceiling_escape;
  double eps_hat_effective;
  int32_t eps_hat_adjusted;
  double theoretical_iteration_bound;
  uint64_t max_iterations_effective;
} zoegd_egd_schedule;

ZOEGD_API zoegd_status zoegd_derive_schedule(const zoegd_egd_config* config,
                                             const zoegd_problem_spec* spec,
                                             zoegd_egd_schedule* out);

typedef enum zoegd_termination {
  ZOEGD_TERMINAL_CONDITION_MET = 0,
  ZOEGD_MAX_ITERATIONS_EXCEEDED = 1
} zoegd_termination;

ZOEGD_API const char* zoegd_termination_name(zoegd_termination t);

typedef struct zoegd_run_result zoegd_run_result;

/* Runs the optimizer on a catalog problem (required for exact_gradient mode
 * and classification-aware diagnostics). */
ZOEGD_API zoegd_status zoegd_egd_run(zoegd_problem* problem, const double* x0,
                                     const zoegd_egd_config* config, uint64_t seed,
                                     zoegd_run_result** out);
/* Runs the optimizer on a custom oracle under the given spec. */
ZOEGD_API zoegd_status zoegd_egd_run_oracle(zoegd_oracle* oracle, const zoegd_problem_spec* spec,
                                            const double* x0, const zoegd_egd_config* config,
                                            uint64_t seed, zoegd_run_result** out);
ZOEGD_API void zoegd_run_result_destroy(zoegd_run_result* result);

ZOEGD_API zoegd_termination zoegd_run_termination(const zoegd_run_result* result);
ZOEGD_API uint64_t zoegd_run_iterations(const zoegd_run_result* result);
ZOEGD_API uint64_t zoegd_run_total_queries(const zoegd_run_result* result);
ZOEGD_API uint64_t zoegd_run_domain_exits(const zoegd_run_result* result);
ZOEGD_API int32_t zoegd_run_non_theoretical(const zoegd_run_result* result);
ZOEGD_API double zoegd_run_f_final(const zoegd_run_result* result);
ZOEGD_API int32_t zoegd_run_dimension(const zoegd_run_result* result);
ZOEGD_API zoegd_status zoegd_run_x_final(const zoegd_run_result* result, double* x_out);
ZOEGD_API zoegd_status zoegd_run_schedule(const zoegd_run_result* result,
                                          zoegd_egd_schedule* out);
/* Operative sampling plan of the run; zeroed in exact-gradient mode. */
ZOEGD_API zoegd_status zoegd_run_estimator_schedule(const zoegd_run_result* result,
                                                    zoegd_estimator_schedule* out);
ZOEGD_API size_t zoegd_run_perturbation_count(const zoegd_run_result* result);
ZOEGD_API uint64_t zoegd_run_perturbation_event(const zoegd_run_result* result, size_t index);

typedef struct zoegd_trace_record {
  uint64_t t;
  double f_value;
  double g_hat_norm;
  int32_t perturbed;
  int32_t has_snapshot; /* x (and g_hat) available for this record */
} zoegd_trace_record;

ZOEGD_API size_t zoegd_run_trace_size(const zoegd_run_result* result);
ZOEGD_API zoegd_status zoegd_run_trace_record(const zoegd_run_result* result, size_t index,
                                              zoegd_trace_record* out);
/* Writes the snapshot point (dim doubles). Fails when has_snapshot is 0. */
ZOEGD_API zoegd_status zoegd_run_trace_x(const zoegd_run_result* result, size_t index,
                                         double* x_out);

/* ----------------------------------------------------------------------- */
/* Diagnostics harnesses                                                    */

/* Per-step descent audit over a thin=1 trace: wherever the recorded estimate
 * has norm >= g_thres and lies within accuracy_threshold (<= 0 for the
 * default g_thres/4) of the analytic gradient, f must drop by at least
 * (eta/4)||g_hat||^2. Reports the number of violating steps and fills up to
 * violations_capacity of their iteration indices. */
ZOEGD_API zoegd_status zoegd_descent_check(const zoegd_run_result* result,
                                           zoegd_problem* problem, double accuracy_threshold,
                                           uint64_t* violation_indices,
                                           size_t violations_capacity, size_t* violations_out);

typedef struct zoegd_escape_row {
  uint64_t seed;
  int32_t escaped;
  zoegd_stationary_kind classification;
  double grad_norm;
  double min_eig;
  double f_final;
  uint64_t iterations;
  uint64_t total_queries;
  uint64_t iterations_to_escape;
} zoegd_escape_row;

typedef struct zoegd_escape_stats {
  uint64_t seeds;
  uint64_t escaped;
  double mean_iterations_to_escape; /* NaN when no run escaped */
  double f_start;
  double f_thres;
  double delta_hat;
} zoegd_escape_stats;

/* Runs the optimizer once per seed from the problem's known saddle (falling
 * back to a known minimum, then the origin). A run escapes when its returned
 * point classifies second order or its value dropped below f(x0) - f_thres.
 * rows (optional) must hold n_seeds entries, sorted by seed on return. */
ZOEGD_API zoegd_status zoegd_escape_experiment(zoegd_problem* problem,
                                               const zoegd_egd_config* config,
                                               const uint64_t* seeds, size_t n_seeds,
                                               zoegd_escape_row* rows,
                                               zoegd_escape_stats* stats_out);

/* Two coupled exact-gradient descent sequences offset by mu * r along the
 * most negative eigendirection at `saddle`; psi_out ([steps+1]) receives
 * their separation along that direction, u_dist_out/w_dist_out (optional,
 * [steps+1]) the iterates' distances from the saddle. */
ZOEGD_API zoegd_status zoegd_coupling_experiment(zoegd_problem* problem, const double* saddle,
                                                 double mu, double r, double eta, double epsilon,
                                                 uint64_t steps, uint64_t seed, double* psi_out,
                                                 double* u_dist_out, double* w_dist_out,
                                                 double* gamma_eta_out);

typedef struct zoegd_scaling_row {
  double epsilon;
  double median_iterations;
  double median_queries;
  double predicted_queries_per_iteration;
  double predicted_total_queries;
  double normalized_iterations;
} zoegd_scaling_row;

/* One row per epsilon (strictly decreasing, each in (0,1)); seeds runs per
 * epsilon seeded seed_base, seed_base+1, ... rows_out must hold n_epsilons
 * entries; growth_ratios_out (optional) n_epsilons - 1. */
ZOEGD_API zoegd_status zoegd_scaling_study(zoegd_problem* problem, const double* epsilons,
                                           size_t n_epsilons, const zoegd_egd_config* config,
                                           int32_t seeds, uint64_t seed_base,
                                           zoegd_scaling_row* rows_out,
                                           double* growth_ratios_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ZOEGD_ZOEGD_H */
