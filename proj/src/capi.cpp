// Copyright 2026 The zoegd Authors
// SPDX-License-Identifier: Apache-2.0
//
// extern-C surface over the core library. Exceptions stop here: every entry
// point traps them, stashes the message in a thread-local slot, and returns a
// status code.
#include "zoegd/zoegd.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "diagnostics.hpp"
#include "egd.hpp"
#include "errors.hpp"
#include "estimator.hpp"
#include "oracle.hpp"
#include "rng.hpp"
#include "testbed.hpp"
#include "types.hpp"

struct zoegd_oracle {
  std::shared_ptr<zoegd::ZeroOrderOracle> impl;
};

struct zoegd_problem {
  zoegd::BenchmarkProblem impl;
  zoegd_oracle oracle_view;
};

struct zoegd_run_result {
  zoegd::RunResult impl;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

template <typename Fn>
zoegd_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const zoegd::ConfigError& e) {
    set_error(e.what());
    return ZOEGD_E_CONFIG;
  } catch (const zoegd::OutOfRangeError& e) {
    set_error(e.what());
    return ZOEGD_E_OUT_OF_RANGE;
  } catch (const zoegd::CatalogError& e) {
    set_error(e.what());
    return ZOEGD_E_UNKNOWN_PROBLEM;
  } catch (const zoegd::UnsupportedProblemError& e) {
    set_error(e.what());
    return ZOEGD_E_UNSUPPORTED;
  } catch (const zoegd::InsufficientTraceError& e) {
    set_error(e.what());
    return ZOEGD_E_INSUFFICIENT_TRACE;
  } catch (const zoegd::OracleError& e) {
    set_error(e.what());
    return ZOEGD_E_ORACLE_FAILURE;
  } catch (const zoegd::InvalidInputError& e) {
    set_error(e.what());
    return ZOEGD_E_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return ZOEGD_E_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return ZOEGD_E_INTERNAL;
  }
}

zoegd_status require(bool ok, const char* message) {
  if (!ok) {
    set_error(message);
    return ZOEGD_E_INVALID_ARGUMENT;
  }
  return ZOEGD_OK;
}

zoegd::ProblemSpec to_cpp(const zoegd_problem_spec& spec) {
  zoegd::ProblemSpec out;
  out.d = spec.d;
  out.l = spec.l;
  out.rho = spec.rho;
  out.B = spec.b;
  if (spec.has_f_star) out.f_star_hint = spec.f_star;
  if (spec.has_domain) out.domain_radius = spec.domain_radius;
  return out;
}

zoegd_problem_spec to_c(const zoegd::ProblemSpec& spec) {
  zoegd_problem_spec out{};
  out.d = spec.d;
  out.l = spec.l;
  out.rho = spec.rho;
  out.b = spec.B;
  out.has_f_star = spec.f_star_hint.has_value();
  out.f_star = spec.f_star_hint.value_or(0.0);
  out.has_domain = spec.domain_radius.has_value();
  out.domain_radius = spec.domain_radius.value_or(0.0);
  return out;
}

zoegd::EstimatorSchedule to_cpp(const zoegd_estimator_schedule& s) {
  zoegd::EstimatorSchedule out;
  out.v = s.v;
  out.sigma2 = s.sigma2;
  out.m = s.m;
  out.eps_hat = s.eps_hat;
  out.c_prime = s.c_prime;
  return out;
}

zoegd_estimator_schedule to_c(const zoegd::EstimatorSchedule& s) {
  zoegd_estimator_schedule out{};
  out.v = s.v;
  out.sigma2 = s.sigma2;
  out.m = s.m;
  out.eps_hat = s.eps_hat;
  out.c_prime = s.c_prime;
  return out;
}

zoegd::EgdConfig to_cpp(const zoegd_egd_config& c) {
  zoegd::EgdConfig out;
  out.epsilon = c.epsilon;
  out.eps_hat = c.eps_hat;
  out.c = c.c;
  out.c_prime = c.c_prime;
  out.delta = c.delta;
  out.theta = c.theta;
  out.delta_f = c.delta_f;
  out.max_iterations = c.max_iterations;
  if (c.sample_budget_override > 0) {
    out.sample_budget_override = static_cast<std::uint64_t>(c.sample_budget_override);
  }
  out.literal_perturbation = c.literal_perturbation != 0;
  out.exact_gradient = c.exact_gradient != 0;
  out.trace_thin = c.trace_thin;
  return out;
}

zoegd_egd_schedule to_c(const zoegd::EgdSchedule& s) {
  zoegd_egd_schedule out{};
  out.chi1 = s.chi1;
  out.c_hat = s.c_hat;
  out.chi = s.chi;
  out.chi_alt = s.chi_alt;
  out.eta = s.eta;
  out.g_thres = s.g_thres;
  out.f_thres = s.f_thres;
  out.t_thres = s.t_thres;
  out.r = s.r;
  out.gamma = s.gamma;
  out.script_t = s.script_t;
  out.script_p = s.script_p;
  out.delta_hat = s.delta_hat;
  out.eps_hat_ceiling_stationarity = s.eps_hat_ceiling_stationarity;
  out.eps_hat_ceiling_escape = s.eps_hat_ceiling_escape;
  out.eps_hat_effective = s.eps_hat_effective;
  out.eps_hat_adjusted = s.eps_hat_adjusted ? 1 : 0;
  out.theoretical_iteration_bound = s.theoretical_iteration_bound;
  out.max_iterations_effective = s.max_iterations_effective;
  return out;
}

std::optional<std::uint64_t> override_of(int64_t value) {
  if (value > 0) return static_cast<std::uint64_t>(value);
  return std::nullopt;
}

}  // namespace

extern "C" {

const char* zoegd_status_name(zoegd_status status) {
  switch (status) {
    case ZOEGD_OK: return "ok";
    case ZOEGD_E_INVALID_ARGUMENT: return "invalid_argument";
    case ZOEGD_E_OUT_OF_RANGE: return "out_of_range";
    case ZOEGD_E_CONFIG: return "config_error";
    case ZOEGD_E_ORACLE_FAILURE: return "oracle_failure";
    case ZOEGD_E_UNKNOWN_PROBLEM: return "unknown_problem";
    case ZOEGD_E_UNSUPPORTED: return "unsupported";
    case ZOEGD_E_INSUFFICIENT_TRACE: return "insufficient_trace";
    case ZOEGD_E_INTERNAL: return "internal_error";
  }
  return "unknown_status";
}

const char* zoegd_last_error(void) { return g_last_error.c_str(); }

const char* zoegd_version(void) { return "1.0.0"; }

zoegd_status zoegd_oracle_create(int32_t dim, zoegd_oracle_fn fn, void* user_data,
                                 zoegd_oracle** out) {
  if (auto st = require(out && fn, "oracle_create: fn and out must be non-null")) return st;
  return guarded([&] {
    auto impl = std::make_shared<zoegd::ZeroOrderOracle>(
        dim, [fn, user_data, dim](std::span<const double> x) { return fn(x.data(), dim, user_data); });
    *out = new zoegd_oracle{std::move(impl)};
    return ZOEGD_OK;
  });
}

void zoegd_oracle_destroy(zoegd_oracle* oracle) { delete oracle; }

int32_t zoegd_oracle_dimension(const zoegd_oracle* oracle) {
  return oracle ? oracle->impl->dimension() : 0;
}

uint64_t zoegd_oracle_query_count(const zoegd_oracle* oracle) {
  return oracle ? oracle->impl->query_count() : 0;
}

zoegd_status zoegd_oracle_eval(zoegd_oracle* oracle, const double* x, double* out) {
  if (auto st = require(oracle && x && out, "oracle_eval: null argument")) return st;
  return guarded([&] {
    *out = oracle->impl->evaluate(
        std::span<const double>(x, static_cast<std::size_t>(oracle->impl->dimension())));
    return ZOEGD_OK;
  });
}

size_t zoegd_problem_catalog_size(void) { return zoegd::benchmark_names().size(); }

const char* zoegd_problem_catalog_name(size_t index) {
  const auto& names = zoegd::benchmark_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

zoegd_status zoegd_problem_create(const char* name, int32_t dim, zoegd_problem** out) {
  if (auto st = require(name && out, "problem_create: name and out must be non-null")) return st;
  return guarded([&] {
    auto problem = std::make_unique<zoegd_problem>();
    problem->impl = zoegd::make_benchmark(name, dim);
    problem->oracle_view.impl = problem->impl.oracle;
    *out = problem.release();
    return ZOEGD_OK;
  });
}

void zoegd_problem_destroy(zoegd_problem* problem) { delete problem; }

zoegd_status zoegd_problem_get_spec(const zoegd_problem* problem, zoegd_problem_spec* out) {
  if (auto st = require(problem && out, "problem_get_spec: null argument")) return st;
  *out = to_c(problem->impl.spec);
  return ZOEGD_OK;
}

zoegd_oracle* zoegd_problem_oracle(zoegd_problem* problem) {
  return problem ? &problem->oracle_view : nullptr;
}

zoegd_status zoegd_problem_gradient(const zoegd_problem* problem, const double* x,
                                    double* grad_out) {
  if (auto st = require(problem && x && grad_out, "problem_gradient: null argument")) return st;
  return guarded([&] {
    const auto g = problem->impl.gradient(
        std::span<const double>(x, static_cast<std::size_t>(problem->impl.spec.d)));
    std::memcpy(grad_out, g.data(), g.size() * sizeof(double));
    return ZOEGD_OK;
  });
}

zoegd_status zoegd_problem_hessian_min_eig(const zoegd_problem* problem, const double* x,
                                           double* out) {
  if (auto st = require(problem && x && out, "problem_hessian_min_eig: null argument")) return st;
  return guarded([&] {
    *out = problem->impl.hessian_min_eig(
        std::span<const double>(x, static_cast<std::size_t>(problem->impl.spec.d)));
    return ZOEGD_OK;
  });
}

zoegd_status zoegd_problem_min_eig_direction(const zoegd_problem* problem, const double* x,
                                             double* dir_out) {
  if (auto st = require(problem && x && dir_out, "problem_min_eig_direction: null argument"))
    return st;
  return guarded([&] {
    const auto e = problem->impl.min_eig_direction(
        std::span<const double>(x, static_cast<std::size_t>(problem->impl.spec.d)));
    std::memcpy(dir_out, e.data(), e.size() * sizeof(double));
    return ZOEGD_OK;
  });
}

size_t zoegd_problem_saddle_count(const zoegd_problem* problem) {
  return problem ? problem->impl.known_saddles.size() : 0;
}

zoegd_status zoegd_problem_saddle(const zoegd_problem* problem, size_t index, double* x_out) {
  if (auto st = require(problem && x_out, "problem_saddle: null argument")) return st;
  if (auto st = require(index < problem->impl.known_saddles.size(), "problem_saddle: index out of range"))
    return st;
  const auto& p = problem->impl.known_saddles[index];
  std::memcpy(x_out, p.data(), p.size() * sizeof(double));
  return ZOEGD_OK;
}

size_t zoegd_problem_minimum_count(const zoegd_problem* problem) {
  return problem ? problem->impl.known_minima.size() : 0;
}

zoegd_status zoegd_problem_minimum(const zoegd_problem* problem, size_t index, double* x_out) {
  if (auto st = require(problem && x_out, "problem_minimum: null argument")) return st;
  if (auto st = require(index < problem->impl.known_minima.size(), "problem_minimum: index out of range"))
    return st;
  const auto& p = problem->impl.known_minima[index];
  std::memcpy(x_out, p.data(), p.size() * sizeof(double));
  return ZOEGD_OK;
}

const char* zoegd_stationary_kind_name(zoegd_stationary_kind kind) {
  switch (kind) {
    case ZOEGD_NOT_STATIONARY: return "not_stationary";
    case ZOEGD_FIRST_ORDER_ONLY: return "first_order_only";
    case ZOEGD_SECOND_ORDER: return "second_order";
  }
  return "unknown";
}

zoegd_status zoegd_classify_point(const zoegd_problem* problem, const double* x, double epsilon,
                                  double rho, zoegd_stationary_kind* kind_out,
                                  double* grad_norm_out, double* min_eig_out) {
  if (auto st = require(problem && x && kind_out, "classify_point: null argument")) return st;
  return guarded([&] {
    const auto cls = zoegd::classify_point(
        problem->impl, std::span<const double>(x, static_cast<std::size_t>(problem->impl.spec.d)),
        epsilon, rho);
    *kind_out = static_cast<zoegd_stationary_kind>(cls.kind);
    if (grad_norm_out) *grad_norm_out = cls.grad_norm;
    if (min_eig_out) *min_eig_out = cls.min_eig;
    return ZOEGD_OK;
  });
}

zoegd_status zoegd_estimator_schedule_derive(const zoegd_problem_spec* spec, double eps_hat,
                                             double c_prime, zoegd_estimator_schedule* out,
                                             const char** warning_out) {
  if (auto st = require(spec && out, "estimator_schedule_derive: null argument")) return st;
  return guarded([&] {
    const auto s = zoegd::estimator_schedule(to_cpp(*spec), eps_hat, c_prime);
    *out = to_c(s);
    if (warning_out) {
      thread_local std::string warning;
      warning = s.warning;
      *warning_out = warning.empty() ? nullptr : warning.c_str();
    }
    return ZOEGD_OK;
  });
}

zoegd_status zoegd_estimate_gradient(zoegd_oracle* oracle, const double* x,
                                     const zoegd_estimator_schedule* schedule, uint64_t seed,
                                     int64_t budget_override, double* g_out,
                                     double* base_value_out, uint64_t* queries_out) {
  if (auto st = require(oracle && x && schedule && g_out, "estimate_gradient: null argument"))
    return st;
  return guarded([&] {
    zoegd::SeededRng rng(seed);
    const auto est = zoegd::estimate_gradient(
        *oracle->impl,
        std::span<const double>(x, static_cast<std::size_t>(oracle->impl->dimension())),
        to_cpp(*schedule), rng, std::nullopt, override_of(budget_override));
    std::memcpy(g_out, est.g_hat.data(), est.g_hat.size() * sizeof(double));
    if (base_value_out) *base_value_out = est.base_value;
    if (queries_out) *queries_out = est.queries_used;
    return ZOEGD_OK;
  });
}

zoegd_status zoegd_empirical_accuracy(zoegd_problem* problem, const double* x,
                                      const zoegd_estimator_schedule* schedule, int32_t trials,
                                      uint64_t seed, int64_t budget_override,
                                      double* fraction_out) {
  if (auto st = require(problem && x && schedule && fraction_out, "empirical_accuracy: null argument"))
    return st;
  return guarded([&] {
    zoegd::SeededRng rng(seed);
    *fraction_out = zoegd::empirical_accuracy(
        problem->impl, std::span<const double>(x, static_cast<std::size_t>(problem->impl.spec.d)),
        to_cpp(*schedule), trials, rng, override_of(budget_override));
    return ZOEGD_OK;
  });
}

zoegd_status zoegd_gaussian_tail_bound(int32_t dim, double a2, double* out) {
  if (auto st = require(out != nullptr, "gaussian_tail_bound: out must be non-null")) return st;
  return guarded([&] {
    *out = zoegd::gaussian_tail_bound(dim, a2);
    return ZOEGD_OK;
  });
}

zoegd_status zoegd_chi_squared_exceedance_mc(int32_t dim, double a2, uint64_t draws,
                                             uint64_t seed, double* out) {
  if (auto st = require(out != nullptr, "chi_squared_exceedance_mc: out must be non-null")) return st;
  return guarded([&] {
    zoegd::SeededRng rng(seed);
    *out = zoegd::chi_squared_exceedance_mc(dim, a2, draws, rng);
    return ZOEGD_OK;
  });
}

void zoegd_egd_config_default(zoegd_egd_config* config) {
  if (!config) return;
  const zoegd::EgdConfig defaults;
  *config = zoegd_egd_config{};
  config->epsilon = defaults.epsilon;
  config->eps_hat = defaults.eps_hat;
  config->c = defaults.c;
  config->c_prime = defaults.c_prime;
  config->delta = defaults.delta;
  config->theta = defaults.theta;
  config->delta_f = defaults.delta_f;
  config->max_iterations = defaults.max_iterations;
  config->sample_budget_override = 0;
  config->literal_perturbation = 0;
  config->exact_gradient = 0;
  config->trace_thin = defaults.trace_thin;
}

zoegd_status zoegd_derive_schedule(const zoegd_egd_config* config, const zoegd_problem_spec* spec,
                                   zoegd_egd_schedule* out) {
  if (auto st = require(config && spec && out, "derive_schedule: null argument")) return st;
  return guarded([&] {
    *out = to_c(zoegd::derive_schedule(to_cpp(*config), to_cpp(*spec)));
    return ZOEGD_OK;
  });
}

const char* zoegd_termination_name(zoegd_termination t) {
  switch (t) {
    case ZOEGD_TERMINAL_CONDITION_MET: return "terminal_condition_met";
    case ZOEGD_MAX_ITERATIONS_EXCEEDED: return "max_iterations_exceeded";
  }
  return "unknown";
}

zoegd_status zoegd_egd_run(zoegd_problem* problem, const double* x0,
                           const zoegd_egd_config* config, uint64_t seed,
                           zoegd_run_result** out) {
  if (auto st = require(problem && x0 && config && out, "egd_run: null argument")) return st;
  return guarded([&] {
    zoegd::SeededRng rng(seed);
    const zoegd::EgdConfig cfg = to_cpp(*config);
    const zoegd::GradientFn exact =
        cfg.exact_gradient ? zoegd::GradientFn(problem->impl.gradient) : zoegd::GradientFn{};
    auto result = std::make_unique<zoegd_run_result>();
    result->impl = zoegd::egd_run(
        *problem->impl.oracle, problem->impl.spec,
        std::span<const double>(x0, static_cast<std::size_t>(problem->impl.spec.d)), cfg, rng,
        exact);
    *out = result.release();
    return ZOEGD_OK;
  });
}

zoegd_status zoegd_egd_run_oracle(zoegd_oracle* oracle, const zoegd_problem_spec* spec,
                                  const double* x0, const zoegd_egd_config* config, uint64_t seed,
                                  zoegd_run_result** out) {
  if (auto st = require(oracle && spec && x0 && config && out, "egd_run_oracle: null argument"))
    return st;
  return guarded([&] {
    zoegd::SeededRng rng(seed);
    const zoegd::EgdConfig cfg = to_cpp(*config);
    auto result = std::make_unique<zoegd_run_result>();
    result->impl = zoegd::egd_run(
        *oracle->impl, to_cpp(*spec),
        std::span<const double>(x0, static_cast<std::size_t>(spec->d)), cfg, rng);
    *out = result.release();
    return ZOEGD_OK;
  });
}

void zoegd_run_result_destroy(zoegd_run_result* result) { delete result; }

zoegd_termination zoegd_run_termination(const zoegd_run_result* result) {
  return result && result->impl.termination == zoegd::Termination::TerminalConditionMet
             ? ZOEGD_TERMINAL_CONDITION_MET
             : ZOEGD_MAX_ITERATIONS_EXCEEDED;
}

uint64_t zoegd_run_iterations(const zoegd_run_result* result) {
  return result ? result->impl.iterations : 0;
}

uint64_t zoegd_run_total_queries(const zoegd_run_result* result) {
  return result ? result->impl.total_queries : 0;
}

uint64_t zoegd_run_domain_exits(const zoegd_run_result* result) {
  return result ? result->impl.domain_exits : 0;
}

int32_t zoegd_run_non_theoretical(const zoegd_run_result* result) {
  return result && result->impl.non_theoretical ? 1 : 0;
}

double zoegd_run_f_final(const zoegd_run_result* result) {
  return result ? result->impl.f_final : 0.0;
}

int32_t zoegd_run_dimension(const zoegd_run_result* result) {
  return result ? static_cast<int32_t>(result->impl.x_final.size()) : 0;
}

zoegd_status zoegd_run_x_final(const zoegd_run_result* result, double* x_out) {
  if (auto st = require(result && x_out, "run_x_final: null argument")) return st;
  std::memcpy(x_out, result->impl.x_final.data(), result->impl.x_final.size() * sizeof(double));
  return ZOEGD_OK;
}

zoegd_status zoegd_run_schedule(const zoegd_run_result* result, zoegd_egd_schedule* out) {
  if (auto st = require(result && out, "run_schedule: null argument")) return st;
  *out = to_c(result->impl.schedule);
  return ZOEGD_OK;
}

zoegd_status zoegd_run_estimator_schedule(const zoegd_run_result* result,
                                          zoegd_estimator_schedule* out) {
  if (auto st = require(result && out, "run_estimator_schedule: null argument")) return st;
  *out = to_c(result->impl.estimator);
  return ZOEGD_OK;
}

size_t zoegd_run_perturbation_count(const zoegd_run_result* result) {
  return result ? result->impl.perturbation_events.size() : 0;
}

uint64_t zoegd_run_perturbation_event(const zoegd_run_result* result, size_t index) {
  if (!result || index >= result->impl.perturbation_events.size()) return 0;
  return result->impl.perturbation_events[index];
}

size_t zoegd_run_trace_size(const zoegd_run_result* result) {
  return result ? result->impl.trace.size() : 0;
}

zoegd_status zoegd_run_trace_record(const zoegd_run_result* result, size_t index,
                                    zoegd_trace_record* out) {
  if (auto st = require(result && out, "run_trace_record: null argument")) return st;
  if (auto st = require(index < result->impl.trace.size(), "run_trace_record: index out of range"))
    return st;
  const zoegd::IterationRecord& rec = result->impl.trace[index];
  out->t = rec.t;
  out->f_value = rec.f_value;
  out->g_hat_norm = rec.g_hat_norm;
  out->perturbed = rec.perturbed ? 1 : 0;
  out->has_snapshot = rec.x.has_value() ? 1 : 0;
  return ZOEGD_OK;
}

zoegd_status zoegd_run_trace_x(const zoegd_run_result* result, size_t index, double* x_out) {
  if (auto st = require(result && x_out, "run_trace_x: null argument")) return st;
  if (auto st = require(index < result->impl.trace.size(), "run_trace_x: index out of range"))
    return st;
  const zoegd::IterationRecord& rec = result->impl.trace[index];
  if (auto st = require(rec.x.has_value(), "run_trace_x: record has no snapshot")) return st;
  std::memcpy(x_out, rec.x->data(), rec.x->size() * sizeof(double));
  return ZOEGD_OK;
}

zoegd_status zoegd_descent_check(const zoegd_run_result* result, zoegd_problem* problem,
                                 double accuracy_threshold, uint64_t* violation_indices,
                                 size_t violations_capacity, size_t* violations_out) {
  if (auto st = require(result && problem && violations_out, "descent_check: null argument"))
    return st;
  return guarded([&] {
    const auto violations = zoegd::descent_check(
        result->impl, problem->impl, result->impl.schedule,
        accuracy_threshold > 0.0 ? std::optional<double>(accuracy_threshold) : std::nullopt);
    *violations_out = violations.size();
    if (violation_indices) {
      const size_t n = std::min(violations_capacity, violations.size());
      for (size_t i = 0; i < n; ++i) violation_indices[i] = violations[i].t;
    }
    return ZOEGD_OK;
  });
}

zoegd_status zoegd_escape_experiment(zoegd_problem* problem, const zoegd_egd_config* config,
                                     const uint64_t* seeds, size_t n_seeds, zoegd_escape_row* rows,
                                     zoegd_escape_stats* stats_out) {
  if (auto st = require(problem && config && stats_out && (seeds || n_seeds == 0),
                        "escape_experiment: null argument"))
    return st;
  return guarded([&] {
    const auto stats =
        zoegd::escape_experiment(problem->impl, to_cpp(*config), std::span(seeds, n_seeds));
    stats_out->seeds = stats.seeds;
    stats_out->escaped = stats.escaped;
    stats_out->mean_iterations_to_escape = stats.mean_iterations_to_escape;
    stats_out->f_start = stats.f_start;
    stats_out->f_thres = stats.f_thres;
    stats_out->delta_hat = stats.delta_hat;
    if (rows) {
      for (size_t i = 0; i < stats.per_seed.size(); ++i) {
        const auto& r = stats.per_seed[i];
        rows[i] = zoegd_escape_row{r.seed,
                                   r.escaped ? 1 : 0,
                                   static_cast<zoegd_stationary_kind>(r.classification.kind),
                                   r.classification.grad_norm,
                                   r.classification.min_eig,
                                   r.f_final,
                                   r.iterations,
                                   r.total_queries,
                                   r.iterations_to_escape};
      }
    }
    return ZOEGD_OK;
  });
}

zoegd_status zoegd_coupling_experiment(zoegd_problem* problem, const double* saddle, double mu,
                                       double r, double eta, double epsilon, uint64_t steps,
                                       uint64_t seed, double* psi_out, double* u_dist_out,
                                       double* w_dist_out, double* gamma_eta_out) {
  if (auto st = require(problem && saddle && psi_out, "coupling_experiment: null argument"))
    return st;
  return guarded([&] {
    zoegd::SeededRng rng(seed);
    const auto series = zoegd::coupling_experiment(
        problem->impl,
        std::span<const double>(saddle, static_cast<std::size_t>(problem->impl.spec.d)), mu, r,
        eta, epsilon, steps, rng);
    std::memcpy(psi_out, series.psi.data(), series.psi.size() * sizeof(double));
    if (u_dist_out) std::memcpy(u_dist_out, series.u_dist.data(), series.u_dist.size() * sizeof(double));
    if (w_dist_out) std::memcpy(w_dist_out, series.w_dist.data(), series.w_dist.size() * sizeof(double));
    if (gamma_eta_out) *gamma_eta_out = series.gamma_eta;
    return ZOEGD_OK;
  });
}

zoegd_status zoegd_scaling_study(zoegd_problem* problem, const double* epsilons,
                                 size_t n_epsilons, const zoegd_egd_config* config, int32_t seeds,
                                 uint64_t seed_base, zoegd_scaling_row* rows_out,
                                 double* growth_ratios_out) {
  if (auto st = require(problem && epsilons && config && rows_out, "scaling_study: null argument"))
    return st;
  return guarded([&] {
    const auto table = zoegd::scaling_study(problem->impl, std::span(epsilons, n_epsilons),
                                            to_cpp(*config), seeds, seed_base);
    for (size_t i = 0; i < table.rows.size(); ++i) {
      const auto& r = table.rows[i];
      rows_out[i] = zoegd_scaling_row{r.epsilon,
                                      r.median_iterations,
                                      r.median_queries,
                                      r.predicted_queries_per_iteration,
                                      r.predicted_total_queries,
                                      r.normalized_iterations};
    }
    if (growth_ratios_out) {
      for (size_t i = 0; i < table.iteration_growth_ratios.size(); ++i) {
        growth_ratios_out[i] = table.iteration_growth_ratios[i];
      }
    }
    return ZOEGD_OK;
  });
}

}  // extern "C"
