// Copyright 2026 The zoegd Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef ZOEGD_DIAGNOSTICS_HPP
#define ZOEGD_DIAGNOSTICS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "egd.hpp"
#include "testbed.hpp"

namespace zoegd {

struct DescentViolation {
  std::uint64_t t = 0;          ///< iteration whose step broke the decrease bound
  double f_curr = 0.0;
  double f_next = 0.0;
  double g_hat_norm = 0.0;
  double required_decrease = 0.0;  ///< (eta/4) * ||g_hat||^2
};

/// Post-hoc per-step descent audit of a trace: wherever the recorded estimate
/// has norm >= g_thres and lies within accuracy_threshold of the analytic
/// gradient, the next value must satisfy
///   f(x_{t+1}) <= f(x_t) - (eta/4) * ||g_hat_t||^2.
/// Expected to come back empty; each violation reports the step.
///
/// The default accuracy_threshold is g_thres/4, the tightest accuracy under
/// which the decrease is guaranteed; pass a larger value to audit (and catch)
/// steps outside that hypothesis. Requires a thin=1 trace with g_hat
/// snapshots; throws InsufficientTraceError otherwise.
std::vector<DescentViolation> descent_check(const RunResult& run, const BenchmarkProblem& problem,
                                            const EgdSchedule& schedule,
                                            std::optional<double> accuracy_threshold = std::nullopt);

struct EscapeStats {
  struct PerSeed {
    std::uint64_t seed = 0;
    bool escaped = false;
    StationaryClass classification;
    double f_final = 0.0;
    std::uint64_t iterations = 0;
    std::uint64_t total_queries = 0;
    std::uint64_t iterations_to_escape = 0;  ///< meaningful only when escaped
  };
  std::uint64_t seeds = 0;
  std::uint64_t escaped = 0;
  /// NaN when no run escaped (the undefined marker).
  double mean_iterations_to_escape = 0.0;
  double f_start = 0.0;
  double f_thres = 0.0;
  double delta_hat = 0.0;  ///< reported alongside: the bound may be vacuous (> 1)
  std::vector<PerSeed> per_seed;  ///< sorted by seed
};

/// Runs egd from the problem's known saddle (falling back to a known minimum,
/// then the origin) once per seed and counts runs whose returned point either
/// classifies as second order or whose final value dropped below
/// f(x0) - f_thres. Seeds fan out over worker threads; per-seed streams keep
/// every run reproducible.
EscapeStats escape_experiment(const BenchmarkProblem& problem, const EgdConfig& config,
                              std::span<const std::uint64_t> seeds);

struct CouplingSeries {
  std::vector<double> psi;            ///< |<w_t - u_t, e1>|, length steps + 1
  double gamma_eta = 0.0;             ///< sqrt(rho * epsilon) * eta
  std::vector<double> growth_ratios;  ///< psi_{t+1} / psi_t, length steps
  std::vector<double> u_dist;         ///< ||u_t - saddle||, length steps + 1
  std::vector<double> w_dist;         ///< ||w_t - saddle||, length steps + 1
};

/// Two exact-gradient descent sequences from u0 (uniform in the r-ball at the
/// saddle) and w0 = u0 + mu * r * e1, where e1 is the most negative Hessian
/// eigendirection at the saddle. Near a strict saddle their separation along
/// e1 should grow geometrically; the series records it step by step.
CouplingSeries coupling_experiment(const BenchmarkProblem& problem, std::span<const double> saddle,
                                   double mu, double r, double eta, double epsilon,
                                   std::uint64_t steps, SeededRng& rng);

struct ScalingRow {
  double epsilon = 0.0;
  double median_iterations = 0.0;
  double median_queries = 0.0;              ///< measured
  double predicted_queries_per_iteration = 0.0;  ///< theoretical m + 1 at this epsilon
  double predicted_total_queries = 0.0;     ///< median iterations * (m + 1)
  double normalized_iterations = 0.0;  ///< median * eps^2 / (l * delta_f * ln^4(d l delta_f/(eps^2 delta)))
};

struct ScalingTable {
  std::vector<ScalingRow> rows;                 ///< one per epsilon, input order
  std::vector<double> iteration_growth_ratios;  ///< rows[i+1]/rows[i] medians
};

/// Iterations/queries to termination as epsilon tightens. epsilons must be
/// strictly decreasing, each in (0, 1); seeds runs per epsilon, seeded
/// seed_base, seed_base+1, ...
ScalingTable scaling_study(const BenchmarkProblem& problem, std::span<const double> epsilons,
                           const EgdConfig& base_config, int seeds, std::uint64_t seed_base);

}  // namespace zoegd

#endif  // ZOEGD_DIAGNOSTICS_HPP
