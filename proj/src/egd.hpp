// Copyright 2026 The zoegd Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef ZOEGD_EGD_HPP
#define ZOEGD_EGD_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "estimator.hpp"
#include "oracle.hpp"
#include "rng.hpp"
#include "types.hpp"

namespace zoegd {

/// User-facing knobs for a perturbed estimated-gradient-descent run.
///
/// Defaults pick the conservative values the analysis never pins numerically:
/// c = 0.1 (it only requires c < 1/4), delta = 0.1, theta = 4 (keeps chi1
/// moderate), c' = 3 (the smallest constant the accuracy proof admits).
struct EgdConfig {
  double epsilon = 0.0;    ///< target stationarity, > 0
  double eps_hat = 0.1;    ///< requested estimator accuracy, in (0, 1)
  double c = 0.1;          ///< step-size constant, in (0, 1/4)
  double c_prime = 3.0;    ///< estimator constant, >= 3
  double delta = 0.1;      ///< failure probability, in (0, 1)
  double theta = 4.0;      ///< > 0
  double delta_f = 0.0;    ///< upper bound on f(x0) - f*, > 0
  std::uint64_t max_iterations = 0;  ///< hard cap; 0 = twice the theoretical bound
  /// Replaces the schedule's sample count m. The theoretical m is a
  /// worst-case sufficient condition that reaches millions of queries per
  /// iteration at modest parameters; overriding it keeps experiments
  /// tractable and marks the run non-theoretical.
  std::optional<std::uint64_t> sample_budget_override;
  /// Keep the pre-perturbation gradient estimate for the descent step after
  /// perturbing, exactly as the pseudo-code reads. The default re-estimates
  /// at the perturbed point, which is what the escape analysis assumes.
  bool literal_perturbation = false;
  /// Diagnostics mode: use an analytic gradient instead of the estimator,
  /// isolating the descent/escape dynamics from estimation noise.
  bool exact_gradient = false;
  /// Snapshot x and g_hat into the trace every k-th iteration (1 = always).
  std::uint64_t trace_thin = 1;

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// Quantities derived from an EgdConfig + ProblemSpec pair. All of the loop's
/// thresholds live here; none of them depend on eps_hat.
struct EgdSchedule {
  double chi1 = 0.0;       ///< threshold above which chi^3 e^-chi <= e^(-chi/(1+theta/4))
  double c_hat = 0.0;      ///< escape-window constant: solution of 8(2+ln(400c)) = c
  double chi = 0.0;        ///< max{(1+theta/4) ln(d l delta_f / (c eps^2 delta)), chi1}
  double chi_alt = 0.0;    ///< informational alternate form (1+theta) ln(2 d l delta_f / (c eps^2 delta))
  double eta = 0.0;        ///< step size c / l
  double g_thres = 0.0;    ///< gradient threshold (sqrt(c)/chi^2) eps
  double f_thres = 0.0;    ///< required decrease (c/chi^3) sqrt(eps^3/rho)
  std::uint64_t t_thres = 0;  ///< patience ceil((chi/c^2)(l/sqrt(rho eps)))
  double r = 0.0;          ///< perturbation radius g_thres / l
  double gamma = 0.0;      ///< sqrt(rho eps)
  double script_t = 0.0;   ///< escape window chi / (eta gamma)
  double script_p = 0.0;   ///< escape displacement scale (sqrt(c)/chi) sqrt(eps/rho)
  double delta_hat = 0.0;  ///< per-perturbation failure bound (d l / sqrt(rho eps)) e^-chi
  double eps_hat_ceiling_stationarity = 0.0;  ///< (sqrt(c)/(4 chi^2)) eps
  double eps_hat_ceiling_escape = 0.0;        ///< coupling-argument ceiling (see derive_schedule)
  double eps_hat_effective = 0.0;  ///< min(user eps_hat, both ceilings)
  bool eps_hat_adjusted = false;   ///< the user value exceeded a ceiling and was shrunk
  double theoretical_iteration_bound = 0.0;  ///< (chi^4/c^3) l delta_f / eps^2
  std::uint64_t max_iterations_effective = 0;
};

/// Smallest chi1 >= 1 such that chi^3 e^-chi <= e^(-chi/(1+theta/4)) holds for
/// every chi >= chi1; i.e. the largest root of 3 ln(chi) = chi(1 - 1/(1+theta/4)),
/// located by bisection to absolute tolerance 1e-9 and re-verified before
/// returning. (The inequality also holds trivially on a small interval near 1
/// and then fails; the threshold that matters is the upper one.)
double solve_chi1(double theta);

/// Derives every schedule quantity. If the user eps_hat exceeds the accuracy
/// ceilings the analysis needs, the effective value is shrunk to their
/// minimum and the result is flagged rather than rejected. Throws ConfigError
/// naming the field when a derived quantity is non-finite or non-positive.
EgdSchedule derive_schedule(const EgdConfig& config, const ProblemSpec& spec);

enum class Termination { TerminalConditionMet, MaxIterationsExceeded };

const char* to_string(Termination t);

struct IterationRecord {
  std::uint64_t t = 0;
  double f_value = 0.0;     ///< f at the point the step departs from
  double g_hat_norm = 0.0;  ///< norm of the estimate used by the step
  bool perturbed = false;
  std::optional<std::vector<double>> x;      ///< snapshot, per trace_thin
  std::optional<std::vector<double>> g_hat;  ///< snapshot, per trace_thin
};

struct RunResult {
  std::vector<double> x_final;
  double f_final = 0.0;
  Termination termination = Termination::MaxIterationsExceeded;
  std::uint64_t iterations = 0;  ///< loop bodies executed (= trace length)
  std::vector<std::uint64_t> perturbation_events;
  std::uint64_t total_queries = 0;
  std::uint64_t domain_exits = 0;  ///< iterations spent outside the domain of interest
  bool non_theoretical = false;    ///< a sample budget override was active
  bool exact_gradient = false;
  EgdSchedule schedule;
  EstimatorSchedule estimator;  ///< operative sampling plan (zeroed in exact mode)
  std::vector<IterationRecord> trace;
};

/// Oracle failure inside egd_run: carries whatever the run recorded before
/// aborting.
class EgdAbortError : public OracleError {
 public:
  EgdAbortError(const OracleError& cause, RunResult partial_run)
      : OracleError(cause.what(), cause.point()), partial(std::move(partial_run)) {}
  RunResult partial;
};

/// x - eta * g_hat.
std::vector<double> descent_step(std::span<const double> x, std::span<const double> g_hat,
                                 double eta);

using GradientFn = std::function<std::vector<double>(std::span<const double>)>;

/// The full perturbed estimated-gradient-descent loop. Per iteration:
/// estimate the gradient at x_t; if the estimate is small and no perturbation
/// happened within the last t_thres steps, displace x_t uniformly in the
/// r-ball (re-estimating at the displaced point unless literal_perturbation);
/// if exactly t_thres steps have passed since a perturbation and f failed to
/// drop by f_thres since it, return the iterate recorded at the perturbation;
/// otherwise take the descent step. Stops at max_iterations with the
/// best-seen point.
///
/// When config.exact_gradient is set, `exact` supplies the gradient and the
/// oracle is queried once per iteration for the trace and terminal values.
/// An oracle failure aborts the run by rethrowing with the partial trace
/// attached to the exception's message context.
RunResult egd_run(ZeroOrderOracle& oracle, const ProblemSpec& spec, std::span<const double> x0,
                  const EgdConfig& config, SeededRng& rng, const GradientFn& exact = {});

}  // namespace zoegd

#endif  // ZOEGD_EGD_HPP
