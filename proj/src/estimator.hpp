// Copyright 2026 The zoegd Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef ZOEGD_ESTIMATOR_HPP
#define ZOEGD_ESTIMATOR_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "rng.hpp"
#include "types.hpp"

namespace zoegd {

struct BenchmarkProblem;  // testbed.hpp

/// Sampling plan for one Gaussian-smoothing gradient estimate.
///
///   v      = eps_hat / (c' * l * (d+3)^1.5)      smoothing radius
///   sigma2 = 2 * c'^2 * (d+4) * B^2              per-sample variance bound
///   m      = ceil((32*sigma2/eps_hat^2) * (ln(1/eps_hat) + 1/4))
///
/// m is kept as an integral-valued double: desk-scale plans are exact, and the
/// sufficient sample count for tight accuracies overflows 64-bit integers.
/// Estimating with the full m then requires it to fit; experiments pass a
/// budget override instead.
struct EstimatorSchedule {
  double v = 0.0;
  double sigma2 = 0.0;
  double m = 0.0;
  double eps_hat = 0.0;
  double c_prime = 0.0;
  std::string warning;  // non-empty when the plan leaves the analysis' comfort zone
};

/// Builds the plan for the requested accuracy. Requires 0 < eps_hat < 1
/// (the accuracy guarantee covers nothing else) and c_prime >= 3; throws
/// OutOfRangeError otherwise. A gradient bound B <= 1.5 yields a warning on
/// the schedule rather than a rejection.
EstimatorSchedule estimator_schedule(const ProblemSpec& spec, double eps_hat, double c_prime);

struct GradientEstimate {
  std::vector<double> g_hat;
  std::uint64_t queries_used = 0;  // m' + 1 fresh, m' with a cached base value
  double base_value = 0.0;         // f(x), reusable by the caller
  bool used_override = false;      // sample count did not come from the plan
};

/// One estimate: g_hat = (1/m') * sum_i (f(x + v*u_i) - f(x)) / v * u_i with
/// u_i standard Gaussian directions drawn in order from rng and m' either the
/// plan's m or the override. Directions are always drawn sequentially before
/// their function evaluations, which may fan out over worker threads; the
/// accumulation runs in sample order, so results are bit-identical for any
/// worker count. Supplying cached_fx skips the base evaluation.
GradientEstimate estimate_gradient(ZeroOrderOracle& oracle, std::span<const double> x,
                                   const EstimatorSchedule& schedule, SeededRng& rng,
                                   std::optional<double> cached_fx = std::nullopt,
                                   std::optional<std::uint64_t> budget_override = std::nullopt);

/// Upper bound on P(||u||^2 > a2) for a standard d-dimensional Gaussian u:
/// (d/a2)^(-d/2) * exp(-(a2 - d)/2), clamped to 1. Requires a2 > d, where the
/// optimizing Chernoff parameter is positive; throws InvalidInputError below.
double gaussian_tail_bound(int d, double a2);

/// Monte-Carlo exceedance frequency of ||u||^2 > a2 over the given number of
/// draws; the sanity check that the analytic bound dominates reality.
double chi_squared_exceedance_mc(int d, double a2, std::uint64_t draws, SeededRng& rng);

/// Fraction of trials whose estimate lands within schedule.eps_hat of the
/// analytic gradient at x. Throws UnsupportedProblemError when the problem
/// carries no analytic gradient.
double empirical_accuracy(const BenchmarkProblem& problem, std::span<const double> x,
                          const EstimatorSchedule& schedule, int trials, SeededRng& rng,
                          std::optional<std::uint64_t> budget_override = std::nullopt);

}  // namespace zoegd

#endif  // ZOEGD_ESTIMATOR_HPP
