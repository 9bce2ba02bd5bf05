// Copyright 2026 The zoegd Authors
// SPDX-License-Identifier: Apache-2.0
#include "estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "parallel.hpp"
#include "testbed.hpp"

namespace zoegd {

EstimatorSchedule estimator_schedule(const ProblemSpec& spec, double eps_hat, double c_prime) {
  spec.validate();
  if (!(eps_hat > 0.0) || !(eps_hat < 1.0)) {
    throw OutOfRangeError("eps_hat must lie in (0, 1); the accuracy guarantee covers no other range");
  }
  if (!(c_prime >= 3.0)) {
    throw OutOfRangeError("c_prime must be >= 3");
  }
  EstimatorSchedule s;
  s.eps_hat = eps_hat;
  s.c_prime = c_prime;
  const double d = static_cast<double>(spec.d);
  s.v = eps_hat / (c_prime * spec.l * std::pow(d + 3.0, 1.5));
  s.sigma2 = 2.0 * c_prime * c_prime * (d + 4.0) * spec.B * spec.B;
  // Rounded up: the sufficient condition is strict.
  s.m = std::ceil((32.0 * s.sigma2 / (eps_hat * eps_hat)) * (std::log(1.0 / eps_hat) + 0.25));
  if (spec.B <= 1.5) {
    s.warning = "B <= 1.5: the accuracy proof's small-eps_hat condition is only argued for B > 1.5";
  }
  return s;
}

namespace {

std::uint64_t resolve_sample_count(const EstimatorSchedule& schedule,
                                   std::optional<std::uint64_t> budget_override) {
  if (budget_override) {
    if (*budget_override < 1) throw InvalidInputError("budget_override must be >= 1");
    return *budget_override;
  }
  if (!(schedule.m >= 1.0)) throw ConfigError("m", "schedule sample count must be >= 1");
  if (schedule.m > 9.007199254740992e15) {  // 2^53: no longer exact, never runnable
    throw ConfigError("m", "theoretical sample count " + std::to_string(schedule.m) +
                               " is not runnable; pass a budget_override");
  }
  return static_cast<std::uint64_t>(schedule.m);
}

}  // namespace

GradientEstimate estimate_gradient(ZeroOrderOracle& oracle, std::span<const double> x,
                                   const EstimatorSchedule& schedule, SeededRng& rng,
                                   std::optional<double> cached_fx,
                                   std::optional<std::uint64_t> budget_override) {
  const int d = oracle.dimension();
  if (static_cast<int>(x.size()) != d) {
    throw InvalidInputError("estimate_gradient: point length does not match oracle dimension");
  }
  if (!(schedule.v > 0.0)) throw ConfigError("v", "smoothing radius must be > 0");

  const std::uint64_t m = resolve_sample_count(schedule, budget_override);

  GradientEstimate est;
  est.used_override = budget_override.has_value();
  est.base_value = cached_fx ? *cached_fx : oracle.evaluate(x);
  est.queries_used = m + (cached_fx ? 0 : 1);
  est.g_hat.assign(static_cast<std::size_t>(d), 0.0);

  // Directions for each chunk are drawn from the single stream before the
  // chunk's evaluations fan out; the draw sequence and the sample-order
  // accumulation are therefore identical for any chunk size or worker count.
  const std::size_t chunk = std::min<std::uint64_t>(
      m, std::clamp<std::size_t>(65536 / static_cast<std::size_t>(d), 64, 8192));
  std::vector<double> dirs(chunk * static_cast<std::size_t>(d));
  std::vector<double> values(chunk);
  const double v = schedule.v;
  const double fx = est.base_value;
  constexpr std::size_t kEvalGrain = 2048;  // cheap evals; do not fan out tiny jobs

  std::uint64_t done = 0;
  while (done < m) {
    const std::size_t n = static_cast<std::size_t>(std::min<std::uint64_t>(chunk, m - done));
    for (std::size_t i = 0; i < n * static_cast<std::size_t>(d); ++i) dirs[i] = rng.gaussian();
    parallel_blocks(n, [&](std::size_t begin, std::size_t end) {
      std::vector<double> probe(static_cast<std::size_t>(d));
      for (std::size_t i = begin; i < end; ++i) {
        const double* u = &dirs[i * static_cast<std::size_t>(d)];
        for (int j = 0; j < d; ++j) probe[static_cast<std::size_t>(j)] = x[j] + v * u[j];
        values[i] = oracle.evaluate(probe);
      }
    }, kEvalGrain);
    for (std::size_t i = 0; i < n; ++i) {
      const double w = (values[i] - fx) / v;
      const double* u = &dirs[i * static_cast<std::size_t>(d)];
      for (int j = 0; j < d; ++j) est.g_hat[static_cast<std::size_t>(j)] += w * u[j];
    }
    done += n;
  }
  const double inv_m = 1.0 / static_cast<double>(m);
  for (double& g : est.g_hat) g *= inv_m;
  return est;
}

double gaussian_tail_bound(int d, double a2) {
  if (d < 1) throw InvalidInputError("gaussian_tail_bound: dimension must be >= 1");
  if (!(a2 > static_cast<double>(d))) {
    throw InvalidInputError("gaussian_tail_bound: requires a2 > d (the optimizing exponent is positive only there)");
  }
  const double dd = static_cast<double>(d);
  const double log_bound = 0.5 * dd * std::log(a2 / dd) - 0.5 * (a2 - dd);
  return std::min(1.0, std::exp(log_bound));
}

double chi_squared_exceedance_mc(int d, double a2, std::uint64_t draws, SeededRng& rng) {
  if (d < 1) throw InvalidInputError("chi_squared_exceedance_mc: dimension must be >= 1");
  if (draws < 1) throw InvalidInputError("chi_squared_exceedance_mc: draws must be >= 1");
  std::uint64_t exceed = 0;
  for (std::uint64_t i = 0; i < draws; ++i) {
    double s = 0.0;
    for (int j = 0; j < d; ++j) {
      const double g = rng.gaussian();
      s += g * g;
    }
    if (s > a2) ++exceed;
  }
  return static_cast<double>(exceed) / static_cast<double>(draws);
}

double empirical_accuracy(const BenchmarkProblem& problem, std::span<const double> x,
                          const EstimatorSchedule& schedule, int trials, SeededRng& rng,
                          std::optional<std::uint64_t> budget_override) {
  if (!problem.gradient) {
    throw UnsupportedProblemError("empirical_accuracy: problem '" + problem.name +
                                  "' has no analytic gradient");
  }
  if (trials < 1) throw InvalidInputError("empirical_accuracy: trials must be >= 1");
  const std::vector<double> truth = problem.gradient(x);
  int hits = 0;
  for (int i = 0; i < trials; ++i) {
    const GradientEstimate est =
        estimate_gradient(*problem.oracle, x, schedule, rng, std::nullopt, budget_override);
    double err2 = 0.0;
    for (std::size_t j = 0; j < truth.size(); ++j) {
      const double dgi = est.g_hat[j] - truth[j];
      err2 += dgi * dgi;
    }
    if (std::sqrt(err2) <= schedule.eps_hat) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

}  // namespace zoegd
