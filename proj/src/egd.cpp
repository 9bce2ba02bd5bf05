// Copyright 2026 The zoegd Authors
// SPDX-License-Identifier: Apache-2.0
#include "egd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace zoegd {

void EgdConfig::validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw ConfigError("epsilon", "must be finite and > 0");
  if (!(eps_hat > 0.0) || !(eps_hat < 1.0)) throw ConfigError("eps_hat", "must lie in (0, 1)");
  if (!(c > 0.0) || !(c < 0.25)) throw ConfigError("c", "must lie in (0, 1/4)");
  if (!(c_prime >= 3.0)) throw ConfigError("c_prime", "must be >= 3");
  if (!(delta > 0.0) || !(delta < 1.0)) throw ConfigError("delta", "must lie in (0, 1)");
  if (!(theta > 0.0) || !std::isfinite(theta)) throw ConfigError("theta", "must be finite and > 0");
  if (!(delta_f > 0.0) || !std::isfinite(delta_f)) throw ConfigError("delta_f", "must be finite and > 0");
  if (trace_thin < 1) throw ConfigError("trace_thin", "must be >= 1");
  if (sample_budget_override && *sample_budget_override < 1) {
    throw ConfigError("sample_budget_override", "must be >= 1 when given");
  }
}

double solve_chi1(double theta) {
  if (!(theta > 0.0)) throw InvalidInputError("solve_chi1: theta must be > 0");
  const double k = (theta / 4.0) / (1.0 + theta / 4.0);
  const auto g = [k](double chi) { return 3.0 * std::log(chi) - k * chi; };
  // g peaks at 3/k with a positive value, then decreases without bound; the
  // sought threshold is its upper root.
  double lo = 3.0 / k;
  double hi = lo;
  while (g(hi) > 0.0) hi *= 2.0;
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0.0 ? lo : hi) = mid;
  }
  // Land strictly inside the valid region and re-verify the inequality in its
  // original form.
  double chi1 = std::max(1.0, hi + 1e-9);
  for (int i = 0; i < 64; ++i) {
    const double lhs = chi1 * chi1 * chi1 * std::exp(-chi1);
    const double rhs = std::exp(-chi1 / (1.0 + theta / 4.0));
    if (lhs <= rhs * (1.0 + 1e-12)) break;
    chi1 += 1e-9;
  }
  return chi1;
}

namespace {

// Largest root of 8(2 + ln(400 c)) = c; the constant sizing the escape
// window. The curve crosses once beyond its maximum at c = 8.
double solve_c_hat() {
  const auto h = [](double c) { return 8.0 * (2.0 + std::log(400.0 * c)) - c; };
  double lo = 8.0, hi = 16.0;
  while (h(hi) > 0.0) hi *= 2.0;
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    (h(mid) > 0.0 ? lo : hi) = mid;
  }
  return hi;
}

void require_positive_finite(double value, const char* field) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ConfigError(field, "derived value " + std::to_string(value) + " must be finite and > 0");
  }
}

}  // namespace

EgdSchedule derive_schedule(const EgdConfig& config, const ProblemSpec& spec) {
  config.validate();
  spec.validate();

  EgdSchedule s;
  s.chi1 = solve_chi1(config.theta);
  s.c_hat = solve_c_hat();

  const double d = static_cast<double>(spec.d);
  const double eps = config.epsilon;
  const double log_arg = d * spec.l * config.delta_f / (config.c * eps * eps * config.delta);
  s.chi = std::max((1.0 + config.theta / 4.0) * std::log(log_arg), s.chi1);
  s.chi_alt = (1.0 + config.theta) * std::log(2.0 * log_arg);
  s.eta = config.c / spec.l;
  s.g_thres = std::sqrt(config.c) / (s.chi * s.chi) * eps;
  s.f_thres = config.c / (s.chi * s.chi * s.chi) * std::sqrt(eps * eps * eps / spec.rho);
  s.r = s.g_thres / spec.l;
  s.gamma = std::sqrt(spec.rho * eps);
  s.script_t = s.chi / (s.eta * s.gamma);
  s.script_p = std::sqrt(config.c) / s.chi * std::sqrt(eps / spec.rho);
  s.delta_hat = d * spec.l / s.gamma * std::exp(-s.chi);

  require_positive_finite(s.chi, "chi");
  require_positive_finite(s.eta, "eta");
  require_positive_finite(s.g_thres, "g_thres");
  require_positive_finite(s.f_thres, "f_thres");
  require_positive_finite(s.r, "r");
  require_positive_finite(s.gamma, "gamma");
  require_positive_finite(s.script_t, "script_t");
  require_positive_finite(s.script_p, "script_p");

  const double t_thres_raw = std::ceil(s.chi / (config.c * config.c) * spec.l / s.gamma);
  require_positive_finite(t_thres_raw, "t_thres");
  if (t_thres_raw > 4.6e18) throw ConfigError("t_thres", "patience window overflows a 64-bit count");
  s.t_thres = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(t_thres_raw));

  s.eps_hat_ceiling_stationarity = std::sqrt(config.c) / (4.0 * s.chi * s.chi) * eps;
  s.eps_hat_ceiling_escape = (2.0 - std::sqrt(2.0)) / 2.0 *
                             (config.c * std::sqrt(eps * eps * eps * spec.rho) /
                              (s.chi * s.chi * s.chi * spec.l)) *
                             (s.delta_hat / (2.0 * std::sqrt(d))) * (300.0 * s.c_hat + 1.0);
  s.eps_hat_effective =
      std::min({config.eps_hat, s.eps_hat_ceiling_stationarity, s.eps_hat_ceiling_escape});
  s.eps_hat_adjusted = s.eps_hat_effective < config.eps_hat;

  s.theoretical_iteration_bound =
      std::pow(s.chi, 4.0) / std::pow(config.c, 3.0) * spec.l * config.delta_f / (eps * eps);
  if (config.max_iterations > 0) {
    s.max_iterations_effective = config.max_iterations;
  } else {
    const double cap = std::ceil(2.0 * s.theoretical_iteration_bound);
    s.max_iterations_effective =
        cap > 1.8e19 ? std::numeric_limits<std::uint64_t>::max()
                     : std::max<std::uint64_t>(1, static_cast<std::uint64_t>(cap));
  }
  return s;
}

const char* to_string(Termination t) {
  switch (t) {
    case Termination::TerminalConditionMet: return "terminal_condition_met";
    case Termination::MaxIterationsExceeded: return "max_iterations_exceeded";
  }
  return "unknown";
}

std::vector<double> descent_step(std::span<const double> x, std::span<const double> g_hat,
                                 double eta) {
  if (x.size() != g_hat.size()) throw InvalidInputError("descent_step: dimension mismatch");
  if (!(eta > 0.0)) throw InvalidInputError("descent_step: step size must be > 0");
  std::vector<double> next(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) next[i] = x[i] - eta * g_hat[i];
  return next;
}

namespace {

struct StepEstimate {
  std::vector<double> g_hat;
  double g_norm = 0.0;
  double f = 0.0;
  std::uint64_t queries = 0;
};

}  // namespace

RunResult egd_run(ZeroOrderOracle& oracle, const ProblemSpec& spec, std::span<const double> x0,
                  const EgdConfig& config, SeededRng& rng, const GradientFn& exact) {
  const EgdSchedule sched = derive_schedule(config, spec);
  if (static_cast<int>(x0.size()) != spec.d || oracle.dimension() != spec.d) {
    throw InvalidInputError("egd_run: x0/oracle dimension does not match the problem spec");
  }
  for (double c : x0) {
    if (!std::isfinite(c)) throw InvalidInputError("egd_run: x0 has a non-finite coordinate");
  }
  if (config.exact_gradient && !exact) {
    throw ConfigError("exact_gradient", "requested but no analytic gradient was supplied");
  }

  RunResult out;
  out.schedule = sched;
  out.exact_gradient = config.exact_gradient;
  out.non_theoretical = config.sample_budget_override.has_value() || config.exact_gradient;

  EstimatorSchedule est_sched;
  if (!config.exact_gradient) {
    // With a budget override the run is explicitly non-theoretical and the
    // sampling plan keeps the user's accuracy target: shrinking eps_hat to
    // the theoretical ceiling here would set a smoothing radius below double
    // resolution at desk-scale epsilon, freezing the dynamics.
    const double operative_eps_hat =
        config.sample_budget_override ? config.eps_hat : sched.eps_hat_effective;
    if (!(operative_eps_hat > 0.0) || !(operative_eps_hat < 1.0)) {
      throw ConfigError("eps_hat",
                        "effective accuracy " + std::to_string(operative_eps_hat) +
                            " left (0, 1); the theoretical ceiling is not runnable here");
    }
    est_sched = estimator_schedule(spec, operative_eps_hat, config.c_prime);
    out.estimator = est_sched;
  }

  const auto query = [&](std::span<const double> point) {
    StepEstimate cur;
    if (config.exact_gradient) {
      cur.f = oracle.evaluate(point);
      cur.queries = 1;
      cur.g_hat = exact(point);
      if (static_cast<int>(cur.g_hat.size()) != spec.d) {
        throw InvalidInputError("egd_run: analytic gradient has the wrong dimension");
      }
    } else {
      GradientEstimate est = estimate_gradient(oracle, point, est_sched, rng, std::nullopt,
                                               config.sample_budget_override);
      cur.f = est.base_value;
      cur.queries = est.queries_used;
      cur.g_hat = std::move(est.g_hat);
    }
    cur.g_norm = norm(cur.g_hat);
    return cur;
  };

  std::vector<double> x(x0.begin(), x0.end());
  // Sentinel start: the first perturbation may fire at t = 0, and the
  // terminal condition can only fire after one has happened.
  std::int64_t t_temp = -static_cast<std::int64_t>(sched.t_thres) - 1;
  struct Pending {
    std::uint64_t t;
    double f;
    std::vector<double> x;
  };
  std::optional<Pending> pending;

  double best_f = std::numeric_limits<double>::infinity();
  std::vector<double> best_x = x;
  bool terminal = false;

  const auto run_loop = [&] {
    for (std::uint64_t t = 0; t < sched.max_iterations_effective; ++t) {
      StepEstimate cur = query(x);
      std::uint64_t step_queries = cur.queries;
      bool perturbed = false;

      if (cur.g_norm <= sched.g_thres &&
          static_cast<std::int64_t>(t) - t_temp > static_cast<std::int64_t>(sched.t_thres)) {
        const std::vector<double> xi = rng.uniform_ball(spec.d, sched.r);
        for (int j = 0; j < spec.d; ++j) x[static_cast<std::size_t>(j)] += xi[static_cast<std::size_t>(j)];
        t_temp = static_cast<std::int64_t>(t);
        out.perturbation_events.push_back(t);
        perturbed = true;
        if (!config.literal_perturbation) {
          cur = query(x);  // the escape analysis descends from the perturbed point
          step_queries += cur.queries;
        }
        pending = Pending{t, cur.f, x};
      }

      IterationRecord rec;
      rec.t = t;
      rec.f_value = cur.f;
      rec.g_hat_norm = cur.g_norm;
      rec.perturbed = perturbed;
      if (t % config.trace_thin == 0 || perturbed) {
        rec.x = x;
        rec.g_hat = cur.g_hat;
      }
      out.trace.push_back(std::move(rec));
      out.total_queries += step_queries;
      if (spec.domain_radius && norm(x) > *spec.domain_radius) ++out.domain_exits;

      if (pending && static_cast<std::int64_t>(t) - t_temp ==
                         static_cast<std::int64_t>(sched.t_thres)) {
        if (cur.f - pending->f > -sched.f_thres) {
          out.x_final = pending->x;
          out.f_final = pending->f;
          out.termination = Termination::TerminalConditionMet;
          out.iterations = t + 1;
          terminal = true;
          return;
        }
        pending.reset();
      }

      if (cur.f < best_f) {
        best_f = cur.f;
        best_x = x;
      }

      for (int j = 0; j < spec.d; ++j) {
        x[static_cast<std::size_t>(j)] -= sched.eta * cur.g_hat[static_cast<std::size_t>(j)];
      }
    }
  };

  try {
    run_loop();
  } catch (const OracleError& e) {
    out.iterations = out.trace.size();
    out.x_final = best_x;
    out.f_final = best_f;
    const OracleError annotated(std::string(e.what()) + " (run aborted after " +
                                    std::to_string(out.trace.size()) + " recorded iterations)",
                                e.point());
    throw EgdAbortError(annotated, std::move(out));
  }

  if (!terminal) {
    out.termination = Termination::MaxIterationsExceeded;
    out.iterations = out.trace.size();
    if (std::isfinite(best_f)) {
      out.x_final = best_x;
      out.f_final = best_f;
    } else {
      out.x_final.assign(x0.begin(), x0.end());
      out.f_final = std::numeric_limits<double>::quiet_NaN();
    }
  }
  return out;
}

}  // namespace zoegd
