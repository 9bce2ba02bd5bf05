// Copyright 2026 The zoegd Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <vector>

#include "doctest.h"
#include "egd.hpp"
#include "errors.hpp"
#include "testbed.hpp"

using namespace zoegd;

namespace {

bool chi1_inequality_holds(double chi, double theta, double slack = 1e-12) {
  const double lhs = chi * chi * chi * std::exp(-chi);
  const double rhs = std::exp(-chi / (1.0 + theta / 4.0));
  return lhs <= rhs * (1.0 + slack);
}

EgdConfig bowl_config() {
  EgdConfig config;
  config.epsilon = 0.05;
  config.eps_hat = 5e-4;
  config.c = 0.1;
  config.delta = 0.5;
  config.theta = 4.0;
  config.delta_f = 25.0;
  config.sample_budget_override = 64;
  config.max_iterations = 30000;
  return config;
}

}  // namespace

TEST_CASE("chi1 threshold at theta = 4") {
  const double chi1 = solve_chi1(4.0);
  CHECK(chi1 == doctest::Approx(17.0).epsilon(0.005));
  CHECK(chi1_inequality_holds(chi1, 4.0));
  // It is the upper threshold: one unit below, the inequality fails again.
  CHECK_FALSE(chi1_inequality_holds(chi1 - 1.0, 4.0, 0.0));
  // And it keeps holding beyond it.
  for (double chi : {chi1 + 0.5, chi1 + 5.0, chi1 + 50.0}) {
    CHECK(chi1_inequality_holds(chi, 4.0));
  }
}

TEST_CASE("chi1 satisfies its defining inequality across theta") {
  for (double theta : {0.5, 1.0, 4.0, 100.0, 1e6}) {
    const double chi1 = solve_chi1(theta);
    CHECK(chi1 >= 1.0);
    CHECK_MESSAGE(chi1_inequality_holds(chi1, theta), "theta=", theta, " chi1=", chi1);
  }
  CHECK(solve_chi1(0.5) == doctest::Approx(131.793349).epsilon(1e-6));
  CHECK_THROWS_AS((void)solve_chi1(0.0), InvalidInputError);
}

TEST_CASE("schedule formulas reproduce by independent evaluation") {
  const ProblemSpec spec{2, 1.0, 1.0, 2.0, std::nullopt, std::nullopt};
  EgdConfig config;
  config.epsilon = 0.01;
  config.eps_hat = 0.1;
  config.c = 0.1;
  config.delta = 0.1;
  config.theta = 4.0;
  config.delta_f = 25.0;
  const EgdSchedule s = derive_schedule(config, spec);

  const double chi = std::max(2.0 * std::log(2.0 * 1.0 * 25.0 / (0.1 * 1e-4 * 0.1)), s.chi1);
  CHECK(s.chi == doctest::Approx(chi).epsilon(1e-14));
  CHECK(s.chi == doctest::Approx(35.455067).epsilon(1e-6));
  CHECK(s.eta == 0.1);
  CHECK(s.g_thres == doctest::Approx(std::sqrt(0.1) / (chi * chi) * 0.01).epsilon(1e-14));
  CHECK(s.f_thres == doctest::Approx(0.1 / (chi * chi * chi) * std::sqrt(1e-6)).epsilon(1e-14));
  CHECK(s.t_thres == 35456);
  CHECK(s.r == doctest::Approx(s.g_thres / spec.l).epsilon(1e-14));
  CHECK(s.gamma == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(s.script_t == doctest::Approx(chi / (0.1 * 0.1)).epsilon(1e-12));
  CHECK(s.script_p == doctest::Approx(std::sqrt(0.1) / chi * std::sqrt(0.01)).epsilon(1e-12));

  // Algebraic identities of the schedule.
  CHECK(s.g_thres * chi * chi / config.epsilon == doctest::Approx(std::sqrt(config.c)).epsilon(1e-12));
  const double t_exact = static_cast<double>(s.t_thres) * config.c * config.c *
                         std::sqrt(spec.rho * config.epsilon) / (s.chi * spec.l);
  CHECK(t_exact >= 1.0);
  CHECK(t_exact <= 1.0 + 1.0 / static_cast<double>(s.t_thres) + 1e-12);
}

TEST_CASE("eps_hat ceiling shrinks rather than rejects") {
  const ProblemSpec spec{2, 1.0, 1.0, 2.0, std::nullopt, std::nullopt};
  EgdConfig config;
  config.epsilon = 0.01;
  config.eps_hat = 0.5;
  config.delta_f = 25.0;
  const EgdSchedule s = derive_schedule(config, spec);
  CHECK(s.eps_hat_adjusted);
  CHECK(s.eps_hat_effective ==
        std::min({0.5, s.eps_hat_ceiling_stationarity, s.eps_hat_ceiling_escape}));
  CHECK(s.eps_hat_effective < 1e-6);  // theoretical ceilings are brutal at eps = 0.01
  CHECK(s.eps_hat_ceiling_stationarity ==
        doctest::Approx(std::sqrt(0.1) / (4.0 * s.chi * s.chi) * 0.01).epsilon(1e-12));
  // c_hat solves its defining fixed point.
  CHECK(8.0 * (2.0 + std::log(400.0 * s.c_hat)) == doctest::Approx(s.c_hat).epsilon(1e-9));
}

TEST_CASE("config validation names the failing field") {
  const ProblemSpec spec{2, 1.0, 1.0, 2.0, std::nullopt, std::nullopt};
  EgdConfig config;
  config.delta_f = 1.0;
  try {
    (void)derive_schedule(config, spec);  // epsilon still 0
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.field() == "epsilon");
  }
  config.epsilon = 0.1;
  config.c = 0.25;
  try {
    (void)derive_schedule(config, spec);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.field() == "c");
  }
}

TEST_CASE("descent step arithmetic") {
  CHECK(descent_step(std::vector<double>{1.0, 1.0}, std::vector<double>{0.0, 0.0}, 0.7) ==
        std::vector<double>{1.0, 1.0});
  CHECK(descent_step(std::vector<double>{1.0, 0.0}, std::vector<double>{1.0, 0.0}, 0.1) ==
        std::vector<double>{0.9, 0.0});
  // Exact-gradient contraction on the bowl: x_t = 0.9^t x_0.
  std::vector<double> x{2.0, -1.0};
  for (int t = 0; t < 5; ++t) x = descent_step(x, x, 0.1);
  CHECK(x[0] == doctest::Approx(2.0 * std::pow(0.9, 5)).epsilon(1e-15));
  CHECK_THROWS_AS((void)descent_step(std::vector<double>{1.0}, std::vector<double>{1.0, 2.0}, 0.1),
                  InvalidInputError);
}

TEST_CASE("bowl run terminates at a verified stationary point") {
  const BenchmarkProblem bowl = make_benchmark("bowl", 2);
  const EgdConfig config = bowl_config();
  SeededRng rng(2718);
  const std::vector<double> x0{5.0, 5.0};
  const RunResult run = egd_run(*bowl.oracle, bowl.spec, x0, config, rng);

  CHECK(run.termination == Termination::TerminalConditionMet);
  CHECK(run.non_theoretical);
  // Stationarity verified against the analytic gradient (= x on the bowl).
  CHECK(norm(bowl.gradient(run.x_final)) <= config.epsilon);
  CHECK(run.iterations <= config.max_iterations);
  REQUIRE(!run.perturbation_events.empty());

  // Return-point semantics: the returned point was recorded exactly t_thres
  // iterations before the firing check, and the decrease fell short of f_thres.
  const std::uint64_t fire_t = run.iterations - 1;
  const std::uint64_t recorded_t = fire_t - run.schedule.t_thres;
  const IterationRecord& rec = run.trace[recorded_t];
  REQUIRE(rec.x.has_value());
  CHECK(*rec.x == run.x_final);
  CHECK(rec.f_value == run.f_final);
  CHECK(run.trace[fire_t].f_value - rec.f_value > -run.schedule.f_thres);
}

TEST_CASE("a run started at the minimum perturbs, stalls, and returns it") {
  const BenchmarkProblem bowl = make_benchmark("bowl", 2);
  const EgdConfig config = bowl_config();
  SeededRng rng(99);
  const std::vector<double> x0{0.0, 0.0};
  const RunResult run = egd_run(*bowl.oracle, bowl.spec, x0, config, rng);

  CHECK(run.termination == Termination::TerminalConditionMet);
  REQUIRE(run.perturbation_events.size() == 1);
  CHECK(run.perturbation_events[0] == 0);
  CHECK(run.iterations == run.schedule.t_thres + 1);
  // Returned point is the perturbed start, still within the ball at the origin.
  CHECK(norm(run.x_final) <= run.schedule.r * (1.0 + 1e-12));
}

TEST_CASE("runs are deterministic and queries account exactly") {
  const BenchmarkProblem bowl = make_benchmark("bowl", 2);
  EgdConfig config = bowl_config();
  config.max_iterations = 400;  // capped run; exercises the best-seen path
  const std::vector<double> x0{5.0, 5.0};

  const std::uint64_t before = bowl.oracle->query_count();
  SeededRng r1(7);
  const RunResult a = egd_run(*bowl.oracle, bowl.spec, x0, config, r1);
  const std::uint64_t delta = bowl.oracle->query_count() - before;
  CHECK(a.total_queries == delta);
  // Per-iteration cost is m' + 1; analysis-faithful perturbation steps
  // re-estimate, costing another m' + 1.
  const std::uint64_t m_prime = *config.sample_budget_override;
  CHECK(a.total_queries ==
        (a.iterations + a.perturbation_events.size()) * (m_prime + 1));

  SeededRng r2(7);
  const RunResult b = egd_run(*bowl.oracle, bowl.spec, x0, config, r2);
  REQUIRE(a.trace.size() == b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    CHECK(a.trace[i].f_value == b.trace[i].f_value);
    CHECK(a.trace[i].g_hat_norm == b.trace[i].g_hat_norm);
  }
  CHECK(a.x_final == b.x_final);
  CHECK(a.termination == Termination::MaxIterationsExceeded);
}

TEST_CASE("quartic escape with exact gradients: two perturbation cycles") {
  const BenchmarkProblem quartic = make_benchmark("saddle_quartic", 2);
  EgdConfig config;
  config.epsilon = 0.05;
  config.c = 0.1;
  config.delta = 0.5;
  config.theta = 4.0;
  config.delta_f = 0.3;
  config.exact_gradient = true;
  config.max_iterations = 200000;
  config.trace_thin = 50;  // snapshots are not needed here; keep the trace light
  SeededRng rng(31415);
  const std::vector<double> x0{0.0, 0.0};
  const RunResult run = egd_run(*quartic.oracle, quartic.spec, x0, config, rng, quartic.gradient);

  CHECK(run.termination == Termination::TerminalConditionMet);
  REQUIRE(run.perturbation_events.size() == 2);
  CHECK(run.perturbation_events[0] == 0);
  // Perturbation spacing: strictly more than t_thres iterations apart.
  CHECK(run.perturbation_events[1] - run.perturbation_events[0] > run.schedule.t_thres);
  // The first window escaped (check passed), the second stalled at a minimum.
  const StationaryClass cls = classify_point(quartic, run.x_final, config.epsilon, quartic.spec.rho);
  CHECK(cls.kind == StationaryKind::SecondOrder);
  CHECK(run.f_final == doctest::Approx(-0.25).epsilon(1e-4));
  // Exact-gradient accounting: one f query per iteration plus one per
  // analysis-faithful re-estimate.
  CHECK(run.total_queries == run.iterations + run.perturbation_events.size());
}

TEST_CASE("exact-gradient bowl run decreases monotonically outside perturbations") {
  const BenchmarkProblem bowl = make_benchmark("bowl", 2);
  EgdConfig config = bowl_config();
  config.exact_gradient = true;
  config.sample_budget_override.reset();
  SeededRng rng(5);
  const RunResult run =
      egd_run(*bowl.oracle, bowl.spec, std::vector<double>{5.0, 5.0}, config, rng, bowl.gradient);
  CHECK(run.termination == Termination::TerminalConditionMet);
  for (std::size_t i = 0; i + 1 < run.trace.size(); ++i) {
    if (!run.trace[i + 1].perturbed) {
      CHECK(run.trace[i + 1].f_value <= run.trace[i].f_value);
    }
  }
}

TEST_CASE("literal perturbation mode keeps the stale estimate") {
  const BenchmarkProblem quartic = make_benchmark("saddle_quartic", 2);
  EgdConfig config;
  config.epsilon = 0.05;
  config.c = 0.1;
  config.delta = 0.5;
  config.theta = 4.0;
  config.delta_f = 0.3;
  config.exact_gradient = true;
  config.max_iterations = 5;

  config.literal_perturbation = true;
  SeededRng r1(8);
  const RunResult literal =
      egd_run(*quartic.oracle, quartic.spec, std::vector<double>{0.0, 0.0}, config, r1,
              quartic.gradient);
  REQUIRE(!literal.trace.empty());
  CHECK(literal.trace[0].perturbed);
  // Stale estimate at the exact saddle is exactly zero; the fresh one is not.
  CHECK(literal.trace[0].g_hat_norm == 0.0);

  config.literal_perturbation = false;
  SeededRng r2(8);
  const RunResult faithful =
      egd_run(*quartic.oracle, quartic.spec, std::vector<double>{0.0, 0.0}, config, r2,
              quartic.gradient);
  CHECK(faithful.trace[0].perturbed);
  CHECK(faithful.trace[0].g_hat_norm > 0.0);
}

TEST_CASE("theoretical sample counts refuse to run without an override") {
  const BenchmarkProblem bowl = make_benchmark("bowl", 2);
  EgdConfig config;
  config.epsilon = 0.01;
  config.delta_f = 25.0;
  config.max_iterations = 10;
  SeededRng rng(1);
  CHECK_THROWS_AS(
      (void)egd_run(*bowl.oracle, bowl.spec, std::vector<double>{1.0, 1.0}, config, rng),
      ConfigError);
}

TEST_CASE("oracle failure aborts with the partial trace attached") {
  ZeroOrderOracle fragile(2, [](std::span<const double> x) {
    // Blows up once the iterate moves into the right half plane.
    return x[0] > 0.5 ? std::numeric_limits<double>::infinity() : x[0];
  });
  const ProblemSpec spec{2, 1.0, 1.0, 2.0, std::nullopt, std::nullopt};
  EgdConfig config;
  config.epsilon = 0.1;
  config.delta_f = 5.0;
  config.sample_budget_override = 8;
  config.max_iterations = 50;
  SeededRng rng(3);
  try {
    // Descending on f = x_0 walks left; start right of the cliff so a probe
    // crosses it immediately.
    (void)egd_run(fragile, spec, std::vector<double>{0.5, 0.0}, config, rng);
    FAIL("expected EgdAbortError");
  } catch (const EgdAbortError& e) {
    CHECK(e.point().size() == 2);
    CHECK(std::string(e.what()).find("aborted") != std::string::npos);
  }
}
