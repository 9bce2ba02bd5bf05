// Copyright 2026 The zoegd Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "errors.hpp"
#include "rng.hpp"
#include "testbed.hpp"

using namespace zoegd;

namespace {

// Central differences of the black-box oracle; the independent check that the
// analytic gradients are the oracle's gradients.
std::vector<double> central_diff(const BenchmarkProblem& p, std::vector<double> x, double h) {
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double saved = x[i];
    x[i] = saved + h;
    const double fp = p.oracle->evaluate(x);
    x[i] = saved - h;
    const double fm = p.oracle->evaluate(x);
    x[i] = saved;
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

std::vector<double> random_domain_point(const BenchmarkProblem& p, SeededRng& rng) {
  const double radius = p.spec.domain_radius.value_or(3.0);
  return rng.uniform_ball(p.spec.d, 0.95 * radius);
}

double dist(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("catalog spot values") {
  const BenchmarkProblem bowl = make_benchmark("bowl", 3);
  const std::vector<double> x{1.0, 2.0, 3.0};
  CHECK(bowl.oracle->evaluate(x) == 7.0);
  CHECK(bowl.gradient(x) == std::vector<double>{1.0, 2.0, 3.0});
  CHECK(bowl.hessian_min_eig(x) == 1.0);

  const BenchmarkProblem saddle = make_benchmark("saddle_quadratic", 2);
  const std::vector<double> origin{0.0, 0.0};
  CHECK(saddle.oracle->evaluate(origin) == 0.0);
  CHECK(saddle.gradient(origin) == std::vector<double>{0.0, 0.0});
  CHECK(saddle.hessian_min_eig(origin) == -1.0);
  CHECK(saddle.min_eig_direction(origin) == std::vector<double>{0.0, 1.0});
  CHECK(saddle.oracle->evaluate(std::vector<double>{0.0, 2.0}) == -2.0);
}

TEST_CASE("unknown problem name lists the catalog") {
  try {
    (void)make_benchmark("mystery", 2);
    FAIL("expected CatalogError");
  } catch (const CatalogError& e) {
    const std::string msg = e.what();
    for (const std::string& name : benchmark_names()) {
      CHECK(msg.find(name) != std::string::npos);
    }
  }
  CHECK_THROWS_AS((void)make_benchmark("saddle_quadratic", 1), InvalidInputError);
}

TEST_CASE("quartic stationary points verified from the oracle") {
  const BenchmarkProblem quartic = make_benchmark("saddle_quartic", 3);
  REQUIRE(quartic.known_minima.size() == 2);
  REQUIRE(quartic.known_saddles.size() == 1);
  for (const auto& minimum : quartic.known_minima) {
    CHECK(norm(quartic.gradient(minimum)) == 0.0);
    CHECK(quartic.hessian_min_eig(minimum) > 0.0);
    CHECK(norm(central_diff(quartic, minimum, 1e-5)) < 1e-9);
    CHECK(quartic.oracle->evaluate(minimum) == doctest::Approx(-0.25));
  }
  const auto& saddle = quartic.known_saddles.front();
  CHECK(norm(quartic.gradient(saddle)) == 0.0);
  CHECK(quartic.hessian_min_eig(saddle) == -1.0);
  CHECK(quartic.min_eig_direction(saddle) == std::vector<double>{0.0, 1.0, 0.0});
}

TEST_CASE("analytic gradients match central differences at random points") {
  SeededRng rng(2024);
  for (const std::string& name : benchmark_names()) {
    const int d = (name == "saddle_quadratic" || name == "saddle_quartic") ? 3 : 2;
    const BenchmarkProblem p = make_benchmark(name, d);
    for (int trial = 0; trial < 100; ++trial) {
      const std::vector<double> x = random_domain_point(p, rng);
      const std::vector<double> analytic = p.gradient(x);
      const std::vector<double> fd = central_diff(p, x, 1e-5);
      const double rel = dist(analytic, fd) / (1.0 + norm(analytic));
      CHECK_MESSAGE(rel < 1e-6, name, " trial ", trial);
    }
  }
}

TEST_CASE("declared l and rho dominate measured ratios on sampled pairs") {
  SeededRng rng(77);
  for (const std::string& name : benchmark_names()) {
    const int d = (name == "saddle_quadratic" || name == "saddle_quartic") ? 2 : 2;
    const BenchmarkProblem p = make_benchmark(name, d);
    double max_grad_ratio = 0.0, max_hess_ratio = 0.0, max_grad_norm = 0.0;
    for (int trial = 0; trial < 10000; ++trial) {
      const std::vector<double> x = random_domain_point(p, rng);
      const std::vector<double> y = random_domain_point(p, rng);
      const double sep = dist(x, y);
      if (sep < 1e-9) continue;
      max_grad_ratio = std::max(max_grad_ratio, dist(p.gradient(x), p.gradient(y)) / sep);
      // All catalog Hessians are diagonal, so the spectral norm of the
      // difference is the largest per-entry gap.
      const auto hx = p.hessian_diag(x), hy = p.hessian_diag(y);
      double hgap = 0.0;
      for (std::size_t i = 0; i < hx.size(); ++i) hgap = std::max(hgap, std::abs(hx[i] - hy[i]));
      max_hess_ratio = std::max(max_hess_ratio, hgap / sep);
      max_grad_norm = std::max(max_grad_norm, norm(p.gradient(x)));
    }
    const double tol = 1.0 + 1e-12;
    CHECK_MESSAGE(max_grad_ratio <= p.spec.l * tol, name, " l=", p.spec.l, " measured=", max_grad_ratio);
    CHECK_MESSAGE(max_hess_ratio <= p.spec.rho * tol, name, " rho=", p.spec.rho, " measured=", max_hess_ratio);
    CHECK_MESSAGE(max_grad_norm <= p.spec.B * tol, name, " B=", p.spec.B, " measured=", max_grad_norm);
  }
}

TEST_CASE("classifier trichotomy and boundaries") {
  const BenchmarkProblem saddle = make_benchmark("saddle_quadratic", 2);
  const std::vector<double> origin{0.0, 0.0};

  auto cls = classify_point(saddle, origin, 0.01, 1.0);
  CHECK(cls.kind == StationaryKind::FirstOrderOnly);
  CHECK(cls.grad_norm == 0.0);
  CHECK(cls.min_eig == -1.0);

  cls = classify_point(saddle, std::vector<double>{0.0, 2.0}, 0.01, 1.0);
  CHECK(cls.kind == StationaryKind::NotStationary);
  CHECK(cls.grad_norm == doctest::Approx(2.0));

  const BenchmarkProblem bowl = make_benchmark("bowl", 2);
  CHECK(classify_point(bowl, origin, 0.01, 1.0).kind == StationaryKind::SecondOrder);
  CHECK(classify_point(bowl, origin, 1e-12, 1e-9).kind == StationaryKind::SecondOrder);

  // Boundary semantics are inclusive: ||grad|| == epsilon stays stationary,
  // min_eig == -sqrt(rho*eps) stays second order.
  BenchmarkProblem custom = bowl;
  custom.gradient = [](std::span<const double>) { return std::vector<double>{0.01, 0.0}; };
  custom.hessian_min_eig = [](std::span<const double>) { return -0.1; };
  cls = classify_point(custom, origin, 0.01, 1.0);  // sqrt(rho*eps) = 0.1
  CHECK(cls.kind == StationaryKind::SecondOrder);
  custom.hessian_min_eig = [](std::span<const double>) { return -0.1000000001; };
  CHECK(classify_point(custom, origin, 0.01, 1.0).kind == StationaryKind::FirstOrderOnly);
  custom.gradient = [](std::span<const double>) { return std::vector<double>{0.0100000001, 0.0}; };
  CHECK(classify_point(custom, origin, 0.01, 1.0).kind == StationaryKind::NotStationary);
}

TEST_CASE("linear_clip is globally gradient-bounded and nearly linear at the origin") {
  const BenchmarkProblem clip = make_benchmark("linear_clip", 2);
  CHECK(clip.spec.B == doctest::Approx(std::sqrt(13.0)));
  const std::vector<double> g0 = clip.gradient(std::vector<double>{0.0, 0.0});
  CHECK(g0[0] == doctest::Approx(3.0));
  CHECK(g0[1] == doctest::Approx(-2.0));
  // gradient norm approaches 0 far out but never exceeds B
  const std::vector<double> gfar = clip.gradient(std::vector<double>{40.0, -40.0});
  CHECK(norm(gfar) < 1e-3);
}
