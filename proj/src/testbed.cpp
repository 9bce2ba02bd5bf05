// Copyright 2026 The zoegd Authors
// SPDX-License-Identifier: Apache-2.0
#include "testbed.hpp"

#include <cmath>
#include <cstddef>

namespace zoegd {

namespace {

std::vector<double> axis_vector(int d, std::size_t index) {
  std::vector<double> e(static_cast<std::size_t>(d), 0.0);
  e[index] = 1.0;
  return e;
}

// Every catalog Hessian is diagonal: the eigendirection of the smallest
// eigenvalue is the axis of the smallest diagonal entry (lowest index wins
// ties).
std::function<std::vector<double>(std::span<const double>)> direction_from_diag(
    int d, std::function<std::vector<double>(std::span<const double>)> diag) {
  return [d, diag = std::move(diag)](std::span<const double> x) {
    const std::vector<double> h = diag(x);
    std::size_t arg = 0;
    for (std::size_t i = 1; i < h.size(); ++i) {
      if (h[i] < h[arg]) arg = i;
    }
    return axis_vector(d, arg);
  };
}

BenchmarkProblem make_constant(int d) {
  constexpr double kValue = 4.25;
  BenchmarkProblem p;
  p.name = "constant";
  p.spec = ProblemSpec{d, 1.0, 1.0, 1.0, std::nullopt, std::nullopt};
  p.spec.f_star_hint = kValue;
  p.oracle = std::make_shared<ZeroOrderOracle>(d, [](std::span<const double>) { return kValue; });
  p.gradient = [d](std::span<const double>) { return std::vector<double>(static_cast<std::size_t>(d), 0.0); };
  p.hessian_diag = [d](std::span<const double>) { return std::vector<double>(static_cast<std::size_t>(d), 0.0); };
  p.hessian_min_eig = [](std::span<const double>) { return 0.0; };
  p.min_eig_direction = direction_from_diag(d, p.hessian_diag);
  return p;
}

// Smoothed linear function with a globally bounded gradient:
//   f(x) = sum_i a_i * T * tanh(x_i / T),  a_i alternating {3, -2}, T = 5.
// Near the origin this is the linear map <a, x>; far out each coordinate
// saturates. Exact constants over all of R^d:
//   sup ||grad f||   = ||a||                     (attained at 0)
//   sup |f''|        = max|a_i| * (2/T) * max|sech^2 u * tanh u| ~ 0.462
//   sup |f'''|       = max|a_i| * 2/T^2 = 0.24
// declared l = 0.5 and rho = 0.25 dominate both.
BenchmarkProblem make_linear_clip(int d) {
  constexpr double kScale = 5.0;
  std::vector<double> slopes(static_cast<std::size_t>(d));
  double norm_a2 = 0.0;
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    slopes[i] = (i % 2 == 0) ? 3.0 : -2.0;
    norm_a2 += slopes[i] * slopes[i];
  }
  BenchmarkProblem p;
  p.name = "linear_clip";
  p.spec = ProblemSpec{d, 0.5, 0.25, std::sqrt(norm_a2), std::nullopt, std::nullopt};
  p.oracle = std::make_shared<ZeroOrderOracle>(d, [slopes](std::span<const double> x) {
    double f = 0.0;
    for (std::size_t i = 0; i < slopes.size(); ++i) f += slopes[i] * kScale * std::tanh(x[i] / kScale);
    return f;
  });
  p.gradient = [slopes](std::span<const double> x) {
    std::vector<double> g(slopes.size());
    for (std::size_t i = 0; i < slopes.size(); ++i) {
      const double t = std::tanh(x[i] / kScale);
      g[i] = slopes[i] * (1.0 - t * t);
    }
    return g;
  };
  p.hessian_diag = [slopes](std::span<const double> x) {
    std::vector<double> h(slopes.size());
    for (std::size_t i = 0; i < slopes.size(); ++i) {
      const double t = std::tanh(x[i] / kScale);
      h[i] = slopes[i] * (-2.0 / kScale) * (1.0 - t * t) * t;
    }
    return h;
  };
  p.hessian_min_eig = [diag = p.hessian_diag](std::span<const double> x) {
    const std::vector<double> h = diag(x);
    double m = h[0];
    for (double v : h) m = std::min(m, v);
    return m;
  };
  p.min_eig_direction = direction_from_diag(d, p.hessian_diag);
  return p;
}

BenchmarkProblem make_bowl(int d) {
  constexpr double kDomain = 10.0;
  BenchmarkProblem p;
  p.name = "bowl";
  p.spec = ProblemSpec{d, 1.0, 1.0, kDomain, 0.0, kDomain};
  p.oracle = std::make_shared<ZeroOrderOracle>(d, [](std::span<const double> x) {
    double s = 0.0;
    for (double c : x) s += c * c;
    return 0.5 * s;
  });
  p.gradient = [](std::span<const double> x) { return std::vector<double>(x.begin(), x.end()); };
  p.hessian_diag = [d](std::span<const double>) { return std::vector<double>(static_cast<std::size_t>(d), 1.0); };
  p.hessian_min_eig = [](std::span<const double>) { return 1.0; };
  p.min_eig_direction = direction_from_diag(d, p.hessian_diag);
  p.known_minima = {std::vector<double>(static_cast<std::size_t>(d), 0.0)};
  return p;
}

// f(x) = (x_0^2 - x_1^2 + sum_{i>=2} x_i^2) / 2: strict saddle at the origin
// with constant Hessian diag(1, -1, 1, ...). Unbounded below along x_1, so
// there are no minima; the gradient bound holds on the domain of interest.
BenchmarkProblem make_saddle_quadratic(int d) {
  constexpr double kDomain = 10.0;
  BenchmarkProblem p;
  p.name = "saddle_quadratic";
  p.spec = ProblemSpec{d, 1.0, 1.0, kDomain, std::nullopt, kDomain};
  p.oracle = std::make_shared<ZeroOrderOracle>(d, [](std::span<const double> x) {
    double s = x[0] * x[0] - x[1] * x[1];
    for (std::size_t i = 2; i < x.size(); ++i) s += x[i] * x[i];
    return 0.5 * s;
  });
  p.gradient = [](std::span<const double> x) {
    std::vector<double> g(x.begin(), x.end());
    g[1] = -g[1];
    return g;
  };
  p.hessian_diag = [d](std::span<const double>) {
    std::vector<double> h(static_cast<std::size_t>(d), 1.0);
    h[1] = -1.0;
    return h;
  };
  p.hessian_min_eig = [](std::span<const double>) { return -1.0; };
  p.min_eig_direction = direction_from_diag(d, p.hessian_diag);
  p.known_saddles = {std::vector<double>(static_cast<std::size_t>(d), 0.0)};
  return p;
}

// Double well along x_1 on top of a bowl in the other coordinates:
//   f(x) = sum_{i != 1} x_i^2 / 2 + x_1^4/4 - x_1^2/2
// Strict saddle at the origin (Hessian diag(1, -1, 1, ...)), minima at
// x_1 = +-1 with value -1/4, and a genuinely varying Hessian. Constants over
// the domain ||x|| <= 2:
//   l = sup|3 x_1^2 - 1| = 11,  rho = sup 3|x_1 + y_1| = 12,
//   B = sup ||grad f|| = 6 (attained at x = +-2 e_1).
BenchmarkProblem make_saddle_quartic(int d) {
  constexpr double kDomain = 2.0;
  BenchmarkProblem p;
  p.name = "saddle_quartic";
  p.spec = ProblemSpec{d, 11.0, 12.0, 6.0, -0.25, kDomain};
  p.oracle = std::make_shared<ZeroOrderOracle>(d, [](std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i != 1) s += 0.5 * x[i] * x[i];
    }
    const double w = x[1];
    return s + 0.25 * w * w * w * w - 0.5 * w * w;
  });
  p.gradient = [](std::span<const double> x) {
    std::vector<double> g(x.begin(), x.end());
    g[1] = x[1] * x[1] * x[1] - x[1];
    return g;
  };
  p.hessian_diag = [d](std::span<const double> x) {
    std::vector<double> h(static_cast<std::size_t>(d), 1.0);
    h[1] = 3.0 * x[1] * x[1] - 1.0;
    return h;
  };
  p.hessian_min_eig = [](std::span<const double> x) {
    return std::min(1.0, 3.0 * x[1] * x[1] - 1.0);
  };
  p.min_eig_direction = direction_from_diag(d, p.hessian_diag);
  p.known_saddles = {std::vector<double>(static_cast<std::size_t>(d), 0.0)};
  std::vector<double> lo(static_cast<std::size_t>(d), 0.0), hi(static_cast<std::size_t>(d), 0.0);
  lo[1] = -1.0;
  hi[1] = 1.0;
  p.known_minima = {hi, lo};
  return p;
}

}  // namespace

const std::vector<std::string>& benchmark_names() {
  static const std::vector<std::string> names = {"constant", "linear_clip", "bowl",
                                                 "saddle_quadratic", "saddle_quartic"};
  return names;
}

BenchmarkProblem make_benchmark(const std::string& name, int d) {
  if (d < 1) throw InvalidInputError("make_benchmark: dimension must be >= 1");
  if (name == "constant") return make_constant(d);
  if (name == "linear_clip") return make_linear_clip(d);
  if (name == "bowl") return make_bowl(d);
  if (name == "saddle_quadratic" || name == "saddle_quartic") {
    if (d < 2) throw InvalidInputError("make_benchmark: " + name + " requires d >= 2");
    return name == "saddle_quadratic" ? make_saddle_quadratic(d) : make_saddle_quartic(d);
  }
  std::string listing;
  for (const std::string& n : benchmark_names()) {
    if (!listing.empty()) listing += ", ";
    listing += n;
  }
  throw CatalogError("unknown benchmark '" + name + "'; valid names: " + listing);
}

const char* to_string(StationaryKind kind) {
  switch (kind) {
    case StationaryKind::NotStationary: return "not_stationary";
    case StationaryKind::FirstOrderOnly: return "first_order_only";
    case StationaryKind::SecondOrder: return "second_order";
  }
  return "unknown";
}

StationaryClass classify_point(const BenchmarkProblem& problem, std::span<const double> x,
                               double epsilon, double rho) {
  if (!problem.gradient || !problem.hessian_min_eig) {
    throw UnsupportedProblemError("classify_point: problem '" + problem.name +
                                  "' has no analytic derivatives");
  }
  if (!(epsilon > 0.0) || !(rho > 0.0)) {
    throw InvalidInputError("classify_point: epsilon and rho must be > 0");
  }
  StationaryClass out;
  out.grad_norm = norm(problem.gradient(x));
  out.min_eig = problem.hessian_min_eig(x);
  if (out.grad_norm > epsilon) {
    out.kind = StationaryKind::NotStationary;
  } else if (out.min_eig >= -std::sqrt(rho * epsilon)) {
    out.kind = StationaryKind::SecondOrder;
  } else {
    out.kind = StationaryKind::FirstOrderOnly;
  }
  return out;
}

}  // namespace zoegd
