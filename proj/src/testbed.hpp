// Copyright 2026 The zoegd Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef ZOEGD_TESTBED_HPP
#define ZOEGD_TESTBED_HPP

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "types.hpp"

namespace zoegd {

/// A benchmark problem: a black-box oracle plus the analytic ground truth the
/// harnesses check against. Immutable after construction and safe for
/// concurrent evaluation.
///
/// Every catalog Hessian is diagonal, so hessian_diag returns the full second
/// derivative information and min_eig_direction is a coordinate axis.
struct BenchmarkProblem {
  std::string name;
  ProblemSpec spec;
  std::shared_ptr<ZeroOrderOracle> oracle;
  std::function<std::vector<double>(std::span<const double>)> gradient;
  std::function<double(std::span<const double>)> hessian_min_eig;
  std::function<std::vector<double>(std::span<const double>)> hessian_diag;
  /// Unit eigenvector of the smallest Hessian eigenvalue at x.
  std::function<std::vector<double>(std::span<const double>)> min_eig_direction;
  std::vector<std::vector<double>> known_saddles;
  std::vector<std::vector<double>> known_minima;
};

/// Catalog names accepted by make_benchmark, in catalog order.
const std::vector<std::string>& benchmark_names();

/// Builds the named problem in dimension d. Throws CatalogError listing the
/// valid names for an unknown name, InvalidInputError for an incompatible
/// dimension (saddle problems need d >= 2).
BenchmarkProblem make_benchmark(const std::string& name, int d);

enum class StationaryKind { NotStationary, FirstOrderOnly, SecondOrder };

const char* to_string(StationaryKind kind);

/// Classification together with the measurements it was based on, so it can
/// be audited after the fact.
struct StationaryClass {
  StationaryKind kind = StationaryKind::NotStationary;
  double grad_norm = 0.0;
  double min_eig = 0.0;
};

/// NotStationary when ||grad f(x)|| > epsilon; otherwise SecondOrder when
/// lambda_min(hess f(x)) >= -sqrt(rho * epsilon) and FirstOrderOnly when it
/// is not. Boundaries are inclusive exactly as written.
StationaryClass classify_point(const BenchmarkProblem& problem, std::span<const double> x,
                               double epsilon, double rho);

}  // namespace zoegd

#endif  // ZOEGD_TESTBED_HPP
