// Copyright 2026 The zoegd Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef ZOEGD_TYPES_HPP
#define ZOEGD_TYPES_HPP

#include <optional>
#include <span>
#include <vector>

namespace zoegd {

/// Smoothness data the schedules consume: dimension, gradient-Lipschitz
/// constant l, Hessian-Lipschitz constant rho, and gradient-norm bound B.
///
/// For test functions whose gradient is unbounded globally, the constants are
/// declared over a stated domain of interest (the ball of radius
/// domain_radius about the origin); iterates that leave it are outside the
/// guarantee and are counted in the run result.
struct ProblemSpec {
  int d = 0;
  double l = 0.0;
  double rho = 0.0;
  double B = 0.0;
  std::optional<double> f_star_hint;   // known global minimum (testbed only)
  std::optional<double> domain_radius;

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

double norm(std::span<const double> v);
double dot(std::span<const double> a, std::span<const double> b);

}  // namespace zoegd

#endif  // ZOEGD_TYPES_HPP
