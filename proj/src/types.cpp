// Copyright 2026 The zoegd Authors
// SPDX-License-Identifier: Apache-2.0
#include "types.hpp"

#include <cmath>

#include "errors.hpp"

namespace zoegd {

void ProblemSpec::validate() const {
  if (d < 1) throw ConfigError("d", "dimension must be >= 1");
  if (!(l > 0.0) || !std::isfinite(l)) throw ConfigError("l", "smoothness constant must be finite and > 0");
  if (!(rho > 0.0) || !std::isfinite(rho)) throw ConfigError("rho", "Hessian-Lipschitz constant must be finite and > 0");
  if (!(B > 0.0) || !std::isfinite(B)) throw ConfigError("B", "gradient bound must be finite and > 0");
  if (domain_radius && !(*domain_radius > 0.0)) throw ConfigError("domain_radius", "must be > 0 when given");
}

double norm(std::span<const double> v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace zoegd
