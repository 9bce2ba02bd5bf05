// Copyright 2026 The zoegd Authors
// SPDX-License-Identifier: Apache-2.0
#include "rng.hpp"

#include <cmath>
#include <numbers>

#include "errors.hpp"

namespace zoegd {

double SeededRng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SeededRng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // u1 in (0, 1] so the log is finite.
  const double u1 = 1.0 - uniform01();
  const double u2 = uniform01();
  const double mag = std::sqrt(-2.0 * std::log(u1));
  const double ang = 2.0 * std::numbers::pi * u2;
  spare_ = mag * std::sin(ang);
  has_spare_ = true;
  return mag * std::cos(ang);
}

std::vector<double> SeededRng::gaussian_vector(int d) {
  if (d < 1) throw InvalidInputError("gaussian_vector: dimension must be >= 1");
  std::vector<double> u(static_cast<std::size_t>(d));
  for (double& v : u) v = gaussian();
  return u;
}

std::vector<double> SeededRng::uniform_ball(int d, double r) {
  if (d < 1) throw InvalidInputError("uniform_ball: dimension must be >= 1");
  if (!(r >= 0.0)) throw InvalidInputError("uniform_ball: radius must be >= 0");
  std::vector<double> v = gaussian_vector(d);
  double norm2 = 0.0;
  for (double c : v) norm2 += c * c;
  double norm = std::sqrt(norm2);
  // A zero Gaussian vector has probability zero but a defined fallback keeps
  // the draw count fixed.
  if (norm == 0.0) {
    v.assign(v.size(), 0.0);
    v[0] = 1.0;
    norm = 1.0;
  }
  const double scale = r * std::pow(uniform01(), 1.0 / static_cast<double>(d)) / norm;
  for (double& c : v) c *= scale;
  return v;
}

}  // namespace zoegd
