// Copyright 2026 The zoegd Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef ZOEGD_RNG_HPP
#define ZOEGD_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace zoegd {

/// Deterministic random stream for a whole run.
///
/// mt19937_64 is fully specified by the standard, and the Gaussian and ball
/// transforms below avoid the implementation-defined std:: distributions, so
/// one seed pins every draw of a run bit-exactly. Not thread safe: a stream
/// is owned by exactly one run and threaded explicitly through all sampling.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();

  /// One standard normal draw (Box-Muller; the spare is part of the state).
  double gaussian();

  /// Length-d vector of independent standard normal draws.
  std::vector<double> gaussian_vector(int d);

  /// Uniform draw from the closed d-ball of radius r about the origin:
  /// a Gaussian direction scaled by r * U^(1/d). Rejection-free, so the
  /// stream advances by the same amount in every dimension.
  std::vector<double> uniform_ball(int d, double r);

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace zoegd

#endif  // ZOEGD_RNG_HPP
