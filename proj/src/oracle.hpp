// Copyright 2026 The zoegd Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef ZOEGD_ORACLE_HPP
#define ZOEGD_ORACLE_HPP

#include <atomic>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "errors.hpp"

namespace zoegd {

/// Black-box access to f: R^d -> R with exact query accounting. This is the
/// only access the optimizer has to the objective.
///
/// The wrapped function must be a pure function of its input (same point,
/// same value, every call) and safe to invoke concurrently. The counter is
/// atomic, so evaluate() may be called from several workers at once; it goes
/// up by exactly one per call and is never reset during a run.
class ZeroOrderOracle {
 public:
  using Fn = std::function<double(std::span<const double>)>;

  ZeroOrderOracle(int dimension, Fn fn);

  int dimension() const noexcept { return dim_; }

  /// Evaluates f(x), counting the query. Throws InvalidInputError for a
  /// malformed point (wrong length or non-finite coordinate, not counted)
  /// and OracleError carrying x when f(x) is non-finite (counted: the query
  /// did happen).
  double evaluate(std::span<const double> x);

  std::uint64_t query_count() const noexcept {
    return count_.load(std::memory_order_relaxed);
  }

 private:
  int dim_;
  Fn fn_;
  std::atomic<std::uint64_t> count_{0};
};

}  // namespace zoegd

#endif  // ZOEGD_ORACLE_HPP
