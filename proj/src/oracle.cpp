// Copyright 2026 The zoegd Authors
// SPDX-License-Identifier: Apache-2.0
#include "oracle.hpp"

#include <cmath>
#include <sstream>

namespace zoegd {

namespace {

std::string format_point(std::span<const double> x) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) os << ", ";
    os << x[i];
  }
  os << ")";
  return os.str();
}

}  // namespace

ZeroOrderOracle::ZeroOrderOracle(int dimension, Fn fn) : dim_(dimension), fn_(std::move(fn)) {
  if (dim_ < 1) throw InvalidInputError("oracle dimension must be >= 1");
  if (!fn_) throw InvalidInputError("oracle function must be callable");
}

double ZeroOrderOracle::evaluate(std::span<const double> x) {
  if (static_cast<int>(x.size()) != dim_) {
    throw InvalidInputError("oracle query has length " + std::to_string(x.size()) +
                            ", expected " + std::to_string(dim_));
  }
  for (double c : x) {
    if (!std::isfinite(c)) {
      throw InvalidInputError("oracle query has a non-finite coordinate: " + format_point(x));
    }
  }
  count_.fetch_add(1, std::memory_order_relaxed);
  const double y = fn_(x);
  if (!std::isfinite(y)) {
    throw OracleError("oracle returned a non-finite value at " + format_point(x),
                      std::vector<double>(x.begin(), x.end()));
  }
  return y;
}

}  // namespace zoegd
