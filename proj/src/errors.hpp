// Copyright 2026 The zoegd Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef ZOEGD_ERRORS_HPP
#define ZOEGD_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zoegd {

// Base class for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied argument is malformed (wrong length, non-finite, ...).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// A value lies outside the range the method is defined for.
class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

// A configuration quantity is unusable; names the offending field.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// The black-box function produced a non-finite value; carries the query point.
class OracleError : public Error {
 public:
  OracleError(const std::string& what, std::vector<double> point)
      : Error(what), point_(std::move(point)) {}
  const std::vector<double>& point() const noexcept { return point_; }

 private:
  std::vector<double> point_;
};

// Unknown benchmark name; the message lists the catalog.
class CatalogError : public Error {
 public:
  using Error::Error;
};

// The operation needs analytic derivatives the problem does not supply.
class UnsupportedProblemError : public Error {
 public:
  using Error::Error;
};

// The trace lacks the per-iteration snapshots a check needs.
class InsufficientTraceError : public Error {
 public:
  using Error::Error;
};

}  // namespace zoegd

#endif  // ZOEGD_ERRORS_HPP
