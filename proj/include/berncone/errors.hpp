#pragma once

#include <stdexcept>
#include <string>

namespace berncone {

/// Malformed input text or JSON that does not match a schema.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A degree bound too small for the polynomials involved.
struct DegreeError : std::invalid_argument {
  explicit DegreeError(const std::string& what) : std::invalid_argument(what) {}
};

/// Anomalous optimisation outcome: unbounded programs, witnesses that fail
/// re-expansion, conditioning on a prevision-zero likelihood.
struct LpError : std::runtime_error {
  explicit LpError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace berncone
