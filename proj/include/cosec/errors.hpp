#pragma once

#include <stdexcept>
#include <string>

namespace cosec {

/// Malformed input: bad edge lists, out-of-range vertices, bad flags.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An algorithm was called on a graph outside its domain
/// (e.g. a cubic routine on a non-cubic graph).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Minimality queries are only sound for superset-closed properties.
class UnsupportedProperty : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A runtime check of a proven structural claim failed. Carries a report
/// describing the counterexample; the CLI maps this to exit code 4.
class ClaimViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cosec
