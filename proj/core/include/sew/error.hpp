#pragma once

#include <stdexcept>
#include <string>

namespace sew {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unsupported or inconsistent configuration (manifold kind/dimension,
/// mismatched layouts, malformed requests).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Input outside the computed or supported domain (eigenvalue past the
/// spectrum, index out of range, exponent below 1, exhausted ladder).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A mathematical hypothesis of the requested bound or construction is
/// violated (gamma too small, inadmissible epsilon, exponents outside a
/// theorem's case table, dimension beyond an estimator's capability).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// An iterative solver hit its iteration cap without meeting tolerance.
/// Carries the best value found so callers can still inspect it.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best)
      : Error(what), best_(best) {}
  double best() const { return best_; }

 private:
  double best_;
};

}  // namespace sew
