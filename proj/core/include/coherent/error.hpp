#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coherent {

/// Base of every error raised by the library. `parameter()` names the
/// offending input when there is one (empty otherwise).
class Error : public std::runtime_error {
 public:
  Error(std::string parameter, const std::string& what)
      : std::runtime_error(what), parameter_(std::move(parameter)) {}

  const std::string& parameter() const noexcept { return parameter_; }

 private:
  std::string parameter_;
};

/// A parameter lies outside the domain of the operation (bad beta, point
/// outside the phase space, truncation tail too large, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The weighted invariant integral does not converge for these parameters.
class DivergentIntegralError : public Error {
 public:
  using Error::Error;
};

/// A function value at a quadrature node was NaN or infinite.
class NumericError : public Error {
 public:
  NumericError(std::size_t node, const std::string& what)
      : Error("node", what), node_(node) {}

  std::size_t node() const noexcept { return node_; }

 private:
  std::size_t node_;
};

/// Operands live in different spaces (kind or beta mismatch, Fock k mismatch).
class IncompatibleError : public Error {
 public:
  using Error::Error;
};

/// Polynomial degree exceeds what the space admits (Sphere: deg <= 2 beta).
class DegreeBoundError : public Error {
 public:
  using Error::Error;
};

/// An operation that requires a unit vector received something else.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

}  // namespace coherent
