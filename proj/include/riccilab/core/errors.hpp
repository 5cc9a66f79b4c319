#ifndef RICCILAB_CORE_ERRORS_HPP
#define RICCILAB_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace riccilab {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Matrix size or scalar-kind mismatch.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// Basis Gram matrix is rank deficient.
class DegenerateBasisError : public Error {
public:
  using Error::Error;
};

/// A bracket left the span of the basis.
class NotSubalgebraError : public Error {
public:
  explicit NotSubalgebraError(const std::string& msg, double residual = 0.0)
      : Error(msg), residual_(residual) {}
  double residual() const { return residual_; }

private:
  double residual_;
};

/// Closure of an E_ij generating set forces elements outside the set.
class BlockCompletionError : public NotSubalgebraError {
public:
  BlockCompletionError(const std::string& msg,
                       std::vector<std::pair<int, int>> required)
      : NotSubalgebraError(msg), required_(std::move(required)) {}
  const std::vector<std::pair<int, int>>& required() const { return required_; }

private:
  std::vector<std::pair<int, int>> required_;
};

/// An operation that needs a Q-orthonormal basis got a non-identity Gram matrix.
class GramError : public Error {
public:
  using Error::Error;
};

/// Invalid numeric input (nonpositive metric coefficient, etc.).
class DomainError : public Error {
public:
  using Error::Error;
};

/// The requested basis cannot be adapted to the given decompositions.
class NotAdaptedError : public Error {
public:
  explicit NotAdaptedError(const std::string& msg, double obstruction = 0.0)
      : Error(msg), obstruction_(obstruction) {}
  /// Offending principal cosine (inner product witness), when meaningful.
  double obstruction() const { return obstruction_; }

private:
  double obstruction_;
};

class InvalidDiagramError : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

class OutOfDomainError : public Error {
public:
  using Error::Error;
};

} // namespace riccilab

#endif
