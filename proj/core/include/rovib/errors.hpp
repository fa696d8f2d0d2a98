#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rovib {

/// Base class of every exception thrown by rovib.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied a value outside an operation's precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Malformed registry/config text. Carries the 1-based line and the field.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// Evaluation hit a pole; `location` is the offending argument.
class PoleError : public Error {
 public:
  PoleError(double location, const std::string& message);

  double location() const noexcept { return location_; }

 private:
  double location_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class DegenerateGeometryError : public Error {
 public:
  using Error::Error;
};

/// Nikiforov-Uvarov constants admit no real bound state.
class InadmissibleError : public Error {
 public:
  using Error::Error;
};

class InvalidStateError : public Error {
 public:
  using Error::Error;
};

/// The requested level has no real bound-state solution.
class NoBoundStateError : public Error {
 public:
  using Error::Error;
};

class OutOfSpectrumError : public Error {
 public:
  using Error::Error;
};

/// Finite-difference eigenvalues did not converge under grid refinement.
class ResolutionError : public Error {
 public:
  ResolutionError(std::size_t suggested_points, const std::string& message);

  std::size_t suggested_points() const noexcept { return suggested_points_; }

 private:
  std::size_t suggested_points_;
};

class AlignmentError : public Error {
 public:
  using Error::Error;
};

}  // namespace rovib
