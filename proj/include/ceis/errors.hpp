#pragma once

#include <stdexcept>
#include <string>

namespace ceis {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a density, formula or parameter set.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Importance-sampling run in which no sample reached the rare set.
class DegenerateEstimate : public Error {
 public:
  using Error::Error;
};

/// Cross-entropy update with an empty elite set.
class DegenerateUpdate : public Error {
 public:
  using Error::Error;
};

/// Cross-entropy loop hit its iteration cap above the target level.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

class QuadratureNotConverged : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration text. `line` is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, std::string field)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line),
        field_(std::move(field)) {}

  int line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  int line_;
  std::string field_;
};

/// Well-formed configuration that violates an invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace ceis
