#pragma once

#include <stdexcept>
#include <string>

namespace jumpbot {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A spec record is malformed or self-inconsistent (invalid-spec error).
class SpecError : public Error {
 public:
  using Error::Error;
};

/// An operation argument is outside its admissible domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested quantity cannot be realized by the given design
/// (e.g. per-cycle string take-up underflows, or a rate is asked of a
/// design that stalls).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Numerical integration left the finite range.
class IntegrationError : public Error {
 public:
  using Error::Error;
};

/// Config text could not be parsed; carries the offending line and field.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& what, int line, std::string field)
      : Error(what), line_(line), field_(std::move(field)) {}

  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

}  // namespace jumpbot
