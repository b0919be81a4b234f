#pragma once

#include <stdexcept>
#include <string>

namespace stoc {

// Argument outside the physical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Quantity requested in a beam mode where it is undefined (e.g. detection
// efficiency of an unnormalizable pure Bessel beam).
class ModeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Invalid run or sweep configuration. `field()` names the offending key.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::invalid_argument(what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Adaptive quadrature gave up before reaching the requested tolerance.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved_error_(achieved_error) {}
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

}  // namespace stoc
