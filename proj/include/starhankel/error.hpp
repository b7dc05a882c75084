#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace starhankel {

enum class ErrorKind {
  DivisionByNonUnit,
  NonUnitConstant,
  InvalidAtoms,
  InvalidLemmaPoint,
  DegenerateP1,
  InadmissibleMoments,
  InvalidRadius,
  InsufficientCoefficients,
  UnsupportedOrder,
  DomainError,
};

std::string_view to_string(ErrorKind kind);

/// Raised by every library operation whose preconditions fail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace starhankel
