#include "starhankel/error.hpp"

namespace starhankel {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByNonUnit:
      return "DivisionByNonUnit";
    case ErrorKind::NonUnitConstant:
      return "NonUnitConstant";
    case ErrorKind::InvalidAtoms:
      return "InvalidAtoms";
    case ErrorKind::InvalidLemmaPoint:
      return "InvalidLemmaPoint";
    case ErrorKind::DegenerateP1:
      return "DegenerateP1";
    case ErrorKind::InadmissibleMoments:
      return "InadmissibleMoments";
    case ErrorKind::InvalidRadius:
      return "InvalidRadius";
    case ErrorKind::InsufficientCoefficients:
      return "InsufficientCoefficients";
    case ErrorKind::UnsupportedOrder:
      return "UnsupportedOrder";
    case ErrorKind::DomainError:
      return "DomainError";
  }
  return "Unknown";
}

}  // namespace starhankel
