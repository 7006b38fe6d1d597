#include "cobalex/error.hpp"

namespace cobalex {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NotSymplectic: return "NotSymplectic";
    case ErrorKind::NotLagrangian: return "NotLagrangian";
    case ErrorKind::ValidationFailure: return "ValidationFailure";
    case ErrorKind::PrimitivityViolated: return "PrimitivityViolated";
    case ErrorKind::DegreeAboveMiddle: return "DegreeAboveMiddle";
    case ErrorKind::GenusMismatch: return "GenusMismatch";
    case ErrorKind::TransversalityFailure: return "TransversalityFailure";
    case ErrorKind::ZeroDeterminant: return "ZeroDeterminant";
    case ErrorKind::RouteMismatch: return "RouteMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace cobalex
