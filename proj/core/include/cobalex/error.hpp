#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cobalex {

enum class ErrorKind {
  InvalidInput,
  OutOfRange,
  DimensionMismatch,
  NotDivisible,
  NotSymmetrizable,
  RankDeficient,
  NotSymplectic,
  NotLagrangian,
  ValidationFailure,
  PrimitivityViolated,
  DegreeAboveMiddle,
  GenusMismatch,
  TransversalityFailure,
  ZeroDeterminant,
  RouteMismatch,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cobalex
