#ifndef NULLSL2_ERROR_HPP
#define NULLSL2_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace nullsl2 {

enum class ErrorKind {
  IdenticallyZero,
  TruncationTooShort,
  DivisionByZeroFunction,
  EvaluationAtPole,
  ExpansionPointMismatch,
  EtaIdenticallyZero,
  DegenerateEta,
  NonExactField,
  ThirdCoordinateZero,
  FirstEntryZero,
  InvalidMultiplicity,
  SearchFailed,
  PoleOnContour,
  DegenerateDenominator,
  GaussMapMismatch,
  HopfMismatch,
  NotAnEnd,
  UmbilicInput,
  HypothesisViolation,
  NotUnimodular,
  NotHermitian,
  CrossCheckFailed,
  SingularJacobian,
  MaxIterExceeded,
  PoleOnGrid,
  ParseError,
  ValidationFailed,
  InvalidArgument,
};

std::string_view kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nullsl2

#endif  // NULLSL2_ERROR_HPP
