#include "nullsl2/error.hpp"

namespace nullsl2 {

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IdenticallyZero:
      return "IdenticallyZero";
    case ErrorKind::TruncationTooShort:
      return "TruncationTooShort";
    case ErrorKind::DivisionByZeroFunction:
      return "DivisionByZeroFunction";
    case ErrorKind::EvaluationAtPole:
      return "EvaluationAtPole";
    case ErrorKind::ExpansionPointMismatch:
      return "ExpansionPointMismatch";
    case ErrorKind::EtaIdenticallyZero:
      return "EtaIdenticallyZero";
    case ErrorKind::DegenerateEta:
      return "DegenerateEta";
    case ErrorKind::NonExactField:
      return "NonExactField";
    case ErrorKind::ThirdCoordinateZero:
      return "ThirdCoordinateZero";
    case ErrorKind::FirstEntryZero:
      return "FirstEntryZero";
    case ErrorKind::InvalidMultiplicity:
      return "InvalidMultiplicity";
    case ErrorKind::SearchFailed:
      return "SearchFailed";
    case ErrorKind::PoleOnContour:
      return "PoleOnContour";
    case ErrorKind::DegenerateDenominator:
      return "DegenerateDenominator";
    case ErrorKind::GaussMapMismatch:
      return "GaussMapMismatch";
    case ErrorKind::HopfMismatch:
      return "HopfMismatch";
    case ErrorKind::NotAnEnd:
      return "NotAnEnd";
    case ErrorKind::UmbilicInput:
      return "UmbilicInput";
    case ErrorKind::HypothesisViolation:
      return "HypothesisViolation";
    case ErrorKind::NotUnimodular:
      return "NotUnimodular";
    case ErrorKind::NotHermitian:
      return "NotHermitian";
    case ErrorKind::CrossCheckFailed:
      return "CrossCheckFailed";
    case ErrorKind::SingularJacobian:
      return "SingularJacobian";
    case ErrorKind::MaxIterExceeded:
      return "MaxIterExceeded";
    case ErrorKind::PoleOnGrid:
      return "PoleOnGrid";
    case ErrorKind::ParseError:
      return "ParseError";
    case ErrorKind::ValidationFailed:
      return "ValidationFailed";
    case ErrorKind::InvalidArgument:
      return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace nullsl2
