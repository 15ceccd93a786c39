#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace iet {

enum class ErrorKind {
  PrecisionExhausted,
  BasisMismatch,
  InvalidInput,
  Reducible,
  NonPositiveLength,
  LengthSumMismatch,
  OutOfDomain,
  SampleOnEndpoint,
  HypothesisNotMet,
  BudgetExhausted,
  EmptyInterval,
  ConnectionTooShort,
  NotSymmetric,
  ConnectionIntersectsJ,
  NotApplicable,
  OddHeight,
  MassMismatch,
  CertificationFailed,
  InConnection,
  NotAntisymmetric,
  NoFreeCenter,
  CheckFailed,
  IoError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::BasisMismatch: return "BasisMismatch";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::NonPositiveLength: return "NonPositiveLength";
    case ErrorKind::LengthSumMismatch: return "LengthSumMismatch";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::SampleOnEndpoint: return "SampleOnEndpoint";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::EmptyInterval: return "EmptyInterval";
    case ErrorKind::ConnectionTooShort: return "ConnectionTooShort";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::ConnectionIntersectsJ: return "ConnectionIntersectsJ";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::OddHeight: return "OddHeight";
    case ErrorKind::MassMismatch: return "MassMismatch";
    case ErrorKind::CertificationFailed: return "CertificationFailed";
    case ErrorKind::InConnection: return "InConnection";
    case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::NoFreeCenter: return "NoFreeCenter";
    case ErrorKind::CheckFailed: return "CheckFailed";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace iet
