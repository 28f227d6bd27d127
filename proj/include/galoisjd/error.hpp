#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace galoisjd {

enum class ErrorCode {
  NotPrime,
  DegenerateSize,
  NotIrreducible,
  NonCoprimePower,
  ZeroElement,
  NonIntegralDegree,
  NonCoprime,
  DimensionMismatch,
  NotRational,
  MergeDetected,
  InvalidLabel,
  UnsupportedFamily,
  EvenCharSOodd,
  NoMatchingRow,
  OrderMismatch,
  SizeGuard,
  ParseError,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DegenerateSize: return "DegenerateSize";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NonCoprimePower: return "NonCoprimePower";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NonIntegralDegree: return "NonIntegralDegree";
    case ErrorCode::NonCoprime: return "NonCoprime";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotRational: return "NotRational";
    case ErrorCode::MergeDetected: return "MergeDetected";
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::EvenCharSOodd: return "EvenCharSOodd";
    case ErrorCode::NoMatchingRow: return "NoMatchingRow";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::SizeGuard: return "SizeGuard";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Selects between the serial reference path and the OpenMP path of a kernel.
/// Both paths must produce identical results; the serial one is what tests
/// treat as ground truth.
enum class Exec { Serial, Parallel };

}  // namespace galoisjd
