#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace idemgraph {

enum class ErrorKind {
  NonPrimeP,
  ReducibleModulus,
  DegreeMismatch,
  MalformedModulus,
  FieldTooLarge,
  FieldMismatch,
  DivisionByZero,
  NotIdempotent,
  TrivialIdempotent,
  CapExceeded,
  Disconnected,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrimeP: return "NonPrimeP";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::MalformedModulus: return "MalformedModulus";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::TrivialIdempotent: return "TrivialIdempotent";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::Disconnected: return "Disconnected";
  }
  return "Unknown";
}

/// Every recoverable failure in the library is reported as an Error carrying
/// a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace idemgraph
