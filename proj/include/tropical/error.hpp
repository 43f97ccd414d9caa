#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropical {

enum class ErrorKind {
  IllegalElement,
  AlgebraMismatch,
  NoInverse,
  ClosureUndefined,
  DimensionMismatch,
  NoSolution,
  InvalidGraph,
  NoPath,
  IndexOutOfRange,
  UnsupportedDegree,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::IllegalElement: return "illegal element";
    case ErrorKind::AlgebraMismatch: return "algebra mismatch";
    case ErrorKind::NoInverse: return "no inverse";
    case ErrorKind::ClosureUndefined: return "closure undefined";
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::NoSolution: return "no solution";
    case ErrorKind::InvalidGraph: return "invalid graph";
    case ErrorKind::NoPath: return "no path";
    case ErrorKind::IndexOutOfRange: return "index out of range";
    case ErrorKind::UnsupportedDegree: return "unsupported degree";
  }
  return "error";
}

/// Error raised by the algebra, solver and LP layers. The kind is stable and
/// tests match on it; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tropical
