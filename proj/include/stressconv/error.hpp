#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stressconv {

/// Failure categories. The CLI maps these onto exit codes.
enum class ErrorKind {
  Parse,         ///< malformed edge-list or JSON input
  Validation,    ///< well-formed input that violates a graph invariant
  OutOfRange,    ///< vertex id or label that does not exist
  Disconnected,  ///< operation defined only on connected graphs / pairs
  NotConvex,
  NotBipartite,
  NotSplit,
  NotBlock,
  CapExceeded,   ///< brute-force solver refused an instance above its size cap
  InvalidArgument,
  Io,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "PARSE_ERROR";
    case ErrorKind::Validation: return "VALIDATION_ERROR";
    case ErrorKind::OutOfRange: return "OUT_OF_RANGE";
    case ErrorKind::Disconnected: return "SN_UNDEFINED_DISCONNECTED";
    case ErrorKind::NotConvex: return "NOT_S_CONVEX";
    case ErrorKind::NotBipartite: return "NOT_BIPARTITE";
    case ErrorKind::NotSplit: return "NOT_SPLIT";
    case ErrorKind::NotBlock: return "NOT_BLOCK_GRAPH";
    case ErrorKind::CapExceeded: return "CAP_EXCEEDED";
    case ErrorKind::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorKind::Io: return "IO_ERROR";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Thrown by the edge-list parser; carries the 1-based offending line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace stressconv
