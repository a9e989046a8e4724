#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gon {

// Failure categories surfaced by the library. The string codes are part of
// the CLI/JSON contract.
enum class ErrorKind {
  kDomain,
  kPrecisionExhausted,
  kPrecision,
  kDegenerateBasis,
  kDimension,
  kBudget,
  kHypothesis,
  kNotFound,
  kUnbounded,
  kNonConvex,
  kDegenerate,
  kInadmissible,
  kUnsupported,
  kParse,
};

constexpr std::string_view ErrorCode(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kPrecisionExhausted: return "precision-exhausted";
    case ErrorKind::kPrecision: return "precision";
    case ErrorKind::kDegenerateBasis: return "degenerate-basis";
    case ErrorKind::kDimension: return "dimension";
    case ErrorKind::kBudget: return "budget";
    case ErrorKind::kHypothesis: return "hypothesis";
    case ErrorKind::kNotFound: return "not-found";
    case ErrorKind::kUnbounded: return "unbounded";
    case ErrorKind::kNonConvex: return "non-convex";
    case ErrorKind::kDegenerate: return "degenerate";
    case ErrorKind::kInadmissible: return "inadmissible";
    case ErrorKind::kUnsupported: return "unsupported";
    case ErrorKind::kParse: return "parse";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(ErrorCode(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  std::string_view code() const { return ErrorCode(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace gon
