#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fum {

enum class ErrorKind {
  IndexOutOfRange,
  SelfLoop,
  DuplicateNeighbor,
  AsymmetricRotation,
  NonPlanarEmbedding,
  InvalidPlacement,
  NotACycleBoundary,
  NotASeparator,
  PartialColoring,
  PrecoloringMismatch,
  InvalidPrecoloring,
  HypothesisViolated,
  InternalCaseExhaustion,
  ChildContractFailure,
  BadHeader,
  TruncatedGraph,
  UnrepresentableInFormat,
  ParseError,
};

constexpr std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateNeighbor: return "DuplicateNeighbor";
    case ErrorKind::AsymmetricRotation: return "AsymmetricRotation";
    case ErrorKind::NonPlanarEmbedding: return "NonPlanarEmbedding";
    case ErrorKind::InvalidPlacement: return "InvalidPlacement";
    case ErrorKind::NotACycleBoundary: return "NotACycleBoundary";
    case ErrorKind::NotASeparator: return "NotASeparator";
    case ErrorKind::PartialColoring: return "PartialColoring";
    case ErrorKind::PrecoloringMismatch: return "PrecoloringMismatch";
    case ErrorKind::InvalidPrecoloring: return "InvalidPrecoloring";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::InternalCaseExhaustion: return "InternalCaseExhaustion";
    case ErrorKind::ChildContractFailure: return "ChildContractFailure";
    case ErrorKind::BadHeader: return "BadHeader";
    case ErrorKind::TruncatedGraph: return "TruncatedGraph";
    case ErrorKind::UnrepresentableInFormat: return "UnrepresentableInFormat";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every recoverable failure in the library is reported through this type.
/// `detail()` carries an optional payload, e.g. the serialized subproblem
/// dumped when the constructive algorithm runs out of cases.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string detail = {})
      : std::runtime_error(std::string(kind_name(kind)) + ": " + message),
        kind_(kind),
        detail_(std::move(detail)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace fum
