#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qsuff {

enum class ErrorKind {
  NonSquare,
  NonHermitian,
  DimensionMismatch,
  DomainError,
  NotPositive,
  NotNormalized,
  BadRank,
  DegenerateSigma,
  SingularB,
  InfiniteTerm,
  RankDeficient,
  NotStrict,
  InconsistentDims,
  InvalidArgument,
  MalformedInput,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure in the library is reported through this type; kind() lets
// callers branch on the category without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::NonHermitian: return "NonHermitian";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::BadRank: return "BadRank";
    case ErrorKind::DegenerateSigma: return "DegenerateSigma";
    case ErrorKind::SingularB: return "SingularB";
    case ErrorKind::InfiniteTerm: return "InfiniteTerm";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NotStrict: return "NotStrict";
    case ErrorKind::InconsistentDims: return "InconsistentDims";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace qsuff
