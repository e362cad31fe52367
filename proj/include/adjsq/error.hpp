#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace adjsq {

enum class ErrorKind {
  UnsupportedAlgebra,
  DimensionMismatch,
  NonDominantWeight,
  BadRange,
  BadParam,
  RepeatedEigenvalue,
  UnsupportedRealization,
  DegenerateForm,
  IncompleteSpectrum,
  ZeroVector,
  TooLarge,
  NotACharacter,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnsupportedAlgebra: return "UnsupportedAlgebra";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonDominantWeight: return "NonDominantWeight";
    case ErrorKind::BadRange: return "BadRange";
    case ErrorKind::BadParam: return "BadParam";
    case ErrorKind::RepeatedEigenvalue: return "RepeatedEigenvalue";
    case ErrorKind::UnsupportedRealization: return "UnsupportedRealization";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::IncompleteSpectrum: return "IncompleteSpectrum";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotACharacter: return "NotACharacter";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace adjsq
