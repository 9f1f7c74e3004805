#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ldic {

enum class Errc {
  NonPrimePower,
  ReduciblePoly,
  DivisionByZero,
  DimensionMismatch,
  DependentInput,
  ParseError,
  SelfSideInfo,
  IndexOutOfRange,
  EmptySet,
  MissingCoeffs,
  InvalidInput,
  MixedFields,
  MixedGraphs,
  NotCyclic,
  BadColoring,
  InfeasibleDegrees,
  InfeasibleLocalities,
  NotAcyclic,
  BadCover,
  CycleTooShort,
  NoFittingMatrix,
  RadiusExceeded,
  NoFeasiblePartition,
  BudgetExceeded,
  TooLarge,
  UnknownFormula,
  Undecodable,
};

constexpr std::string_view errc_name(Errc e) noexcept {
  switch (e) {
    case Errc::NonPrimePower: return "NonPrimePower";
    case Errc::ReduciblePoly: return "ReduciblePoly";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DependentInput: return "DependentInput";
    case Errc::ParseError: return "ParseError";
    case Errc::SelfSideInfo: return "SelfSideInfo";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::EmptySet: return "EmptySet";
    case Errc::MissingCoeffs: return "MissingCoeffs";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::MixedFields: return "MixedFields";
    case Errc::MixedGraphs: return "MixedGraphs";
    case Errc::NotCyclic: return "NotCyclic";
    case Errc::BadColoring: return "BadColoring";
    case Errc::InfeasibleDegrees: return "InfeasibleDegrees";
    case Errc::InfeasibleLocalities: return "InfeasibleLocalities";
    case Errc::NotAcyclic: return "NotAcyclic";
    case Errc::BadCover: return "BadCover";
    case Errc::CycleTooShort: return "CycleTooShort";
    case Errc::NoFittingMatrix: return "NoFittingMatrix";
    case Errc::RadiusExceeded: return "RadiusExceeded";
    case Errc::NoFeasiblePartition: return "NoFeasiblePartition";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::TooLarge: return "TooLarge";
    case Errc::UnknownFormula: return "UnknownFormula";
    case Errc::Undecodable: return "Undecodable";
  }
  return "Unknown";
}

/// Every failure raised by the library. `code()` identifies the condition;
/// the message carries the detail.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

/// Raised by enumerating oracles that hit their work budget. Carries the best
/// value found so far (an upper bound for minimisation problems).
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::int64_t partial)
      : Error(Errc::BudgetExceeded, what), partial_(partial) {}

  std::int64_t partial() const noexcept { return partial_; }

 private:
  std::int64_t partial_;
};

}  // namespace ldic
