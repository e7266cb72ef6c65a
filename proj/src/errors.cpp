#include "ratiocert/errors.hpp"

namespace ratiocert {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kDimension: return "DimensionError";
    case ErrorKind::kNonIntegralSpectrum: return "NonIntegralSpectrum";
    case ErrorKind::kNotRegular: return "NotRegular";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kAxiomViolation: return "AxiomViolation";
    case ErrorKind::kUnsupportedField: return "UnsupportedField";
    case ErrorKind::kConstructionFailed: return "ConstructionFailed";
    case ErrorKind::kNotTight: return "NotTight";
    case ErrorKind::kRankTooLarge: return "RankTooLarge";
    case ErrorKind::kInvalidSpectrum: return "InvalidSpectrum";
    case ErrorKind::kEmptySet: return "EmptySet";
    case ErrorKind::kOddOrder: return "OddOrder";
    case ErrorKind::kParse: return "ParseError";
  }
  return "Error";
}

}  // namespace ratiocert
