#pragma once

#include <stdexcept>
#include <string>

namespace ratiocert {

enum class ErrorKind {
  kDimension,
  kNonIntegralSpectrum,
  kNotRegular,
  kBudgetExceeded,
  kAxiomViolation,
  kUnsupportedField,
  kConstructionFailed,
  kNotTight,
  kRankTooLarge,
  kInvalidSpectrum,
  kEmptySet,
  kOddOrder,
  kParse,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so the CLI can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::size_t row, std::size_t col, const std::string& what)
      : Error(ErrorKind::kAxiomViolation, what), axiom_(std::move(axiom)), row_(row), col_(col) {}
  const std::string& axiom() const noexcept { return axiom_; }
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::string axiom_;
  std::size_t row_;
  std::size_t col_;
};

}  // namespace ratiocert
