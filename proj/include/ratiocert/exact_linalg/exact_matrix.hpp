#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "ratiocert/exact_linalg/integer_matrix.hpp"
#include "ratiocert/exact_linalg/rational.hpp"

namespace ratiocert {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  /// Throws Error(kDimension) unless entries.size() == rows * cols.
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  ExactMatrix(std::initializer_list<std::initializer_list<long>> rows);
  explicit ExactMatrix(const IntegerMatrix& m);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix ones(std::size_t rows, std::size_t cols);
  static ExactMatrix column(std::span<const Rational> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_zero() const noexcept;
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const std::vector<Rational>& entries() const noexcept { return entries_; }
  std::span<const Rational> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
  RationalVector column_vector(std::size_t j) const;

  ExactMatrix transpose() const;
  ExactMatrix select_rows(std::span<const std::size_t> indices) const;
  ExactMatrix select_cols(std::span<const std::size_t> indices) const;
  /// [this | other]
  ExactMatrix hconcat(const ExactMatrix& other) const;
  /// [this ; other]
  ExactMatrix vconcat(const ExactMatrix& other) const;

  /// Scales each row by the lcm of its denominators. Row spaces and null spaces are unchanged.
  IntegerMatrix row_scaled_integers() const;
  /// Scales each column by the lcm of its denominators. Column spaces are unchanged.
  IntegerMatrix col_scaled_integers() const;
  /// (integer matrix D*M, D) with D the lcm of all denominators.
  std::pair<IntegerMatrix, Integer> common_denominator_form() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const Rational& s, const ExactMatrix& m);
  friend RationalVector operator*(const ExactMatrix& m, std::span<const Rational> v);
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m);

}  // namespace ratiocert
