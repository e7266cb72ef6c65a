#pragma once

#include <cstddef>
#include <vector>

#include "ratiocert/exact_linalg/integer.hpp"

namespace ratiocert {

/// Dense row-major matrix of Integers. The workhorse behind ExactMatrix products
/// and the elimination kernels; rational matrices are scaled into this form.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::vector<Integer>& data() noexcept { return data_; }
  const std::vector<Integer>& data() const noexcept { return data_; }

  void swap_rows(std::size_t a, std::size_t b);
  /// Largest bit length over all entries.
  std::size_t max_bits() const noexcept;
  IntegerMatrix transpose() const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Product with an int64 / int128 accumulation fast path chosen from entry bit sizes.
IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);

}  // namespace ratiocert
