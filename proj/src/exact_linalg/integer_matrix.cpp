#include "ratiocert/exact_linalg/integer_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ratiocert {

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
}

std::size_t IntegerMatrix::max_bits() const noexcept {
  std::size_t bits = 0;
  for (const auto& v : data_) bits = std::max(bits, v.bit_length());
  return bits;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in integer matrix product");
  const std::size_t n = a.rows(), m = b.cols(), inner = a.cols();
  IntegerMatrix c(n, m);
  if (n == 0 || m == 0 || inner == 0) return c;

  const std::size_t inner_bits = std::bit_width(inner);
  const std::size_t bound_bits = a.max_bits() + b.max_bits() + inner_bits;

  if (bound_bits <= 62) {
    std::vector<std::int64_t> av(n * inner), bt(m * inner);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < inner; ++k) av[i * inner + k] = a(i, k).small_value();
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < m; ++j) bt[j * inner + k] = b(k, j).small_value();
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t* ar = &av[i * inner];
      for (std::size_t j = 0; j < m; ++j) {
        const std::int64_t* br = &bt[j * inner];
        std::int64_t s = 0;
        for (std::size_t k = 0; k < inner; ++k) s += ar[k] * br[k];
        c(i, j) = Integer(s);
      }
    }
    return c;
  }
  if (bound_bits <= 126 && a.max_bits() <= 63 && b.max_bits() <= 63) {
    std::vector<std::int64_t> av(n * inner), bt(m * inner);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < inner; ++k) av[i * inner + k] = a(i, k).small_value();
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < m; ++j) bt[j * inner + k] = b(k, j).small_value();
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t* ar = &av[i * inner];
      for (std::size_t j = 0; j < m; ++j) {
        const std::int64_t* br = &bt[j * inner];
        __int128 s = 0;
        for (std::size_t k = 0; k < inner; ++k) s += static_cast<__int128>(ar[k]) * br[k];
        c(i, j) = Integer::from_int128(s);
      }
    }
    return c;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Integer s;
      for (std::size_t k = 0; k < inner; ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        s += a(i, k) * b(k, j);
      }
      c(i, j) = std::move(s);
    }
  }
  return c;
}

}  // namespace ratiocert
