#include "ratiocert/exact_linalg/exact_matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "ratiocert/errors.hpp"

namespace ratiocert {
namespace {

void require_same_shape(const ExactMatrix& a, const ExactMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::kDimension, std::string("shape mismatch in ") + op);
  }
}

// Per-row denominators lcm and the scaled integer rows.
std::pair<IntegerMatrix, std::vector<Integer>> scale_rows(const ExactMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  std::vector<Integer> dens(m.rows(), Integer(1));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer d(1);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& den = m(i, j).den();
      if (!den.is_one()) d = lcm(d, den);
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& e = m(i, j);
      out(i, j) = d.is_one() ? e.num() : divexact(d, e.den()) * e.num();
    }
    dens[i] = std::move(d);
  }
  return {std::move(out), std::move(dens)};
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw Error(ErrorKind::kDimension, "entry count " + std::to_string(entries_.size()) + " != " +
                                           std::to_string(rows) + "x" + std::to_string(cols));
  }
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::kDimension, "ragged matrix literal");
    for (long v : r) entries_.emplace_back(v);
  }
}

ExactMatrix::ExactMatrix(const IntegerMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& v : m.data()) entries_.emplace_back(v);
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

ExactMatrix ExactMatrix::ones(std::size_t rows, std::size_t cols) {
  return ExactMatrix(rows, cols, std::vector<Rational>(rows * cols, Rational(1)));
}

ExactMatrix ExactMatrix::column(std::span<const Rational> v) {
  return ExactMatrix(v.size(), 1, std::vector<Rational>(v.begin(), v.end()));
}

bool ExactMatrix::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r.is_zero(); });
}

RationalVector ExactMatrix::column_vector(std::size_t j) const {
  RationalVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ExactMatrix ExactMatrix::select_rows(std::span<const std::size_t> indices) const {
  ExactMatrix out(indices.size(), cols_);
  for (std::size_t r = 0; r < indices.size(); ++r) {
    if (indices[r] >= rows_) throw Error(ErrorKind::kDimension, "row index out of range");
    std::copy_n(entries_.begin() + static_cast<std::ptrdiff_t>(indices[r] * cols_), cols_,
                out.entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
  }
  return out;
}

ExactMatrix ExactMatrix::select_cols(std::span<const std::size_t> indices) const {
  ExactMatrix out(rows_, indices.size());
  for (std::size_t c = 0; c < indices.size(); ++c) {
    if (indices[c] >= cols_) throw Error(ErrorKind::kDimension, "column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) out(i, c) = (*this)(i, indices[c]);
  }
  return out;
}

ExactMatrix ExactMatrix::hconcat(const ExactMatrix& other) const {
  if (other.rows_ != rows_) throw Error(ErrorKind::kDimension, "hconcat row mismatch");
  ExactMatrix out(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) out(i, cols_ + j) = other(i, j);
  }
  return out;
}

ExactMatrix ExactMatrix::vconcat(const ExactMatrix& other) const {
  if (other.cols_ != cols_) throw Error(ErrorKind::kDimension, "vconcat column mismatch");
  ExactMatrix out(rows_ + other.rows_, cols_);
  std::copy(entries_.begin(), entries_.end(), out.entries_.begin());
  std::copy(other.entries_.begin(), other.entries_.end(),
            out.entries_.begin() + static_cast<std::ptrdiff_t>(entries_.size()));
  return out;
}

IntegerMatrix ExactMatrix::row_scaled_integers() const { return scale_rows(*this).first; }

IntegerMatrix ExactMatrix::col_scaled_integers() const { return scale_rows(transpose()).first.transpose(); }

std::pair<IntegerMatrix, Integer> ExactMatrix::common_denominator_form() const {
  Integer d(1);
  for (const auto& e : entries_)
    if (!e.den().is_one()) d = lcm(d, e.den());
  IntegerMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const Rational& e = entries_[k];
    out.data()[k] = d.is_one() ? e.num() : divexact(d, e.den()) * e.num();
  }
  return {std::move(out), std::move(d)};
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  require_same_shape(*this, o, "addition");
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (!o.entries_[k].is_zero()) entries_[k] += o.entries_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  require_same_shape(*this, o, "subtraction");
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (!o.entries_[k].is_zero()) entries_[k] -= o.entries_[k];
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::kDimension, "dimension mismatch in matrix product");
  auto [ai, arow] = scale_rows(a);
  auto [bti, bcol] = scale_rows(b.transpose());
  IntegerMatrix p = multiply(ai, bti.transpose());
  ExactMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < out.rows_; ++i) {
    for (std::size_t j = 0; j < out.cols_; ++j) {
      Integer& v = p(i, j);
      if (v.is_zero()) continue;
      if (arow[i].is_one() && bcol[j].is_one()) {
        out(i, j) = Rational(std::move(v));
      } else {
        out(i, j) = Rational(std::move(v), arow[i] * bcol[j]);
      }
    }
  }
  return out;
}

ExactMatrix operator*(const Rational& s, const ExactMatrix& m) {
  ExactMatrix out = m;
  for (auto& e : out.entries_)
    if (!e.is_zero()) e *= s;
  return out;
}

RationalVector operator*(const ExactMatrix& m, std::span<const Rational> v) {
  if (m.cols_ != v.size()) throw Error(ErrorKind::kDimension, "dimension mismatch in matrix-vector product");
  ExactMatrix col = ExactMatrix::column(v);
  ExactMatrix p = m * col;
  return p.column_vector(0);
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::kDimension, "dimension mismatch in dot product");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os;
}

}  // namespace ratiocert
