#include "ratiocert/exact_linalg/linalg.hpp"

#include <algorithm>

#include "ratiocert/errors.hpp"
#include "ratiocert/exact_linalg/modular.hpp"

namespace ratiocert::linalg {
namespace {

constexpr std::size_t kMaxPrimes = 8;

// Row-scaled integer form with each row divided by its content.
IntegerMatrix primitive_rows(const ExactMatrix& m) {
  IntegerMatrix a = m.row_scaled_integers();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer g;
    for (std::size_t j = 0; j < a.cols() && !g.is_one(); ++j)
      if (!a(i, j).is_zero()) g = gcd(g, a(i, j));
    if (g.is_zero() || g.is_one()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) a(i, j) = divexact(a(i, j), g);
  }
  return a;
}

// Exact check that a = a[:, pivots] * r, with r a candidate RREF.
bool verify_rref(const IntegerMatrix& a, const ExactMatrix& r, const std::vector<std::size_t>& pivots) {
  auto [r_int, denom] = r.common_denominator_form();
  IntegerMatrix a_piv(a.rows(), pivots.size());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < pivots.size(); ++k) a_piv(i, k) = a(i, pivots[k]);
  IntegerMatrix prod = multiply(a_piv, r_int);
  for (std::size_t k = 0; k < prod.data().size(); ++k) {
    const Integer& lhs = prod.data()[k];
    const Integer& base = a.data()[k];
    if (denom.is_one() ? !(lhs == base) : !(lhs == base * denom)) return false;
  }
  return true;
}

std::optional<RowEchelon> certified_modular_rref(const IntegerMatrix& a) {
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivots;
  std::vector<Integer> residues;
  Integer modulus;
  bool started = false;

  for (std::size_t idx = 0; idx < kMaxPrimes; ++idx) {
    modular::Modulus mod(modular::working_prime(idx));
    modular::ModularEchelon e = modular::rref_mod(a, mod);
    const Integer p(mod.prime());
    if (!started || e.pivots.size() > pivots.size()) {
      // A prime that finds more pivots proves the earlier ones were unlucky.
      pivots = e.pivots;
      residues.assign(e.reduced.begin(), e.reduced.end());
      modulus = p;
      started = true;
    } else if (e.pivots != pivots) {
      continue;
    } else {
      // CRT: x = r + M * ((s - r) * M^{-1} mod p)
      const std::uint64_t m_inv = mod.inv(modulus.mod_u64(mod.prime()));
      for (std::size_t k = 0; k < residues.size(); ++k) {
        std::uint64_t r_mod = residues[k].mod_u64(mod.prime());
        std::uint64_t t = mod.mul(mod.sub(e.reduced[k], r_mod), m_inv);
        residues[k] = residues[k] + modulus * Integer(t);
      }
      modulus = modulus * p;
    }

    const std::size_t rank = pivots.size();
    ExactMatrix r(rank, cols);
    bool ok = true;
    for (std::size_t row = 0; row < rank && ok; ++row) {
      for (std::size_t j = pivots[row]; j < cols; ++j) {
        const Integer& res = residues[row * cols + j];
        if (res.is_zero()) continue;
        if (j == pivots[row]) {
          r(row, j) = Rational(1);
          continue;
        }
        auto q = modular::reconstruct(res, modulus);
        if (!q) {
          ok = false;
          break;
        }
        r(row, j) = std::move(*q);
      }
    }
    if (ok && verify_rref(a, r, pivots)) return RowEchelon{std::move(r), std::move(pivots)};
  }
  return std::nullopt;
}

RowEchelon fraction_free_gauss_jordan(IntegerMatrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  Integer prev(1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    a.swap_rows(piv, rank);
    const Integer p = a(rank, c);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank) continue;
      const Integer f = a(i, c);
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == c) continue;
        a(i, j) = Integer::cross_divexact(a(i, j), p, f, a(rank, j), prev);
      }
      a(i, c) = Integer(0);
    }
    prev = p;
    pivots.push_back(c);
    ++rank;
  }
  // Every pivot entry now equals the last pivot; dividing by it gives the RREF.
  ExactMatrix r(rank, cols);
  for (std::size_t row = 0; row < rank; ++row)
    for (std::size_t j = 0; j < cols; ++j)
      if (!a(row, j).is_zero()) r(row, j) = Rational(a(row, j), prev);
  return RowEchelon{std::move(r), std::move(pivots)};
}

}  // namespace

std::vector<std::size_t> RowEchelon::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t j = 0; j < reduced.cols(); ++j) {
    if (k < pivots.size() && pivots[k] == j) {
      ++k;
    } else {
      out.push_back(j);
    }
  }
  return out;
}

RowEchelon rref(const ExactMatrix& m) {
  IntegerMatrix a = primitive_rows(m);
  if (auto r = certified_modular_rref(a)) return std::move(*r);
  return fraction_free_gauss_jordan(std::move(a));
}

RowEchelon rref_fraction_free(const ExactMatrix& m) { return fraction_free_gauss_jordan(primitive_rows(m)); }

std::size_t rank(const ExactMatrix& m) {
  const std::size_t full = std::min(m.rows(), m.cols());
  if (full == 0) return 0;
  // Rank over GF(p) is a lower bound for rank over Q, so a full modular rank is final.
  auto r = modular::rank_mod(m, modular::Modulus(modular::working_prime(0)));
  if (r && *r == full) return full;
  return rref(m).rank();
}

std::size_t rank_bareiss(const ExactMatrix& m) {
  IntegerMatrix a = primitive_rows(m);
  const std::size_t rows = a.rows(), cols = a.cols();
  Integer prev(1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    a.swap_rows(piv, rank);
    const Integer p = a(rank, c);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const Integer f = a(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) a(i, j) = Integer::cross_divexact(a(i, j), p, f, a(rank, j), prev);
      a(i, c) = Integer(0);
    }
    prev = p;
    ++rank;
  }
  return rank;
}

ExactMatrix nullspace_basis(const ExactMatrix& m) {
  RowEchelon e = rref(m);
  const auto free = e.free_columns();
  ExactMatrix n(m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    n(free[k], k) = Rational(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      const Rational& v = e.reduced(r, free[k]);
      if (!v.is_zero()) n(e.pivots[r], k) = -v;
    }
  }
  return n;
}

ExactMatrix reduced_column_echelon(const ExactMatrix& m) { return rref(m.transpose()).reduced.transpose(); }

std::size_t integer_nullity(const ExactMatrix& m, const Integer& lambda) {
  if (!m.is_square()) {
    throw Error(ErrorKind::kDimension, "integer_nullity needs a square matrix, got " + std::to_string(m.rows()) + "x" +
                                           std::to_string(m.cols()));
  }
  ExactMatrix shifted = m;
  if (!lambda.is_zero()) {
    for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= Rational(lambda);
  }
  return m.cols() - rank(shifted);
}

std::vector<std::int64_t> integer_eigenvalue_candidates(const ExactMatrix& m, std::int64_t bound) {
  if (!m.is_square()) throw Error(ErrorKind::kDimension, "eigenvalue candidates need a square matrix");
  for (std::size_t attempt = 0; attempt < kMaxPrimes; ++attempt) {
    const modular::Modulus mod(modular::working_prime(attempt));
    IntegerMatrix residues(m.rows(), m.cols());
    bool ok = true;
    for (std::size_t i = 0; i < m.rows() && ok; ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        auto r = mod.reduce(m(i, j));
        if (!r) {
          ok = false;
          break;
        }
        residues(i, j) = Integer(*r);
      }
    }
    if (!ok) continue;
    const auto chi = modular::charpoly_mod(residues, mod);
    std::vector<std::int64_t> out;
    for (std::int64_t lambda = bound; lambda >= -bound; --lambda) {
      const std::uint64_t root =
          lambda >= 0 ? static_cast<std::uint64_t>(lambda) : mod.neg(static_cast<std::uint64_t>(-lambda));
      if (modular::root_multiplicity(chi, root, mod) > 0) out.push_back(lambda);
    }
    return out;
  }
  std::vector<std::int64_t> all;
  for (std::int64_t lambda = bound; lambda >= -bound; --lambda) all.push_back(lambda);
  return all;
}

std::optional<RationalVector> solve(const ExactMatrix& m, std::span<const Rational> z) {
  if (z.size() != m.rows()) throw Error(ErrorKind::kDimension, "right-hand side length mismatch");
  RowEchelon e = rref(m.hconcat(ExactMatrix::column(z)));
  const std::size_t last = m.cols();
  if (!e.pivots.empty() && e.pivots.back() == last) return std::nullopt;
  RationalVector h(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) h[e.pivots[r]] = e.reduced(r, last);
  return h;
}

}  // namespace ratiocert::linalg
