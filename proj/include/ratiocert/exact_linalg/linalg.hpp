#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ratiocert/exact_linalg/exact_matrix.hpp"
#include "ratiocert/exact_linalg/integer_matrix.hpp"

namespace ratiocert::linalg {

/// Reduced row-echelon form: `reduced` holds only the nonzero rows (rank x cols)
/// and `pivots[r]` is the pivot column of row r.
struct RowEchelon {
  ExactMatrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
  /// Non-pivot columns in increasing order.
  std::vector<std::size_t> free_columns() const;
};

/// Exact RREF over Q.
///
/// Computes the RREF modulo word-size primes, lifts it by rational reconstruction
/// (adding primes via CRT when needed), and accepts the lift only after an exact
/// check that every row of M is the combination of the lifted rows given by its
/// pivot entries. Since rank over GF(p) never exceeds rank over Q, a lift that
/// passes the check is the RREF over Q. Otherwise falls back to fraction-free
/// Gauss-Jordan elimination.
RowEchelon rref(const ExactMatrix& m);

/// Fraction-free Gauss-Jordan elimination with first-nonzero row pivoting.
RowEchelon rref_fraction_free(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

/// Rank by fraction-free Bareiss forward elimination, pivoting on the first nonzero entry.
std::size_t rank_bareiss(const ExactMatrix& m);

/// Canonical basis of the null space: one column per free column f of RREF(M),
/// in increasing order of f, with entry 1 at f, 0 at the other free columns and
/// the solved values at pivot columns.
ExactMatrix nullspace_basis(const ExactMatrix& m);

/// transpose(RREF(transpose(M))) with the zero columns dropped.
ExactMatrix reduced_column_echelon(const ExactMatrix& m);

/// cols(M) - rank(M - lambda*I). Throws Error(kDimension) for non-square input.
std::size_t integer_nullity(const ExactMatrix& m, const Integer& lambda);

/// Integers lambda in [-bound, bound], in decreasing order, that are roots of the
/// characteristic polynomial of the square matrix M modulo a large prime. Every
/// integer eigenvalue of M over Q is among them.
std::vector<std::int64_t> integer_eigenvalue_candidates(const ExactMatrix& m, std::int64_t bound);

/// Some h with M h = z, taking free variables as zero; nullopt if z is not in the column space.
std::optional<RationalVector> solve(const ExactMatrix& m, std::span<const Rational> z);

}  // namespace ratiocert::linalg
