#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ratiocert/exact_linalg/exact_matrix.hpp"
#include "ratiocert/graph_core/bitset.hpp"
#include "ratiocert/graph_core/graph.hpp"

namespace ratiocert {

/// A validated symmetric association scheme with classes A_0 = I, A_1, ..., A_d.
/// Only verify_axioms creates one.
class AssociationScheme {
 public:
  std::size_t vertex_count() const noexcept { return v_; }
  /// Number of non-identity classes d.
  std::size_t class_count() const noexcept { return valencies_.size() - 1; }
  const std::vector<ExactMatrix>& classes() const noexcept { return classes_; }
  const ExactMatrix& matrix(std::size_t i) const { return classes_[i]; }
  const std::vector<std::size_t>& valencies() const noexcept { return valencies_; }
  /// Index i of the class with A_i(x, y) = 1.
  std::size_t relation(std::size_t x, std::size_t y) const { return relation_[x * v_ + y]; }
  /// Neighbourhood of x in class i.
  const Bitset& class_row(std::size_t i, std::size_t x) const { return rows_[i][x]; }
  /// p_{ij}^k: A_i A_j = sum_k p_{ij}^k A_k.
  std::int64_t intersection_number(std::size_t i, std::size_t j, std::size_t k) const {
    const std::size_t n = valencies_.size();
    return intersection_[(i * n + j) * n + k];
  }
  /// Class i as a graph on the given labels.
  Graph class_graph(std::size_t i, std::vector<std::string> labels) const;

  /// Coefficient vector (x^T A_i x)_i for an arbitrary rational vector.
  std::vector<Rational> quadratic_forms(std::span<const Rational> x) const;
  /// sum_i c_i A_i.
  ExactMatrix combination(std::span<const Rational> coefficients) const;
  /// Product of sum_i a_i A_i and sum_j b_j A_j in coefficient form.
  std::vector<Rational> multiply(std::span<const Rational> a, std::span<const Rational> b) const;

 private:
  friend AssociationScheme verify_axioms(std::vector<ExactMatrix> classes);
  std::size_t v_ = 0;
  std::vector<ExactMatrix> classes_;
  std::vector<std::size_t> valencies_;
  std::vector<std::uint8_t> relation_;
  std::vector<std::vector<Bitset>> rows_;
  std::vector<std::int64_t> intersection_;
};

/// Checks, in order: shapes, 0/1 entries ("zero_one"), A_0 = I ("identity"),
/// sum A_i = J ("partition"), symmetry ("symmetric"), constant row sums
/// ("regular"), A_iA_j in the span of the classes ("closure") and
/// A_iA_j = A_jA_i ("commutative").
/// For closure the coefficient of A_k is read from the first entry of A_k and
/// then checked against every entry of the product.
/// Throws AxiomViolation with the failing row and column, or Error(kDimension).
AssociationScheme verify_axioms(std::vector<ExactMatrix> classes);

/// Scheme from a relation table rel[x*v + y] in {0..d}.
AssociationScheme scheme_from_relation(std::size_t v, std::size_t d, const std::vector<std::uint8_t>& rel);

struct Eigenmatrix {
  /// p[j][i] = eigenvalue of A_i on U_j; row 0 is the eigenspace of the all-ones vector.
  std::vector<std::vector<std::int64_t>> p;
  std::vector<std::size_t> multiplicities;
  /// Basis of U_j (v x m_j), columns in reduced echelon form.
  std::vector<ExactMatrix> bases;

  std::size_t size() const noexcept { return multiplicities.size(); }
  /// Index j with p[j][1] == lambda, if unique.
  std::optional<std::size_t> eigenspace_of(std::int64_t lambda_on_a1) const;
};

/// Common eigenspaces of all classes.
///
/// Splits the integer eigenspaces of A_1 by the restriction of each further
/// class, then verifies A_i U_j = p_i(j) U_j exactly for all i, j and
/// sum_j m_j = v. Eigenspaces are ordered with U_0 first, then by decreasing
/// (p_1, p_2, ...), unless `a1_order` lists the eigenvalues of A_1 in the
/// wanted order (only usable when those values are distinct).
/// Throws Error(kNonIntegralSpectrum).
Eigenmatrix eigenmatrix(const AssociationScheme& scheme, const std::vector<std::int64_t>& a1_order = {});

struct IdempotentBasis {
  /// coefficients[j][i]: E_j = sum_i coefficients[j][i] A_i.
  std::vector<std::vector<Rational>> coefficients;
  std::vector<ExactMatrix> idempotents;
};

/// Primitive idempotents E_j = (m_j / v) sum_i (p_i(j) / v_i) A_i. Before the
/// matrices are formed, the Bose-Mesner products certify E_jE_k = delta_jk E_j,
/// sum E_j = I, A_iE_j = p_i(j)E_j and trace E_j = m_j; together these make E_j
/// the orthogonal projection onto U_j. Throws Error(kConstructionFailed) if a
/// check fails.
IdempotentBasis idempotents(const AssociationScheme& scheme, const Eigenmatrix& em);

/// Orthogonal projection U (U^T U)^{-1} U^T onto the column space of U.
ExactMatrix orthogonal_projection(const ExactMatrix& u);

struct SeidelResult {
  bool equal = false;
  /// Coefficients on A_0..A_d of the two sides.
  std::vector<Rational> lhs_coefficients;
  std::vector<Rational> rhs_coefficients;
  ExactMatrix lhs;
  ExactMatrix rhs;
};

/// sum_i (x^T A_i x)/(v v_i) A_i versus sum_j (x^T E_j x)/m_j E_j, both formed
/// as matrices and compared entrywise. Throws Error(kDimension) on a length mismatch.
SeidelResult seidel_check(const AssociationScheme& scheme, const Eigenmatrix& em, const IdempotentBasis& basis,
                          std::span<const Rational> x);

/// (x^T A_i x)/|S| for the characteristic vector x of S. Throws Error(kEmptySet).
std::vector<Rational> inner_distribution(const AssociationScheme& scheme, const VertexSet& s);

}  // namespace ratiocert
