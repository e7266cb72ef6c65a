#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "ratiocert/exact_linalg/exact_matrix.hpp"
#include "ratiocert/graph_core/graph.hpp"

namespace ratiocert {

struct RatioBoundCertificate {
  std::size_t v = 0;
  std::int64_t valency = 0;
  std::int64_t least_eigenvalue = 0;
  Rational bound;
  bool tight = false;
};

/// v / (1 - k/tau). Throws Error(kInvalidSpectrum) unless tau < 0 and k >= 1.
RatioBoundCertificate ratio_bound(std::size_t v, std::int64_t k, std::int64_t tau);

/// Checks A(x - (|S|/v) 1) = tau (x - (|S|/v) 1) exactly for the characteristic
/// vector x of S. Throws Error(kNotTight) when |S| is not the ratio bound of G
/// and Error(kNotRegular) when G is not regular.
bool tightness_eigenvector_check(const Graph& g, const VertexSet& s, std::int64_t tau);

/// Some h with M h = z (free variables zero), or nullopt.
std::optional<RationalVector> colspace_membership(const ExactMatrix& m, std::span<const Rational> z);

/// The argument that col(M) = span(1) + (tau-eigenspace of A):
/// 1 lies in col(M), each column c satisfies A c - tau c = s (k - tau) 1 with
/// s = 1^T c / v (so c - s 1 is a tau-eigenvector), and rank(M) = mult(tau) + 1.
/// When it holds, every independent set meeting the ratio bound has its
/// characteristic vector in col(M).
struct ColspaceArgument {
  bool ones_in_colspace = false;
  bool columns_are_shifted_eigenvectors = false;
  std::size_t rank_M = 0;
  std::size_t tau_multiplicity = 0;

  bool holds() const noexcept {
    return ones_in_colspace && columns_are_shifted_eigenvectors && rank_M == tau_multiplicity + 1;
  }
};

ColspaceArgument colspace_rank_argument(const Graph& g, const ExactMatrix& m, std::int64_t tau, std::size_t tau_multiplicity);

}  // namespace ratiocert
