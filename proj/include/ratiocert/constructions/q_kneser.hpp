#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ratiocert/exact_linalg/exact_matrix.hpp"
#include "ratiocert/exact_linalg/integer.hpp"
#include "ratiocert/graph_core/graph.hpp"

namespace ratiocert {

/// Gaussian binomial coefficient [n choose k]_q; zero when k > n.
Integer gauss_binomial(std::int64_t q, std::size_t n, std::size_t k);

/// A k-dimensional subspace of GF(q)^v stored by its RREF basis (row-major, k x v).
struct Subspace {
  std::uint32_t q = 2;
  std::size_t ambient_dim = 0;
  std::size_t dim = 0;
  std::vector<std::uint8_t> basis;

  std::uint8_t at(std::size_t r, std::size_t c) const { return basis[r * ambient_dim + c]; }
  /// Rows joined by '.', e.g. "1000.0110"; entries are comma-separated when q > 10.
  std::string label() const;
  friend auto operator<=>(const Subspace& a, const Subspace& b) { return a.basis <=> b.basis; }
  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis == b.basis; }
};

/// Rank over GF(q) of the given rows.
std::size_t rank_gf(std::vector<std::vector<std::uint8_t>> rows, std::uint32_t q);

/// All k-subspaces of GF(q)^v, sorted by RREF bytes.
/// Throws Error(kUnsupportedField) unless q is a prime below 256.
std::vector<Subspace> enumerate_subspaces(std::uint32_t q, std::size_t v, std::size_t k);

/// True iff the two subspaces meet only in 0.
bool trivially_intersecting(const Subspace& a, const Subspace& b);
/// True iff a is contained in b.
bool contained_in(const Subspace& a, const Subspace& b);

struct QKneser {
  std::vector<Subspace> subspaces;
  Graph graph;
};

/// q-Kneser graph qK_q(v, k): k-subspaces adjacent when they meet in 0.
/// Throws Error(kUnsupportedField) or Error(kDimension) when v < 2k.
QKneser build_q_kneser(std::uint32_t q, std::size_t v, std::size_t k);

/// Inclusion matrix W_{1,k}(v): rows the 1-subspaces, columns the k-subspaces.
ExactMatrix build_W1k(std::uint32_t q, std::size_t v, std::size_t k);

}  // namespace ratiocert
