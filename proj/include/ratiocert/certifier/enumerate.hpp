#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ratiocert/exact_linalg/exact_matrix.hpp"
#include "ratiocert/graph_core/graph.hpp"
#include "ratiocert/schemes/scheme.hpp"

namespace ratiocert {

struct EnumerateOptions {
  /// Error(kRankTooLarge) above this rank of C.
  std::size_t rank_cap = 24;
  unsigned jobs = 1;
  /// Solve M h = z for every valid set.
  bool compute_h = true;
  /// Greedily pick a few rows C_0 of C such that C_0 y being 0/1 already
  /// forces C y to be 0/1. Needs rank(C) <= 16.
  bool minimize_c0 = false;
};

struct EnumerationReport {
  std::string seed_description;
  std::size_t rank_C = 0;
  /// 2^rank(C).
  std::uint64_t candidates_tested = 0;
  /// Choices of y with C y a 0/1 vector, the zero vector included.
  std::uint64_t zero_one_candidates = 0;
  /// 0/1 vectors that are independent, of the target size and contain the seeds; sorted.
  std::vector<VertexSet> valid_sets;
  std::vector<RationalVector> h_vectors;
  /// Rows of C chosen by the minimization pass (vertex indices).
  std::vector<std::size_t> c0_rows;
};

/// With M_1 the rows of M at vertices adjacent to a seed, N a null-space basis
/// of M_1 and C the reduced column echelon form of M N, every maximum
/// independent set containing the seeds has characteristic vector C y for a
/// 0/1 vector y (C contains an identity on its pivot rows). All 2^rank(C)
/// choices are tried; the sweep is split across `jobs` workers by the top bits
/// of y and merged in sorted order.
/// Throws Error(kRankTooLarge) or Error(kDimension) for non-independent seeds.
EnumerationReport colspace_enumerate(const Graph& g, const ExactMatrix& m, const VertexSet& seeds, std::size_t target_size,
                                     const EnumerateOptions& options = {});

struct SeedStrategy {
  enum class Kind { kSingletons, kPairsInClass };
  Kind kind = Kind::kSingletons;
  std::size_t cls = 0;

  /// "singletons" or "pairs:A<c>".
  std::string to_string() const;
  /// Throws Error(kParse).
  static SeedStrategy parse(const std::string& text);
};

struct DriverReport {
  std::vector<VertexSet> sets;
  std::size_t seeds = 0;
  std::size_t max_rank_C = 0;
  std::uint64_t candidates_tested = 0;
  std::uint64_t zero_one_candidates = 0;
  std::uint64_t valid_hits = 0;
};

/// Runs colspace_enumerate once per seed of the strategy (every vertex, or every
/// pair of vertices in scheme class c) and returns the union, sorted.
/// Complete whenever each maximum independent set contains some seed.
/// `scheme` is required for pair seeds. Seeds are shared out across `jobs`.
DriverReport enumerate_all_max_independent(const Graph& g, const ExactMatrix& m, std::size_t target_size,
                                           const SeedStrategy& strategy, const AssociationScheme* scheme,
                                           const EnumerateOptions& options = {});

/// True iff every vertex a of S has |N_i(a) & S| = expected[i] for every class i.
bool verify_inner_distribution(const AssociationScheme& scheme, const VertexSet& s, const std::vector<Rational>& expected);

/// Inner distribution forced on any independent set meeting the ratio bound:
/// such a set has x^T E_j x = 0 except for j = 0 and the eigenspace of tau, and
/// Seidel's identity then fixes every x^T A_i x.
std::vector<Rational> predicted_tight_inner_distribution(const AssociationScheme& scheme, const Eigenmatrix& em,
                                                         const IdempotentBasis& basis, std::size_t tau_space,
                                                         const Rational& size);

}  // namespace ratiocert
