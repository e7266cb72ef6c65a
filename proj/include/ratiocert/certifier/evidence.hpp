#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ratiocert/constructions/p33.hpp"
#include "ratiocert/exact_linalg/exact_matrix.hpp"
#include "ratiocert/graph_core/graph.hpp"

namespace ratiocert {

/// The set S_{i,j} of partitions with i and j in one cell.
VertexSet p33_star(const P33& p33, int i, int j);

struct PairIntersection {
  std::array<int, 2> first;
  std::array<int, 2> second;
  std::size_t count;
};

struct CoreEvidenceReport {
  /// |S_ij & S_kl| over all ordered pairs of 2-subsets in pairs_lex order.
  std::vector<PairIntersection> pairwise_intersections;
  /// Counts are 70 for equal pairs, 10 for overlapping and 20 for disjoint ones.
  bool intersection_pattern = false;
  /// S_12 & S_13 & S_45 & S_46 is exactly {123|456|789}.
  bool quadruple_singleton = false;
  std::string quadruple_member;
  /// |S_12 & S_1i| for i = 3..9.
  std::vector<std::size_t> slice_sizes;
  /// Those slices are pairwise disjoint, of size 10, and cover S_12.
  bool slices_partition = false;
  /// The graph on the 36 sets S_ij, adjacent when they share 10 partitions, is L(K_9).
  bool induced_map_target = false;
  std::string induced_map_description;

  bool all_pass() const noexcept {
    return intersection_pattern && quadruple_singleton && slices_partition && induced_map_target;
  }
};

/// Throws Error(kConstructionFailed) when a check fails; the report is attached to the message.
CoreEvidenceReport p33_core_evidence(const P33& p33);

struct SupportLocalization {
  RationalVector h;
  /// Columns j with M(alpha, j) != 0.
  std::vector<std::size_t> inside;
  /// Support of h.
  std::vector<std::size_t> support;
  /// rank(M) == cols(M), so h is the only solution.
  bool unique = false;
  bool support_inside = false;
  /// Rank fact on the complement rows: nullopt when no rows were given.
  std::optional<bool> complement_rank_fact;
  std::string note;

  bool holds() const noexcept { return support_inside && complement_rank_fact.value_or(true); }
};

/// Solves z = M h for the characteristic vector z of S and checks that h can be
/// taken supported on the columns inside alpha. When M has full column rank, h
/// is unique and its support is checked directly; otherwise h is replaced by
/// the representative of h + null(M) found by solving on the inside columns
/// alone. `complement_rows`, when given, are rows of M whose nonzero columns
/// must be linearly independent (the rank fact the proof uses).
/// Throws Error(kDimension) when z is not in the column space of M.
SupportLocalization support_localization_check(const ExactMatrix& m, const Graph& g, const VertexSet& s, std::size_t alpha,
                                               const std::vector<std::size_t>& complement_rows = {});

}  // namespace ratiocert
