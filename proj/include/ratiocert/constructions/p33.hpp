#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "ratiocert/exact_linalg/exact_matrix.hpp"
#include "ratiocert/graph_core/graph.hpp"
#include "ratiocert/schemes/scheme.hpp"

namespace ratiocert {

// A partition of {1..9} into three cells of size three. Canonical form: each
// cell sorted, cells ordered by their least element.
struct Partition33 {
  std::array<std::array<int, 3>, 3> cells;

  std::string label() const;  // "123|456|789"
  bool same_cell(int a, int b) const;
  friend auto operator<=>(const Partition33&, const Partition33&) = default;
};

/// All 280 partitions in increasing canonical order.
std::vector<Partition33> enumerate_partitions33();

/// Number of nonempty cells of the meet of two partitions (3, 5, 6, 7 or 9).
int meet_cells(const Partition33& a, const Partition33& b);

struct P33 {
  std::vector<Partition33> partitions;
  AssociationScheme scheme;
  /// Class 1 of the scheme: partitions whose meet has 9 cells.
  Graph graph;
};

/// Classes A_1..A_4 are the meet sizes 9, 7, 6, 5.
P33 build_p33();
/// Eigenvalues of A_1 in the row order of the Mathon-Rosa table.
const std::vector<std::int64_t>& p33_eigenspace_order();

/// 2-subsets {i, j} of {1..n}, 1 <= i < j <= n, in lexicographic order.
std::vector<std::array<int, 2>> pairs_lex(int n);
/// Index of {i, j} in pairs_lex(n).
std::size_t pair_index(int n, int i, int j);

/// 280 x 36: entry (pi, ij) is 1 iff i and j share a cell of pi.
ExactMatrix build_p33_M(const std::vector<Partition33>& partitions);
/// 9 x 36 vertex-edge incidence matrix of K_9.
ExactMatrix build_k9_incidence();
/// 36 x 36 adjacency matrix of L(K_9), columns in pairs_lex order.
ExactMatrix build_line_k9_adjacency();

}  // namespace ratiocert
