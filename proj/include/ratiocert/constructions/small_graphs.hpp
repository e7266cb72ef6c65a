#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ratiocert/exact_linalg/exact_matrix.hpp"
#include "ratiocert/graph_core/graph.hpp"

namespace ratiocert {

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

/// L(K_n): vertices "i-j" for 1 <= i < j <= n in lexicographic order, adjacent
/// when the pairs share a point. Throws Error(kDimension) for n < 2.
Graph build_line_graph_complete(std::size_t n);

/// k-subsets of {1..n} as sorted vectors, in lexicographic order.
std::vector<std::vector<int>> subsets_lex(int n, int k);

struct KneserGraph {
  Graph graph;
  /// v x C(v,k): entry (p, S) is 1 iff p lies in S.
  ExactMatrix star_matrix;
};

/// K_{v:k}: k-subsets of {1..v} labelled "1,2,3", adjacent when disjoint.
/// Throws Error(kDimension) unless v >= 2k and k >= 1.
KneserGraph build_kneser(std::size_t v, std::size_t k);

/// Circle-method one-factorization of K_n on points 1..n.
struct OneFactorization {
  std::size_t n = 0;
  /// matchings[c] holds the edges (i < j) of colour c + 1.
  std::vector<std::vector<std::pair<int, int>>> matchings;

  /// Colour in 1..n-1 of the edge {i, j}.
  std::size_t color(int i, int j) const;
  /// Vertex map L(K_n) -> K_{n-1} sending "i-j" to colour - 1.
  std::vector<std::size_t> line_graph_coloring() const;
};

/// Throws Error(kOddOrder) for odd n, Error(kDimension) for n < 2.
OneFactorization round_robin_one_factorization(std::size_t n);

}  // namespace ratiocert
