#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ratiocert/graph_core/graph.hpp"

namespace ratiocert {

struct BruteForceOptions {
  /// Keep witnesses only while there are at most this many maximum sets.
  std::optional<std::size_t> stop_at;
  /// Branch-and-bound node expansions before Error(kBudgetExceeded).
  std::uint64_t node_budget = 50'000'000;
  /// Worker threads; root branches are shared out and results merged in sorted order.
  unsigned jobs = 1;
};

struct BruteForceResult {
  std::size_t size = 0;
  /// All maximum independent sets in increasing order, unless truncated.
  std::vector<VertexSet> witnesses;
  /// Number of maximum sets; a lower bound (> stop_at) when truncated.
  std::size_t count = 0;
  bool truncated = false;
  std::uint64_t nodes = 0;
};

/// Exact independence number and all maximum independent sets.
///
/// Branch and bound over vertices sorted by degree (descending, then index);
/// the bound at each node is a greedy partition of the candidates into cliques
/// of G. Branches are cut only when they cannot reach the best size, so every
/// set of maximum size is visited.
BruteForceResult max_independent_brute(const Graph& g, const BruteForceOptions& options = {});

}  // namespace ratiocert
