#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ratiocert/graph_core/graph.hpp"

namespace ratiocert {

enum class EndomorphismMode { kFindProper, kEnumerateAll };

struct EndomorphismReport {
  std::uint64_t automorphisms = 0;
  std::uint64_t proper_endomorphisms = 0;
  /// First non-bijective endomorphism met, as vertex images.
  std::optional<std::vector<std::size_t>> proper_witness;
  std::uint64_t nodes = 0;

  bool is_core() const noexcept { return proper_endomorphisms == 0 && !proper_witness; }
};

/// Backtracking over maps V -> V that send edges to edges. The next vertex is
/// the unassigned one with the fewest candidates (ties: most assigned
/// neighbours, then index); assigning u -> c intersects the candidate set of
/// every unassigned neighbour of u with N(c).
/// In kFindProper mode the search stops at the first non-bijective map and the
/// automorphism count covers only the maps seen until then.
/// Throws Error(kBudgetExceeded) after `node_budget` assignments.
EndomorphismReport endomorphism_search(const Graph& g, EndomorphismMode mode, std::uint64_t node_budget = 100'000'000);

}  // namespace ratiocert
