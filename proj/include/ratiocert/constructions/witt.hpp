#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ratiocert/exact_linalg/exact_matrix.hpp"
#include "ratiocert/graph_core/graph.hpp"

namespace ratiocert {

/// Greedy lexicode of length n and minimum distance d: the words of
/// {0,1}^n taken in increasing order, each kept when it is at distance >= d
/// from all kept words. Returned sorted. Uses the linearity of lexicodes:
/// the next kept word is the least word outside C + Ball(d-1), after which
/// the code is span(C, w).
std::vector<std::uint32_t> lexicode(unsigned n, unsigned d);

/// Same code by the literal quadratic greedy procedure (test oracle for small n).
std::vector<std::uint32_t> lexicode_naive(unsigned n, unsigned d);

struct WittBlock {
  std::array<int, 6> points;  // sorted, in 1..22

  std::string label() const;  // "1,2,3,4,5,6"
  friend auto operator<=>(const WittBlock&, const WittBlock&) = default;
};

struct Witt {
  std::vector<std::uint32_t> golay;  // 4096 codewords of length 24
  std::vector<WittBlock> blocks;     // 77 blocks, sorted
  Graph graph;                       // blocks adjacent when disjoint
  ExactMatrix M;                     // 77 x 22 block-point incidence
};

/// Builds the extended binary Golay code as the (24, 8) lexicode, checks its
/// size and weight distribution, derives the octads at the two top bits into
/// the 3-(22,6,1) design and checks it.
/// Throws Error(kConstructionFailed) if any check fails.
Witt build_witt();

}  // namespace ratiocert
