#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ratiocert/graph_core/graph.hpp"

namespace ratiocert {

struct SpectrumReport {
  /// (eigenvalue, multiplicity), eigenvalues strictly decreasing.
  std::vector<std::pair<std::int64_t, std::size_t>> pairs;
  std::int64_t least = 0;

  std::size_t multiplicity(std::int64_t lambda) const;
};

/// Exact spectrum of a regular graph whose eigenvalues are all integers.
///
/// Candidates are the integers in [-k, k]. A characteristic polynomial modulo a
/// large prime discards candidates that are not roots; since A is symmetric the
/// geometric multiplicity over Q is at most the multiplicity of the root mod p.
/// Each surviving candidate gets an exact integer_nullity.
/// Throws Error(kNotRegular) or Error(kNonIntegralSpectrum).
SpectrumReport integer_spectrum(const Graph& g);

}  // namespace ratiocert
