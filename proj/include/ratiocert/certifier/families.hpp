#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratiocert/certifier/certificate.hpp"
#include "ratiocert/certifier/enumerate.hpp"
#include "ratiocert/exact_linalg/exact_matrix.hpp"
#include "ratiocert/graph_core/graph.hpp"

namespace ratiocert {

/// One of "p33", "witt", "q_kneser" (q, v, k), "kneser" (v, k), "line_complete" (n).
struct FamilyRequest {
  std::string family;
  std::uint32_t q = 2;
  std::size_t v = 0;
  std::size_t k = 0;
  std::size_t n = 0;

  /// Parameters that apply to the family, in a fixed order.
  std::vector<std::pair<std::string, std::string>> parameters() const;
};

struct CertifyOptions {
  /// Default: pairs:A2 for p33, singletons elsewhere.
  std::optional<SeedStrategy> seeds;
  unsigned jobs = 1;
  bool timings = false;
  /// Node budget for brute-force and endomorphism searches.
  std::uint64_t node_budget = 50'000'000;
  std::size_t rank_cap = 24;
  /// Skip the family identity checks and only produce the maximum sets.
  bool enumerate_only = false;
};

struct BuiltFamily {
  std::string name;
  Graph graph;
  /// Matrix whose column space holds the characteristic vectors of the tight sets.
  ExactMatrix M;
};

/// Graph and matrix M of a family. Throws Error(kParse) on an unknown family
/// and Error(kDimension) on bad parameters.
BuiltFamily build_family(const FamilyRequest& request);

/// Full pipeline: construction, spectrum, ratio bound, column-space argument,
/// enumeration of the maximum independent sets and the family identity checks.
/// Library errors are caught and recorded in the certificate, whose status is
/// then "failed"; Error(kParse) from bad options is rethrown.
Certificate certify_family(const FamilyRequest& request, const CertifyOptions& options = {});

}  // namespace ratiocert
