#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ratiocert/exact_linalg/exact_matrix.hpp"
#include "ratiocert/exact_linalg/integer_matrix.hpp"
#include "ratiocert/graph_core/bitset.hpp"

namespace ratiocert {

/// Simple undirected graph with labelled vertices and bitset adjacency rows.
/// Vertex order is the order of the labels as given by the constructing family.
class Graph {
 public:
  Graph() = default;
  /// Throws Error(kConstructionFailed) on asymmetric adjacency, loops or repeated labels,
  /// and Error(kDimension) on size mismatches.
  Graph(std::vector<std::string> labels, std::vector<Bitset> adjacency);
  static Graph from_edges(std::vector<std::string> labels, const std::vector<std::pair<std::size_t, std::size_t>>& edges);
  /// Vertices labelled "0".."n-1".
  static std::vector<std::string> index_labels(std::size_t n);

  std::size_t order() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> index_of(std::string_view label) const;
  bool adjacent(std::size_t i, std::size_t j) const { return adjacency_[i].test(j); }
  const Bitset& neighbors(std::size_t i) const { return adjacency_[i]; }
  std::size_t degree(std::size_t i) const { return adjacency_[i].count(); }
  std::size_t edge_count() const;
  /// Common degree, or nullopt if the graph is not regular.
  std::optional<std::size_t> valency() const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  IntegerMatrix adjacency_integers() const;
  ExactMatrix adjacency_matrix() const { return ExactMatrix(adjacency_integers()); }

  VertexSet empty_set() const { return VertexSet(order()); }
  /// Throws Error(kParse) on an unknown label.
  VertexSet set_from_labels(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(const VertexSet& s) const;

  bool operator==(const Graph& o) const { return labels_ == o.labels_ && adjacency_ == o.adjacency_; }

 private:
  std::vector<std::string> labels_;
  std::vector<Bitset> adjacency_;
  std::unordered_map<std::string, std::size_t> index_;
};

bool is_independent(const Graph& g, const VertexSet& s);

/// True iff `map` sends every edge of g to an edge of h. Throws Error(kDimension)
/// if `map` is not total on V(g) or leaves V(h).
bool check_homomorphism(const Graph& g, const Graph& h, const std::vector<std::size_t>& map);

// Text format: first line is the vertex count, then one "i j" line per edge with
// i < j (0-indexed), then a "#labels" line followed by one label per vertex.
void write_graph_text(std::ostream& os, const Graph& g);
/// Missing "#labels" section gives index labels. Throws Error(kParse).
Graph read_graph_text(std::istream& is);

}  // namespace ratiocert
