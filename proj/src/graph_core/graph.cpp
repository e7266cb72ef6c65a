#include "ratiocert/graph_core/graph.hpp"

#include <sstream>

#include "ratiocert/errors.hpp"

namespace ratiocert {

Graph::Graph(std::vector<std::string> labels, std::vector<Bitset> adjacency)
    : labels_(std::move(labels)), adjacency_(std::move(adjacency)) {
  const std::size_t n = labels_.size();
  if (adjacency_.size() != n) throw Error(ErrorKind::kDimension, "graph: label count differs from adjacency rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (adjacency_[i].size() != n) throw Error(ErrorKind::kDimension, "graph: adjacency row has wrong width");
    if (adjacency_[i].test(i)) throw Error(ErrorKind::kConstructionFailed, "graph: loop at vertex " + labels_[i]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = adjacency_[i].first(); j != Bitset::npos; j = adjacency_[i].next(j + 1))
      if (!adjacency_[j].test(i))
        throw Error(ErrorKind::kConstructionFailed, "graph: asymmetric adjacency " + labels_[i] + " ~ " + labels_[j]);
  index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    if (!index_.emplace(labels_[i], i).second) throw Error(ErrorKind::kConstructionFailed, "graph: repeated label " + labels_[i]);
}

Graph Graph::from_edges(std::vector<std::string> labels, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  const std::size_t n = labels.size();
  std::vector<Bitset> adj(n, Bitset(n));
  for (auto [i, j] : edges) {
    if (i >= n || j >= n) throw Error(ErrorKind::kDimension, "graph: edge endpoint out of range");
    adj[i].set(j);
    adj[j].set(i);
  }
  return Graph(std::move(labels), std::move(adj));
}

std::vector<std::string> Graph::index_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::optional<std::size_t> Graph::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency_) twice += row.count();
  return twice / 2;
}

std::optional<std::size_t> Graph::valency() const {
  if (adjacency_.empty()) return 0;
  const std::size_t k = adjacency_[0].count();
  for (const auto& row : adjacency_)
    if (row.count() != k) return std::nullopt;
  return k;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < order(); ++i)
    for (std::size_t j = adjacency_[i].next(i + 1); j != Bitset::npos; j = adjacency_[i].next(j + 1)) out.emplace_back(i, j);
  return out;
}

IntegerMatrix Graph::adjacency_integers() const {
  const std::size_t n = order();
  IntegerMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = adjacency_[i].first(); j != Bitset::npos; j = adjacency_[i].next(j + 1)) a(i, j) = Integer(1);
  return a;
}

VertexSet Graph::set_from_labels(const std::vector<std::string>& labels) const {
  VertexSet s = empty_set();
  for (const auto& l : labels) {
    auto i = index_of(l);
    if (!i) throw Error(ErrorKind::kParse, "unknown vertex label '" + l + "'");
    s.set(*i);
  }
  return s;
}

std::vector<std::string> Graph::labels_of(const VertexSet& s) const {
  std::vector<std::string> out;
  for (std::size_t i = s.first(); i != Bitset::npos; i = s.next(i + 1)) out.push_back(labels_[i]);
  return out;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (std::size_t i = s.first(); i != Bitset::npos; i = s.next(i + 1))
    if (g.neighbors(i).intersects(s)) return false;
  return true;
}

bool check_homomorphism(const Graph& g, const Graph& h, const std::vector<std::size_t>& map) {
  if (map.size() != g.order()) throw Error(ErrorKind::kDimension, "homomorphism map is not total");
  for (auto x : map)
    if (x >= h.order()) throw Error(ErrorKind::kDimension, "homomorphism image out of range");
  for (auto [i, j] : g.edges())
    if (!h.adjacent(map[i], map[j])) return false;
  return true;
}

void write_graph_text(std::ostream& os, const Graph& g) {
  os << g.order() << '\n';
  for (auto [i, j] : g.edges()) os << i << ' ' << j << '\n';
  os << "#labels\n";
  for (const auto& l : g.labels()) os << l << '\n';
}

Graph read_graph_text(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw Error(ErrorKind::kParse, "graph text: missing vertex count");
  std::size_t n = 0;
  {
    std::istringstream ss(line);
    long long v = -1;
    if (!(ss >> v) || v < 0) throw Error(ErrorKind::kParse, "graph text: bad vertex count '" + line + "'");
    n = static_cast<std::size_t>(v);
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::string> labels;
  bool in_labels = false;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (in_labels) {
      if (labels.size() < n) labels.push_back(line);
      else if (!line.empty()) throw Error(ErrorKind::kParse, "graph text: more labels than vertices");
      continue;
    }
    if (line == "#labels") {
      in_labels = true;
      continue;
    }
    if (line.empty()) continue;
    std::istringstream ss(line);
    long long i = -1, j = -1;
    std::string rest;
    if (!(ss >> i >> j) || (ss >> rest) || i < 0 || j < 0 || i >= j || static_cast<std::size_t>(j) >= n)
      throw Error(ErrorKind::kParse, "graph text: bad edge line '" + line + "'");
    edges.emplace_back(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  if (!in_labels) labels = Graph::index_labels(n);
  if (labels.size() != n) throw Error(ErrorKind::kParse, "graph text: label table has wrong length");
  return Graph::from_edges(std::move(labels), edges);
}

}  // namespace ratiocert
