#include "ratiocert/constructions/small_graphs.hpp"

#include "ratiocert/errors.hpp"

namespace ratiocert {

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(Graph::index_labels(n), edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::kDimension, "a cycle needs at least 3 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(Graph::index_labels(n), edges);
}

Graph path_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(Graph::index_labels(n), edges);
}

Graph build_line_graph_complete(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::kDimension, "L(K_n) needs n >= 2");
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::string> labels;
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    for (int j = i + 1; j <= static_cast<int>(n); ++j) {
      pairs.emplace_back(i, j);
      labels.push_back(std::to_string(i) + "-" + std::to_string(j));
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      const auto [i, j] = pairs[a];
      const auto [k, l] = pairs[b];
      if (i == k || i == l || j == k || j == l) edges.emplace_back(a, b);
    }
  }
  return Graph::from_edges(std::move(labels), edges);
}

std::vector<std::vector<int>> subsets_lex(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

KneserGraph build_kneser(std::size_t v, std::size_t k) {
  if (k < 1 || v < 2 * k) throw Error(ErrorKind::kDimension, "Kneser graph needs v >= 2k >= 2");
  const auto sets = subsets_lex(static_cast<int>(v), static_cast<int>(k));
  std::vector<std::string> labels;
  std::vector<std::uint64_t> masks;
  for (const auto& s : sets) {
    std::string l;
    std::uint64_t mask = 0;
    for (int x : s) {
      if (!l.empty()) l += ',';
      l += std::to_string(x);
      mask |= std::uint64_t{1} << x;
    }
    labels.push_back(std::move(l));
    masks.push_back(mask);
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = a + 1; b < sets.size(); ++b)
      if (!(masks[a] & masks[b])) edges.emplace_back(a, b);
  ExactMatrix star(v, sets.size());
  for (std::size_t c = 0; c < sets.size(); ++c)
    for (int x : sets[c]) star(static_cast<std::size_t>(x - 1), c) = Rational(1);
  return KneserGraph{Graph::from_edges(std::move(labels), edges), std::move(star)};
}

std::size_t OneFactorization::color(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (std::size_t c = 0; c < matchings.size(); ++c)
    for (auto [a, b] : matchings[c])
      if (a == i && b == j) return c + 1;
  throw Error(ErrorKind::kDimension, "edge not in the factorization");
}

std::vector<std::size_t> OneFactorization::line_graph_coloring() const {
  std::vector<std::size_t> out;
  for (int i = 1; i <= static_cast<int>(n); ++i)
    for (int j = i + 1; j <= static_cast<int>(n); ++j) out.push_back(color(i, j) - 1);
  return out;
}

OneFactorization round_robin_one_factorization(std::size_t n) {
  if (n % 2) throw Error(ErrorKind::kOddOrder, "one-factorization needs an even order, got " + std::to_string(n));
  if (n < 2) throw Error(ErrorKind::kDimension, "one-factorization needs n >= 2");
  OneFactorization f;
  f.n = n;
  const int m = static_cast<int>(n) - 1;  // points 1..m on the circle, point n fixed
  for (int r = 0; r < m; ++r) {
    std::vector<std::pair<int, int>> matching;
    auto add = [&](int a, int b) { matching.emplace_back(std::min(a, b), std::max(a, b)); };
    add(r + 1, static_cast<int>(n));
    for (int i = 1; i <= m / 2; ++i) add((r + i) % m + 1, (r - i + m) % m + 1);
    std::sort(matching.begin(), matching.end());
    f.matchings.push_back(std::move(matching));
  }
  return f;
}

}  // namespace ratiocert
