#include "ratiocert/constructions/p33.hpp"

#include <algorithm>

#include "ratiocert/constructions/small_graphs.hpp"
#include "ratiocert/errors.hpp"

namespace ratiocert {

std::string Partition33::label() const {
  std::string out;
  for (std::size_t c = 0; c < 3; ++c) {
    if (c) out += '|';
    for (int x : cells[c]) out += static_cast<char>('0' + x);
  }
  return out;
}

bool Partition33::same_cell(int a, int b) const {
  for (const auto& cell : cells) {
    const bool ha = std::find(cell.begin(), cell.end(), a) != cell.end();
    const bool hb = std::find(cell.begin(), cell.end(), b) != cell.end();
    if (ha || hb) return ha && hb;
  }
  return false;
}

std::vector<Partition33> enumerate_partitions33() {
  std::vector<Partition33> out;
  for (int b = 2; b <= 9; ++b) {
    for (int c = b + 1; c <= 9; ++c) {
      std::vector<int> rest;
      for (int x = 2; x <= 9; ++x)
        if (x != b && x != c) rest.push_back(x);
      // rest[0] is the least remaining point and opens the second cell.
      for (std::size_t i = 1; i < rest.size(); ++i) {
        for (std::size_t j = i + 1; j < rest.size(); ++j) {
          Partition33 p;
          p.cells[0] = {1, b, c};
          p.cells[1] = {rest[0], rest[i], rest[j]};
          std::size_t t = 0;
          for (std::size_t k = 1; k < rest.size(); ++k)
            if (k != i && k != j) p.cells[2][t++] = rest[k];
          out.push_back(p);
        }
      }
    }
  }
  return out;
}

int meet_cells(const Partition33& a, const Partition33& b) {
  int n = 0;
  for (const auto& x : a.cells) {
    for (const auto& y : b.cells) {
      bool meet = false;
      for (int p : x) meet = meet || std::find(y.begin(), y.end(), p) != y.end();
      n += meet;
    }
  }
  return n;
}

P33 build_p33() {
  auto parts = enumerate_partitions33();
  const std::size_t v = parts.size();
  std::vector<std::uint8_t> rel(v * v);
  for (std::size_t x = 0; x < v; ++x) {
    for (std::size_t y = 0; y < v; ++y) {
      switch (meet_cells(parts[x], parts[y])) {
        case 3: rel[x * v + y] = 0; break;
        case 9: rel[x * v + y] = 1; break;
        case 7: rel[x * v + y] = 2; break;
        case 6: rel[x * v + y] = 3; break;
        case 5: rel[x * v + y] = 4; break;
        default: throw Error(ErrorKind::kConstructionFailed, "unexpected meet size");
      }
    }
  }
  AssociationScheme scheme = scheme_from_relation(v, 4, rel);
  std::vector<std::string> labels;
  for (const auto& p : parts) labels.push_back(p.label());
  Graph graph = scheme.class_graph(1, std::move(labels));
  return P33{std::move(parts), std::move(scheme), std::move(graph)};
}

const std::vector<std::int64_t>& p33_eigenspace_order() {
  static const std::vector<std::int64_t> order{36, -12, 8, 2, -4};
  return order;
}

std::vector<std::array<int, 2>> pairs_lex(int n) {
  std::vector<std::array<int, 2>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
  return out;
}

std::size_t pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  // Pairs starting below i come first: sum_{a<i} (n - a).
  const int before = (i - 1) * n - (i - 1) * i / 2;
  return static_cast<std::size_t>(before + (j - i - 1));
}

ExactMatrix build_p33_M(const std::vector<Partition33>& partitions) {
  const auto pairs = pairs_lex(9);
  ExactMatrix m(partitions.size(), pairs.size());
  for (std::size_t r = 0; r < partitions.size(); ++r)
    for (std::size_t c = 0; c < pairs.size(); ++c)
      if (partitions[r].same_cell(pairs[c][0], pairs[c][1])) m(r, c) = Rational(1);
  return m;
}

ExactMatrix build_k9_incidence() {
  const auto pairs = pairs_lex(9);
  ExactMatrix b(9, pairs.size());
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    b(static_cast<std::size_t>(pairs[c][0] - 1), c) = Rational(1);
    b(static_cast<std::size_t>(pairs[c][1] - 1), c) = Rational(1);
  }
  return b;
}

ExactMatrix build_line_k9_adjacency() { return build_line_graph_complete(9).adjacency_matrix(); }

}  // namespace ratiocert
