#include <doctest.h>

#include <random>
#include <sstream>

#include "ratiocert/constructions/q_kneser.hpp"
#include "ratiocert/constructions/small_graphs.hpp"
#include "ratiocert/constructions/witt.hpp"
#include "ratiocert/errors.hpp"
#include "ratiocert/graph_core/endomorphism.hpp"
#include "ratiocert/graph_core/graph.hpp"
#include "ratiocert/graph_core/independence.hpp"
#include "ratiocert/graph_core/spectrum.hpp"

using namespace ratiocert;

namespace {

Graph random_graph(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution edge(p);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) edges.emplace_back(i, j);
  return Graph::from_edges(Graph::index_labels(n), edges);
}

VertexSet from_mask(std::size_t n, std::uint32_t mask) {
  VertexSet s(n);
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1u) s.set(i);
  return s;
}

/// All maximum independent sets by scanning every subset.
std::vector<VertexSet> all_maximum_sets(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<VertexSet> best;
  std::size_t size = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const VertexSet s = from_mask(n, mask);
    if (!is_independent(g, s)) continue;
    if (s.count() > size) {
      size = s.count();
      best.clear();
    }
    if (s.count() == size) best.push_back(s);
  }
  std::sort(best.begin(), best.end());
  return best;
}

Graph petersen() { return build_kneser(5, 2).graph; }

/// Every map V -> V that preserves edges, counted by brute force.
std::pair<std::size_t, std::size_t> count_endomorphisms(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> map(n, 0);
  std::size_t automorphisms = 0;
  std::size_t proper = 0;
  while (true) {
    if (check_homomorphism(g, g, map)) {
      std::vector<bool> hit(n, false);
      for (auto x : map) hit[x] = true;
      if (std::count(hit.begin(), hit.end(), true) == static_cast<long>(n)) {
        ++automorphisms;
      } else {
        ++proper;
      }
    }
    std::size_t i = 0;
    while (i < n && ++map[i] == n) map[i++] = 0;
    if (i == n) break;
  }
  return {automorphisms, proper};
}

}  // namespace

TEST_CASE("bitset basics") {
  Bitset b(130);
  b.set(0);
  b.set(64);
  b.set(129);
  CHECK(b.count() == 3);
  CHECK(b.first() == 0);
  CHECK(b.next(1) == 64);
  CHECK(b.next(65) == 129);
  CHECK(b.next(130) == Bitset::npos);
  CHECK(b.indices() == std::vector<std::size_t>{0, 64, 129});
  Bitset c = Bitset::from_indices(130, {64, 100});
  CHECK(b.intersection_count(c) == 1);
  CHECK_FALSE(c.is_subset_of(b));
  c.subtract(b);
  CHECK(c.indices() == std::vector<std::size_t>{100});
}

TEST_CASE("graph construction rejects bad adjacency") {
  std::vector<Bitset> loop(2, Bitset(2));
  loop[0].set(0);
  CHECK_THROWS_AS(Graph({"a", "b"}, loop), Error);
  std::vector<Bitset> asym(2, Bitset(2));
  asym[0].set(1);
  CHECK_THROWS_AS(Graph({"a", "b"}, asym), Error);
  CHECK_THROWS_AS(Graph({"a", "a"}, std::vector<Bitset>(2, Bitset(2))), Error);
  CHECK_THROWS_AS(Graph({"a"}, std::vector<Bitset>(2, Bitset(2))), Error);
}

TEST_CASE("is_independent examples") {
  const Graph g = cycle_graph(5);
  CHECK(is_independent(g, g.empty_set()));
  const auto [a, b] = g.edges().front();
  CHECK_FALSE(is_independent(g, Bitset::from_indices(5, {a, b})));
}

TEST_CASE("independence is x^T A x = 0") {
  std::mt19937 rng(21);
  for (int t = 0; t < 10; ++t) {
    const Graph g = random_graph(rng, 12, 0.3);
    const IntegerMatrix a = g.adjacency_integers();
    for (int u = 0; u < 50; ++u) {
      const VertexSet s = from_mask(12, rng() & 0xfffu);
      std::int64_t q = 0;
      for (auto i : s.indices())
        for (auto j : s.indices()) q += a(i, j).to_int64();
      CHECK(is_independent(g, s) == (q == 0));
    }
  }
}

TEST_CASE("spectrum examples") {
  using P = std::vector<std::pair<std::int64_t, std::size_t>>;
  CHECK(integer_spectrum(complete_graph(4)).pairs == P{{3, 1}, {-1, 3}});
  CHECK(integer_spectrum(build_line_graph_complete(9)).pairs == P{{14, 1}, {5, 8}, {-2, 27}});
  const SpectrumReport w = integer_spectrum(build_witt().graph);
  CHECK(w.pairs == P{{16, 1}, {2, 55}, {-6, 21}});
  CHECK(w.least == -6);
  CHECK(w.multiplicity(2) == 55);
  CHECK(w.multiplicity(3) == 0);
}

TEST_CASE("spectrum errors") {
  CHECK_THROWS_AS(integer_spectrum(path_graph(3)), Error);
  try {
    integer_spectrum(path_graph(3));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotRegular);
  }
  try {
    integer_spectrum(cycle_graph(5));
    FAIL("the 5-cycle has irrational eigenvalues");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNonIntegralSpectrum);
  }
}

TEST_CASE("spectral moments match traces of A, A^2 and A^3") {
  std::vector<Graph> graphs{complete_graph(6), cycle_graph(4), cycle_graph(6), petersen(), build_kneser(7, 3).graph,
                            build_line_graph_complete(6), build_q_kneser(2, 4, 2).graph};
  for (const Graph& g : graphs) {
    const SpectrumReport s = integer_spectrum(g);
    std::int64_t m0 = 0, m1 = 0, m2 = 0, m3 = 0;
    for (auto [l, m] : s.pairs) {
      const auto mi = static_cast<std::int64_t>(m);
      m0 += mi;
      m1 += mi * l;
      m2 += mi * l * l;
      m3 += mi * l * l * l;
    }
    std::int64_t triangles = 0;
    for (auto [i, j] : g.edges()) triangles += static_cast<std::int64_t>(g.neighbors(i).intersection_count(g.neighbors(j)));
    CHECK(m0 == static_cast<std::int64_t>(g.order()));
    CHECK(m1 == 0);
    CHECK(m2 == 2 * static_cast<std::int64_t>(g.edge_count()));
    CHECK(m3 == 2 * triangles);  // each triangle is counted on 3 edges, and tr A^3 = 6 * #triangles
    CHECK(s.pairs.front() == std::pair<std::int64_t, std::size_t>{static_cast<std::int64_t>(*g.valency()), 1});
    CHECK(s.least == s.pairs.back().first);
    for (std::size_t i = 1; i < s.pairs.size(); ++i) CHECK(s.pairs[i].first < s.pairs[i - 1].first);
  }
}

TEST_CASE("brute force examples") {
  CHECK(max_independent_brute(cycle_graph(5)).size == 2);
  const BruteForceResult p = max_independent_brute(petersen());
  CHECK(p.size == 4);
  CHECK(p.count == 5);
  const BruteForceResult q = max_independent_brute(build_q_kneser(2, 4, 2).graph);
  CHECK(q.size == 7);
  CHECK(q.count == 30);
  CHECK(q.witnesses.size() == 30);
}

TEST_CASE("brute force agrees with a scan of all subsets") {
  std::mt19937 rng(22);
  for (int t = 0; t < 25; ++t) {
    const Graph g = random_graph(rng, 6 + t % 9, 0.15 + 0.03 * (t % 10));
    const auto expected = all_maximum_sets(g);
    const BruteForceResult r = max_independent_brute(g);
    CHECK(r.size == expected.front().count());
    CHECK(r.witnesses == expected);
    CHECK(r.count == expected.size());
    BruteForceOptions par;
    par.jobs = 3;
    CHECK(max_independent_brute(g, par).witnesses == expected);
  }
}

TEST_CASE("brute force truncation and budget") {
  BruteForceOptions o;
  o.stop_at = 3;
  const BruteForceResult r = max_independent_brute(petersen(), o);
  CHECK(r.size == 4);
  CHECK(r.truncated);
  CHECK(r.witnesses.empty());
  CHECK(r.count > 3);

  BruteForceOptions tiny;
  tiny.node_budget = 5;
  try {
    max_independent_brute(build_q_kneser(2, 4, 2).graph, tiny);
    FAIL("expected the budget to run out");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kBudgetExceeded);
  }
}

TEST_CASE("endomorphism examples") {
  const EndomorphismReport k3 = endomorphism_search(complete_graph(3), EndomorphismMode::kEnumerateAll);
  CHECK(k3.automorphisms == 6);
  CHECK(k3.proper_endomorphisms == 0);
  CHECK(k3.is_core());
  const EndomorphismReport p3 = endomorphism_search(path_graph(3), EndomorphismMode::kFindProper);
  CHECK_FALSE(p3.is_core());
  REQUIRE(p3.proper_witness);
  CHECK(check_homomorphism(path_graph(3), path_graph(3), *p3.proper_witness));
  const EndomorphismReport l5 = endomorphism_search(build_line_graph_complete(5), EndomorphismMode::kEnumerateAll);
  CHECK(l5.automorphisms == 120);
  CHECK(l5.proper_endomorphisms == 0);
  try {
    endomorphism_search(petersen(), EndomorphismMode::kEnumerateAll, 3);
    FAIL("expected the budget to run out");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kBudgetExceeded);
  }
}

TEST_CASE("endomorphism counts agree with a scan of all maps") {
  std::mt19937 rng(23);
  std::vector<Graph> graphs{path_graph(4), cycle_graph(5), cycle_graph(6), complete_graph(4)};
  for (int t = 0; t < 6; ++t) graphs.push_back(random_graph(rng, 6, 0.45));
  for (const Graph& g : graphs) {
    const auto [aut, proper] = count_endomorphisms(g);
    const EndomorphismReport r = endomorphism_search(g, EndomorphismMode::kEnumerateAll);
    CHECK(r.automorphisms == aut);
    CHECK(r.proper_endomorphisms == proper);
  }
}

TEST_CASE("automorphism counts of vertex-transitive graphs are multiples of v") {
  for (const Graph& g : {cycle_graph(7), petersen(), build_line_graph_complete(4), complete_graph(5)}) {
    const EndomorphismReport r = endomorphism_search(g, EndomorphismMode::kEnumerateAll);
    CHECK(r.automorphisms % g.order() == 0);
  }
}

TEST_CASE("homomorphism checks") {
  const Graph g = petersen();
  std::vector<std::size_t> id(g.order());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  CHECK(check_homomorphism(g, g, id));
  CHECK_FALSE(check_homomorphism(g, g, std::vector<std::size_t>(g.order(), 0)));
  const OneFactorization f = round_robin_one_factorization(4);
  CHECK(check_homomorphism(build_line_graph_complete(4), complete_graph(3), f.line_graph_coloring()));
  CHECK_THROWS_AS(check_homomorphism(g, g, {0, 1}), Error);
}

TEST_CASE("graph text round trip") {
  const Graph g = build_kneser(6, 2).graph;
  std::stringstream ss;
  write_graph_text(ss, g);
  CHECK(ss.str().rfind("15\n", 0) == 0);
  CHECK(read_graph_text(ss) == g);

  std::istringstream bare("3\n0 1\n1 2\n");
  const Graph p = read_graph_text(bare);
  CHECK(p == path_graph(3).from_edges(Graph::index_labels(3), {{0, 1}, {1, 2}}));
  CHECK(p.label(2) == "2");

  std::istringstream bad("3\n0 7\n");
  CHECK_THROWS_AS(read_graph_text(bad), Error);
}
