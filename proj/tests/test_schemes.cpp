#include <doctest.h>

#include <random>

#include "ratiocert/certifier/evidence.hpp"
#include "ratiocert/constructions/p33.hpp"
#include "ratiocert/constructions/small_graphs.hpp"
#include "ratiocert/constructions/witt.hpp"
#include "ratiocert/errors.hpp"
#include "ratiocert/exact_linalg/linalg.hpp"
#include "ratiocert/schemes/scheme.hpp"

using namespace ratiocert;

namespace {

const P33& p33() {
  static const P33 p = build_p33();
  return p;
}

ExactMatrix adjacency(const Graph& g) { return g.adjacency_matrix(); }

std::vector<ExactMatrix> two_class(const Graph& g) {
  const std::size_t n = g.order();
  ExactMatrix other = ExactMatrix::ones(n, n) - ExactMatrix::identity(n) - adjacency(g);
  return {ExactMatrix::identity(n), adjacency(g), other};
}

/// Distance scheme of a connected graph.
AssociationScheme distance_scheme(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint8_t> rel(n * n, 0);
  std::size_t diameter = 0;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::vector<std::size_t> queue{s};
    dist[s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (auto y : g.neighbors(queue[h]).indices())
        if (dist[y] < 0) {
          dist[y] = dist[queue[h]] + 1;
          queue.push_back(y);
        }
    for (std::size_t t = 0; t < n; ++t) {
      rel[s * n + t] = static_cast<std::uint8_t>(dist[t]);
      diameter = std::max<std::size_t>(diameter, dist[t]);
    }
  }
  return scheme_from_relation(n, diameter, rel);
}

Graph cube(std::size_t d) {
  const std::size_t n = std::size_t{1} << d;
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t b = 0; b < d; ++b)
      if (x < (x ^ (std::size_t{1} << b))) e.emplace_back(x, x ^ (std::size_t{1} << b));
  return Graph::from_edges(Graph::index_labels(n), e);
}

std::vector<AssociationScheme> small_schemes() {
  std::vector<AssociationScheme> out;
  out.push_back(verify_axioms({ExactMatrix::identity(4), ExactMatrix::ones(4, 4) - ExactMatrix::identity(4)}));
  out.push_back(distance_scheme(cycle_graph(6)));
  out.push_back(distance_scheme(cycle_graph(4)));
  out.push_back(distance_scheme(cube(3)));
  out.push_back(distance_scheme(cube(4)));
  out.push_back(verify_axioms(two_class(build_kneser(5, 2).graph)));
  out.push_back(distance_scheme(build_kneser(7, 3).graph));
  return out;
}

std::string violated_axiom(std::vector<ExactMatrix> classes) {
  try {
    verify_axioms(std::move(classes));
  } catch (const AxiomViolation& e) {
    return e.axiom();
  }
  return "";
}

}  // namespace

TEST_CASE("complete-graph scheme") {
  const std::size_t v = 5;
  const AssociationScheme s = verify_axioms({ExactMatrix::identity(v), ExactMatrix::ones(v, v) - ExactMatrix::identity(v)});
  CHECK(s.class_count() == 1);
  const Eigenmatrix em = eigenmatrix(s);
  CHECK(em.p == std::vector<std::vector<std::int64_t>>{{1, 4}, {1, -1}});
  CHECK(em.multiplicities == std::vector<std::size_t>{1, 4});
  const IdempotentBasis b = idempotents(s, em);
  CHECK(b.idempotents[0] == Rational(1, 5) * ExactMatrix::ones(v, v));
  CHECK(b.idempotents[1] == ExactMatrix::identity(v) - Rational(1, 5) * ExactMatrix::ones(v, v));
}

TEST_CASE("axiom violations name the failing axiom") {
  const Graph c6 = cycle_graph(6);
  CHECK(violated_axiom(two_class(c6)) == "closure");

  // The 5-cycle is strongly regular, so {I, A, J - I - A} is a genuine scheme.
  CHECK(violated_axiom(two_class(cycle_graph(5))).empty());

  auto bad = two_class(build_kneser(5, 2).graph);
  bad[1](0, 1) = Rational(2);
  CHECK(violated_axiom(bad) == "zero_one");
  auto not_identity = two_class(cycle_graph(5));
  std::swap(not_identity[0], not_identity[1]);
  CHECK(violated_axiom(not_identity) == "identity");
  auto overlap = two_class(cycle_graph(5));
  overlap[2] = overlap[2] + overlap[1];
  CHECK(violated_axiom(overlap) == "partition");

  // A directed 3-cycle and its reverse: a partition, but not symmetric.
  ExactMatrix d(3, 3);
  d(0, 1) = d(1, 2) = d(2, 0) = Rational(1);
  CHECK(violated_axiom({ExactMatrix::identity(3), d, d.transpose()}) == "symmetric");
  CHECK(violated_axiom(two_class(path_graph(3))) == "regular");

  try {
    verify_axioms(two_class(c6));
  } catch (const AxiomViolation& e) {
    CHECK(e.kind() == ErrorKind::kAxiomViolation);
    CHECK(e.row() < 6);
    CHECK(e.col() < 6);
  }
}

TEST_CASE("P(3^3) scheme and its eigenmatrix") {
  const auto& s = p33().scheme;
  CHECK(s.vertex_count() == 280);
  CHECK(s.class_count() == 4);
  CHECK(s.valencies() == std::vector<std::size_t>{1, 36, 162, 54, 27});
  const Eigenmatrix em = eigenmatrix(s, p33_eigenspace_order());
  const std::vector<std::vector<std::int64_t>> table{
      {1, 36, 162, 54, 27}, {1, -12, -6, 6, 11}, {1, 8, -6, -9, 6}, {1, 2, -6, 6, -3}, {1, -4, 12, -6, -3}};
  CHECK(em.p == table);
  CHECK(em.multiplicities == std::vector<std::size_t>{1, 27, 48, 120, 84});
  CHECK(em.eigenspace_of(-12) == std::optional<std::size_t>{1});

  const IdempotentBasis b = idempotents(s, em);
  CHECK(b.idempotents[0] == Rational(1, 280) * ExactMatrix::ones(280, 280));
  const ExactMatrix m = build_p33_M(p33().partitions);
  CHECK(m * m.transpose() == Rational(630) * b.idempotents[0] + Rational(70) * b.idempotents[1]);
}

TEST_CASE("eigenspaces are the common eigenspaces of all classes") {
  std::vector<AssociationScheme> schemes = small_schemes();
  for (const auto& s : schemes) {
    const Eigenmatrix em = eigenmatrix(s);
    std::size_t total = 0;
    for (std::size_t j = 0; j < em.size(); ++j) {
      ExactMatrix stacked(0, s.vertex_count());
      for (std::size_t i = 0; i <= s.class_count(); ++i) {
        ExactMatrix shifted = s.matrix(i);
        for (std::size_t x = 0; x < s.vertex_count(); ++x) shifted(x, x) -= Rational(em.p[j][i]);
        stacked = stacked.vconcat(shifted);
      }
      CHECK(linalg::nullspace_basis(stacked).cols() == em.multiplicities[j]);
      total += em.multiplicities[j];
    }
    CHECK(total == s.vertex_count());
    std::vector<std::int64_t> valencies(s.valencies().begin(), s.valencies().end());
    CHECK(em.p[0] == valencies);
  }
}

TEST_CASE("idempotents equal the orthogonal projections onto the eigenspaces") {
  for (const auto& s : small_schemes()) {
    const Eigenmatrix em = eigenmatrix(s);
    const IdempotentBasis b = idempotents(s, em);
    ExactMatrix sum(s.vertex_count(), s.vertex_count());
    for (std::size_t j = 0; j < em.size(); ++j) {
      CHECK(b.idempotents[j] == orthogonal_projection(em.bases[j]));
      CHECK(b.idempotents[j] * b.idempotents[j] == b.idempotents[j]);
      for (std::size_t i = 0; i <= s.class_count(); ++i)
        CHECK(s.matrix(i) * b.idempotents[j] == Rational(em.p[j][i]) * b.idempotents[j]);
      sum += b.idempotents[j];
    }
    CHECK(sum == ExactMatrix::identity(s.vertex_count()));
    CHECK((b.idempotents[0] * b.idempotents[em.size() - 1]).is_zero());
  }
}

TEST_CASE("irrational eigenvalues are reported") {
  try {
    eigenmatrix(distance_scheme(cycle_graph(7)));
    FAIL("the 7-cycle has irrational eigenvalues");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNonIntegralSpectrum);
  }
}

TEST_CASE("Witt graph as a two-class scheme") {
  const Witt w = build_witt();
  const AssociationScheme s = verify_axioms(two_class(w.graph));
  const Eigenmatrix em = eigenmatrix(s);
  CHECK(em.p[0] == std::vector<std::int64_t>{1, 16, 60});
  std::vector<std::pair<std::int64_t, std::size_t>> eig;
  for (std::size_t j = 0; j < em.size(); ++j) eig.emplace_back(em.p[j][1], em.multiplicities[j]);
  CHECK(eig == std::vector<std::pair<std::int64_t, std::size_t>>{{16, 1}, {2, 55}, {-6, 21}});

  VertexSet pencil(77);
  for (std::size_t b = 0; b < 77; ++b)
    if (!w.M(b, 0).is_zero()) pencil.set(b);
  const auto a = inner_distribution(s, pencil);
  CHECK(a[0] == Rational(1));
  CHECK(a[1] == Rational(0));
  CHECK(a[2] == Rational(20));
}

TEST_CASE("Seidel's identity on random vectors") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> entry(-5, 5);
  const auto schemes = small_schemes();
  int checked = 0;
  for (const auto& s : schemes) {
    const Eigenmatrix em = eigenmatrix(s);
    const IdempotentBasis b = idempotents(s, em);
    const int reps = checked + 15 <= 100 ? 15 : 100 - checked;
    for (int t = 0; t < reps; ++t, ++checked) {
      RationalVector x(s.vertex_count());
      for (auto& e : x) e = Rational(Integer(entry(rng)), Integer(1 + rng() % 3));
      const SeidelResult r = seidel_check(s, em, b, x);
      CHECK(r.equal);
      CHECK(r.lhs == r.rhs);
      CHECK(r.lhs_coefficients == r.rhs_coefficients);
    }
  }
  CHECK(checked == 100);
}

TEST_CASE("Seidel examples") {
  const AssociationScheme k = verify_axioms({ExactMatrix::identity(4), ExactMatrix::ones(4, 4) - ExactMatrix::identity(4)});
  const Eigenmatrix em = eigenmatrix(k);
  const IdempotentBasis b = idempotents(k, em);
  const RationalVector ones(4, Rational(1));
  const SeidelResult r1 = seidel_check(k, em, b, ones);
  CHECK(r1.equal);
  CHECK(r1.lhs == ExactMatrix::ones(4, 4));
  RationalVector e0(4);
  e0[0] = Rational(1);
  const SeidelResult r2 = seidel_check(k, em, b, e0);
  CHECK(r2.equal);
  CHECK(r2.lhs == Rational(1, 4) * ExactMatrix::identity(4));
  CHECK_THROWS_AS(seidel_check(k, em, b, RationalVector(3)), Error);

  const auto& s = p33().scheme;
  const Eigenmatrix pe = eigenmatrix(s, p33_eigenspace_order());
  const IdempotentBasis pb = idempotents(s, pe);
  RationalVector x(280);
  for (auto i : p33_star(p33(), 1, 2).indices()) x[i] = Rational(1);
  const SeidelResult r = seidel_check(s, pe, pb, x);
  CHECK(r.equal);
  CHECK(r.lhs_coefficients == std::vector<Rational>{Rational(1, 4), 0, Rational(1, 18), Rational(1, 12), Rational(5, 36)});
}

TEST_CASE("inner distributions") {
  const auto& s = p33().scheme;
  VertexSet one(280);
  one.set(17);
  CHECK(inner_distribution(s, one) == std::vector<Rational>{1, 0, 0, 0, 0});
  CHECK(inner_distribution(s, p33_star(p33(), 1, 2)) == std::vector<Rational>{1, 0, 36, 18, 15});
  try {
    inner_distribution(s, VertexSet(280));
    FAIL("empty set accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kEmptySet);
  }
}

TEST_CASE("intersection numbers and Bose-Mesner products") {
  for (const auto& s : small_schemes()) {
    const std::size_t n = s.class_count() + 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const ExactMatrix prod = s.matrix(i) * s.matrix(j);
        ExactMatrix expected(s.vertex_count(), s.vertex_count());
        for (std::size_t k = 0; k < n; ++k) expected += Rational(s.intersection_number(i, j, k)) * s.matrix(k);
        CHECK(prod == expected);
        std::vector<Rational> a(n), b(n);
        a[i] = Rational(1);
        b[j] = Rational(1);
        CHECK(s.combination(s.multiply(a, b)) == prod);
      }
  }
}
