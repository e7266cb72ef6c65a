#include <doctest.h>

#include "ratiocert/certifier/certificate.hpp"
#include "ratiocert/certifier/enumerate.hpp"
#include "ratiocert/certifier/evidence.hpp"
#include "ratiocert/certifier/families.hpp"
#include "ratiocert/certifier/ratio.hpp"
#include "ratiocert/constructions/p33.hpp"
#include "ratiocert/constructions/q_kneser.hpp"
#include "ratiocert/constructions/small_graphs.hpp"
#include "ratiocert/constructions/witt.hpp"
#include "ratiocert/errors.hpp"
#include "ratiocert/exact_linalg/linalg.hpp"
#include "ratiocert/graph_core/independence.hpp"
#include "ratiocert/graph_core/spectrum.hpp"

using namespace ratiocert;

namespace {

const P33& p33() {
  static const P33 p = build_p33();
  return p;
}

const ExactMatrix& p33_M() {
  static const ExactMatrix m = build_p33_M(p33().partitions);
  return m;
}

const Witt& witt() {
  static const Witt w = build_witt();
  return w;
}

VertexSet column_support(const ExactMatrix& m, std::size_t j) {
  VertexSet s(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!m(i, j).is_zero()) s.set(i);
  return s;
}

RationalVector indicator(const VertexSet& s) {
  RationalVector x(s.size());
  for (auto i : s.indices()) x[i] = Rational(1);
  return x;
}

/// L(K_n) with M = [1 | basis of the tau-eigenspace].
std::pair<Graph, ExactMatrix> line_graph_with_M(std::size_t n) {
  Graph g = build_line_graph_complete(n);
  const std::int64_t tau = integer_spectrum(g).least;
  ExactMatrix a = g.adjacency_matrix();
  for (std::size_t i = 0; i < g.order(); ++i) a(i, i) -= Rational(tau);
  return {g, ExactMatrix::ones(g.order(), 1).hconcat(linalg::nullspace_basis(a))};
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::kParse;
}

}  // namespace

TEST_CASE("ratio bound examples") {
  CHECK(ratio_bound(280, 36, -12).bound == Rational(70));
  CHECK(ratio_bound(77, 16, -6).bound == Rational(21));
  CHECK(ratio_bound(9, 8, -1).bound == Rational(1));
  CHECK(ratio_bound(10, 6, -2).bound == Rational(5, 2));
  CHECK_FALSE(ratio_bound(280, 36, -12).tight);
  CHECK(kind_of([] { ratio_bound(10, 3, 0); }) == ErrorKind::kInvalidSpectrum);
  CHECK(kind_of([] { ratio_bound(10, 0, -1); }) == ErrorKind::kInvalidSpectrum);
}

TEST_CASE("tightness eigenvector check") {
  CHECK(tightness_eigenvector_check(p33().graph, p33_star(p33(), 1, 2), -12));
  CHECK(tightness_eigenvector_check(witt().graph, column_support(witt().M, 0), -6));
  const Graph k2 = complete_graph(2);
  CHECK(tightness_eigenvector_check(k2, Bitset::from_indices(2, {0}), -1));

  VertexSet small = p33_star(p33(), 1, 2);
  small.reset(small.first());
  CHECK(kind_of([&] { tightness_eigenvector_check(p33().graph, small, -12); }) == ErrorKind::kNotTight);
  CHECK(kind_of([] { tightness_eigenvector_check(path_graph(3), Bitset::from_indices(3, {0, 2}), -1); }) ==
        ErrorKind::kNotRegular);
  // The right size but not independent: A(x - c1) is not tau(x - c1).
  const Graph c4 = cycle_graph(4);
  CHECK_FALSE(tightness_eigenvector_check(c4, Bitset::from_indices(4, {0, 1}), -2));
}

TEST_CASE("column-space membership") {
  const ExactMatrix& m = p33_M();
  const RationalVector c0 = m.column_vector(0);
  const auto h = colspace_membership(m, c0);
  REQUIRE(h);
  CHECK(m * *h == c0);
  const RationalVector s12 = indicator(p33_star(p33(), 1, 2));
  const auto h12 = colspace_membership(m, s12);
  REQUIRE(h12);
  CHECK(m * *h12 == s12);
  RationalVector e0(280);
  e0[0] = Rational(1);
  CHECK_FALSE(colspace_membership(m, e0).has_value());
}

TEST_CASE("column-space argument") {
  const ColspaceArgument a = colspace_rank_argument(p33().graph, p33_M(), -12, 27);
  CHECK(a.ones_in_colspace);
  CHECK(a.columns_are_shifted_eigenvectors);
  CHECK(a.rank_M == 28);
  CHECK(a.holds());
  const ColspaceArgument w = colspace_rank_argument(witt().graph, witt().M, -6, 21);
  CHECK(w.holds());
  // An unrelated matrix fails the eigenvector condition.
  CHECK_FALSE(colspace_rank_argument(witt().graph, ExactMatrix::identity(77), -6, 21).holds());
}

TEST_CASE("seed pair with a seven-cell meet") {
  const auto& p = p33();
  std::size_t b = 1;
  while (p.scheme.relation(0, b) != 2) ++b;
  CHECK(meet_cells(p.partitions[0], p.partitions[b]) == 7);
  EnumerateOptions o;
  o.minimize_c0 = true;
  const EnumerationReport r = colspace_enumerate(p.graph, p33_M(), Bitset::from_indices(280, {0, b}), 70, o);
  CHECK(r.rank_C == 6);
  CHECK(r.candidates_tested == 64);
  CHECK(r.zero_one_candidates == 3);
  REQUIRE(r.valid_sets.size() == 2);
  std::vector<VertexSet> expected;
  for (const auto& pr : pairs_lex(9)) {
    const VertexSet s = p33_star(p, pr[0], pr[1]);
    if (s.test(0) && s.test(b)) expected.push_back(s);
  }
  std::sort(expected.begin(), expected.end());
  CHECK(r.valid_sets == expected);
  REQUIRE(r.h_vectors.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) CHECK(p33_M() * r.h_vectors[i] == indicator(r.valid_sets[i]));
  CHECK_FALSE(r.c0_rows.empty());
  CHECK(r.c0_rows.size() <= 3);
  CHECK(r.seed_description == "{" + p.partitions[0].label() + ", " + p.partitions[b].label() + "}");
}

TEST_CASE("enumeration from one Witt block gives the pencils through its points") {
  const Witt& w = witt();
  const EnumerationReport r = colspace_enumerate(w.graph, w.M, Bitset::from_indices(77, {0}), 21);
  std::vector<VertexSet> expected;
  for (int pt : w.blocks[0].points) expected.push_back(column_support(w.M, static_cast<std::size_t>(pt - 1)));
  std::sort(expected.begin(), expected.end());
  CHECK(r.valid_sets == expected);
  CHECK(r.rank_C == 6);
}

TEST_CASE("enumeration from one 2-space of GF(2)^5 gives the stars of its three 1-spaces") {
  const QKneser qk = build_q_kneser(2, 5, 2);
  const ExactMatrix m = build_W1k(2, 5, 2).transpose();
  const EnumerationReport r = colspace_enumerate(qk.graph, m, Bitset::from_indices(155, {0}), 15);
  const auto lines = enumerate_subspaces(2, 5, 1);
  std::vector<VertexSet> expected;
  for (std::size_t p = 0; p < lines.size(); ++p)
    if (contained_in(lines[p], qk.subspaces[0])) expected.push_back(column_support(m, p));
  std::sort(expected.begin(), expected.end());
  CHECK(expected.size() == 3);
  CHECK(r.valid_sets == expected);
}

TEST_CASE("enumeration from a seed agrees with brute force on the sets through it") {
  std::vector<std::pair<Graph, ExactMatrix>> cases;
  {
    KneserGraph k = build_kneser(5, 2);
    cases.emplace_back(k.graph, k.star_matrix.transpose());
    KneserGraph k7 = build_kneser(7, 3);
    cases.emplace_back(k7.graph, k7.star_matrix.transpose());
    cases.emplace_back(build_q_kneser(2, 4, 2).graph, build_W1k(2, 4, 2).transpose());
    cases.push_back(line_graph_with_M(6));
    cases.push_back(line_graph_with_M(8));
  }
  for (const auto& [g, m] : cases) {
    const BruteForceResult b = max_independent_brute(g);
    for (std::size_t seed = 0; seed < g.order(); seed += 3) {
      const VertexSet s = Bitset::from_indices(g.order(), {seed});
      std::vector<VertexSet> expected;
      for (const auto& w : b.witnesses)
        if (w.test(seed)) expected.push_back(w);
      EnumerateOptions one;
      EnumerateOptions many;
      many.jobs = 4;
      const EnumerationReport r = colspace_enumerate(g, m, s, b.size, one);
      CHECK(r.valid_sets == expected);
      CHECK(colspace_enumerate(g, m, s, b.size, many).valid_sets == expected);
      for (const auto& v : r.valid_sets) {
        CHECK(is_independent(g, v));
        CHECK(v.count() == b.size);
        CHECK(s.is_subset_of(v));
      }
    }
  }
}

TEST_CASE("enumeration errors") {
  const auto [g, m] = line_graph_with_M(8);
  EnumerateOptions capped;
  capped.rank_cap = 2;
  CHECK(kind_of([&] { colspace_enumerate(g, m, Bitset::from_indices(g.order(), {0}), 4, capped); }) ==
        ErrorKind::kRankTooLarge);
  const auto [a, b] = g.edges().front();
  CHECK(kind_of([&] { colspace_enumerate(g, m, Bitset::from_indices(g.order(), {a, b}), 4); }) == ErrorKind::kDimension);
}

TEST_CASE("driver over seed families") {
  const Witt& w = witt();
  const DriverReport d = enumerate_all_max_independent(w.graph, w.M, 21, SeedStrategy{}, nullptr);
  CHECK(d.sets.size() == 22);
  CHECK(d.seeds == 77);
  EnumerateOptions par;
  par.jobs = 3;
  CHECK(enumerate_all_max_independent(w.graph, w.M, 21, SeedStrategy{}, nullptr, par).sets == d.sets);

  const QKneser qk = build_q_kneser(2, 4, 2);
  const DriverReport q = enumerate_all_max_independent(qk.graph, build_W1k(2, 4, 2).transpose(), 7, SeedStrategy{}, nullptr);
  CHECK(q.sets.size() == 30);
  CHECK(q.sets == max_independent_brute(qk.graph).witnesses);
}

TEST_CASE("seed strategy strings") {
  CHECK(SeedStrategy::parse("singletons").kind == SeedStrategy::Kind::kSingletons);
  const SeedStrategy s = SeedStrategy::parse("pairs:A2");
  CHECK(s.kind == SeedStrategy::Kind::kPairsInClass);
  CHECK(s.cls == 2);
  CHECK(s.to_string() == "pairs:A2");
  CHECK(SeedStrategy::parse("pairs:3").cls == 3);
  for (const char* bad : {"pairs", "pairs:A0", "pairs:B2", "everything", ""})
    CHECK(kind_of([&] { SeedStrategy::parse(bad); }) == ErrorKind::kParse);
}

TEST_CASE("inner distribution checks") {
  const auto& s = p33().scheme;
  const std::vector<Rational> expected{1, 0, 36, 18, 15};
  CHECK(verify_inner_distribution(s, p33_star(p33(), 1, 2), expected));
  CHECK(verify_inner_distribution(s, Bitset::from_indices(280, {5}), {1, 0, 0, 0, 0}));
  CHECK_FALSE(verify_inner_distribution(s, p33_star(p33(), 1, 2), {1, 0, 36, 15, 18}));

  const Eigenmatrix em = eigenmatrix(s, p33_eigenspace_order());
  const IdempotentBasis b = idempotents(s, em);
  CHECK(predicted_tight_inner_distribution(s, em, b, 1, Rational(70)) == expected);
}

TEST_CASE("core evidence") {
  const CoreEvidenceReport r = p33_core_evidence(p33());
  CHECK(r.all_pass());
  CHECK(r.quadruple_member == "123|456|789");
  CHECK(r.slice_sizes == std::vector<std::size_t>(7, 10));
  CHECK(r.pairwise_intersections.size() == 36 * 36);
  for (const auto& pi : r.pairwise_intersections) {
    if (pi.first == std::array<int, 2>{1, 2} && pi.second == std::array<int, 2>{3, 4}) CHECK(pi.count == 20);
    if (pi.first == std::array<int, 2>{1, 2} && pi.second == std::array<int, 2>{1, 3}) CHECK(pi.count == 10);
    CHECK((pi.count == 70 || pi.count == 10 || pi.count == 20));
  }
}

TEST_CASE("support localization") {
  const QKneser qk = build_q_kneser(2, 5, 2);
  const ExactMatrix m = build_W1k(2, 5, 2).transpose();
  const VertexSet star = column_support(m, 4);
  const SupportLocalization q = support_localization_check(m, qk.graph, star, star.first());
  CHECK(q.unique);
  CHECK(q.holds());
  CHECK(q.support == std::vector<std::size_t>{4});

  const Witt& w = witt();
  const VertexSet pencil = column_support(w.M, 9);
  const std::size_t alpha = pencil.first();
  const SupportLocalization s = support_localization_check(w.M, w.graph, pencil, alpha, w.graph.neighbors(alpha).indices());
  CHECK(s.holds());
  CHECK(s.complement_rank_fact == std::optional<bool>{true});
  CHECK(s.support == std::vector<std::size_t>{9});

  const VertexSet s12 = p33_star(p33(), 1, 2);
  const SupportLocalization p = support_localization_check(p33_M(), p33().graph, s12, s12.first());
  CHECK_FALSE(p.unique);
  CHECK(p.holds());
  CHECK(p.support == std::vector<std::size_t>{pair_index(9, 1, 2)});

  RationalVector e(280);
  CHECK(kind_of([&] { support_localization_check(p33_M(), p33().graph, Bitset::from_indices(280, {0}), 0); }) ==
        ErrorKind::kDimension);
}

TEST_CASE("certificate JSON round trip") {
  Certificate c;
  c.tool_version = "9.9.9";
  c.family = "toy";
  c.parameters = {{"v", "5"}, {"k", "2"}};
  c.spectrum = SpectrumReport{{{3, 1}, {1, 5}, {-2, 4}}, -2};
  c.ratio = ratio_bound(10, 6, -2);
  c.method = "brute_force";
  c.enumeration = {3, 2, 12, 5, 4};
  c.max_independent_sets = {{"1,2", "1,3"}, {"2,3", "2,4"}};
  c.check("first", true, "detail");
  c.check("second", false);
  c.timings = {{"stage", 1.5}};
  c.notes = {"a note"};
  c.finalize();
  CHECK(c.status == "failed");
  const std::string json = certificate_to_json(c);
  CHECK(json.find("\"bound\": \"5/2\"") != std::string::npos);
  const Certificate back = certificate_from_json(json);
  CHECK(certificate_to_json(back) == json);
  CHECK(back.ratio->bound == Rational(5, 2));
  CHECK(back.identity_checks == c.identity_checks);
  CHECK(back.enumeration == c.enumeration);

  c.identity_checks[1].pass = true;
  c.finalize();
  CHECK(c.status == "certified");
  c.error = "BudgetExceeded";
  c.finalize();
  CHECK(c.status == "failed");

  CHECK(kind_of([] { certificate_from_json("{\"family\": 3}"); }) == ErrorKind::kParse);
  CHECK(kind_of([] { certificate_from_json("not json"); }) == ErrorKind::kParse);
}

TEST_CASE("family certificates") {
  FamilyRequest w{"witt"};
  const Certificate cw = certify_family(w);
  CHECK(cw.status == "certified");
  CHECK(cw.ratio->bound == Rational(21));
  CHECK(cw.max_independent_sets.size() == 22);
  CHECK(cw.timings.empty());

  FamilyRequest q{"q_kneser", 2, 5, 2};
  const Certificate cq = certify_family(q);
  CHECK(cq.status == "certified");
  CHECK(cq.ratio->bound == Rational(15));
  CHECK(cq.max_independent_sets.size() == 31);
  CHECK(cq.parameters == std::vector<std::pair<std::string, std::string>>{{"q", "2"}, {"v", "5"}, {"k", "2"}});

  CertifyOptions par;
  par.jobs = 4;
  CHECK(certificate_to_json(certify_family(q, par)) == certificate_to_json(cq));

  CertifyOptions capped;
  capped.rank_cap = 3;
  const Certificate cc = certify_family(w, capped);
  CHECK(cc.status == "failed");
  CHECK(cc.error == "RankTooLarge");

  CHECK(kind_of([] { certify_family(FamilyRequest{"nope"}); }) == ErrorKind::kParse);
  CHECK(kind_of([] { certify_family(FamilyRequest{"q_kneser", 2, 3, 2}); }) == ErrorKind::kParse);
  CertifyOptions pairs;
  pairs.seeds = SeedStrategy::parse("pairs:A1");
  CHECK(kind_of([&] { certify_family(w, pairs); }) == ErrorKind::kParse);
}

TEST_CASE("certified maximum sets equal the brute-force witness lists") {
  std::vector<FamilyRequest> requests{{"kneser", 2, 5, 2}, {"kneser", 2, 7, 3}, {"q_kneser", 2, 4, 2}};
  for (std::size_t n = 3; n <= 7; ++n) requests.push_back({"line_complete", 2, 0, 0, n});
  for (const auto& r : requests) {
    CAPTURE(r.family);
    CAPTURE(r.n);
    const Certificate c = certify_family(r);
    CHECK(c.status == "certified");
    const BuiltFamily f = build_family(r);
    const BruteForceResult b = max_independent_brute(f.graph);
    std::vector<std::vector<std::string>> labels;
    for (const auto& s : b.witnesses) labels.push_back(f.graph.labels_of(s));
    CHECK(c.max_independent_sets == labels);
  }
}
