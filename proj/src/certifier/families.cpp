#include "ratiocert/certifier/families.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <sstream>

#include "ratiocert/certifier/evidence.hpp"
#include "ratiocert/certifier/ratio.hpp"
#include "ratiocert/constructions/p33.hpp"
#include "ratiocert/constructions/q_kneser.hpp"
#include "ratiocert/constructions/small_graphs.hpp"
#include "ratiocert/constructions/witt.hpp"
#include "ratiocert/errors.hpp"
#include "ratiocert/exact_linalg/linalg.hpp"
#include "ratiocert/graph_core/endomorphism.hpp"
#include "ratiocert/graph_core/independence.hpp"
#include "ratiocert/graph_core/spectrum.hpp"
#include "ratiocert/schemes/scheme.hpp"

namespace ratiocert {

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  Stopwatch(Certificate& cert, bool enabled) : cert_(cert), enabled_(enabled), start_(Clock::now()) {}
  void lap(const std::string& stage) {
    const auto now = Clock::now();
    if (enabled_) cert_.timings.emplace_back(stage, std::chrono::duration<double, std::milli>(now - start_).count());
    start_ = now;
  }

 private:
  Certificate& cert_;
  bool enabled_;
  Clock::time_point start_;
};

template <typename T>
std::string join(const std::vector<T>& xs, const char* sep = ", ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

std::string rationals(const std::vector<Rational>& xs) {
  std::vector<std::string> s;
  for (const auto& x : xs) s.push_back(x.to_string());
  return "(" + join(s) + ")";
}

std::string spectrum_string(const SpectrumReport& s) {
  std::vector<std::string> parts;
  for (auto [l, m] : s.pairs) parts.push_back(std::to_string(l) + "^" + std::to_string(m));
  return join(parts, " ");
}

using Pairs = std::vector<std::pair<std::int64_t, std::size_t>>;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t double_factorial(std::uint64_t n) {
  std::uint64_t r = 1;
  for (; n > 1; n -= 2) r *= n;
  return r;
}

Integer power(std::int64_t base, std::size_t e) {
  Integer r(1);
  for (std::size_t i = 0; i < e; ++i) r = r * Integer(base);
  return r;
}

RationalVector indicator(const VertexSet& s) {
  RationalVector x(s.size());
  for (auto i : s.indices()) x[i] = Rational(1);
  return x;
}

std::vector<Rational> row_sums(const ExactMatrix& m) {
  std::vector<Rational> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& x : m.row(i)) out[i] += x;
  return out;
}

std::vector<Rational> col_sums(const ExactMatrix& m) { return row_sums(m.transpose()); }

bool all_equal(const std::vector<Rational>& xs, const Rational& value) {
  return std::all_of(xs.begin(), xs.end(), [&](const Rational& x) { return x == value; });
}

/// Vertices x with M(x, j) != 0.
VertexSet column_support(const ExactMatrix& m, std::size_t j) {
  VertexSet s(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!m(i, j).is_zero()) s.set(i);
  return s;
}

std::vector<VertexSet> sorted(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end());
  return sets;
}

struct Stage {
  Certificate& cert;
  const CertifyOptions& opts;
  Stopwatch& watch;
};

/// Spectrum and ratio bound of a regular graph; returns tau.
std::int64_t spectrum_and_bound(Stage& st, const Graph& g) {
  const SpectrumReport s = integer_spectrum(g);
  st.cert.spectrum = s;
  const auto k = static_cast<std::int64_t>(*g.valency());
  st.cert.ratio = ratio_bound(g.order(), k, s.least);
  st.cert.ratio->tight = st.cert.ratio->bound.is_integer();
  st.watch.lap("spectrum");
  return s.least;
}

/// Maximum independent sets: column-space enumeration when the bound is an
/// integer and the column-space argument holds, branch and bound otherwise.
std::vector<VertexSet> enumerate_max_sets(Stage& st, const Graph& g, const ExactMatrix& m, const SeedStrategy& seeds,
                                          const AssociationScheme* scheme) {
  auto& cert = st.cert;
  auto& ratio = *cert.ratio;
  const std::int64_t tau = ratio.least_eigenvalue;
  bool use_colspace = ratio.bound.is_integer();
  if (use_colspace) {
    const std::size_t mult = cert.spectrum->multiplicity(tau);
    const ColspaceArgument arg = colspace_rank_argument(g, m, tau, mult);
    const std::string detail = "rank(M) = " + std::to_string(arg.rank_M) + ", mult(" + std::to_string(tau) +
                               ") = " + std::to_string(mult) + ", 1 in col(M): " + (arg.ones_in_colspace ? "yes" : "no") +
                               ", columns are shifted eigenvectors: " +
                               (arg.columns_are_shifted_eigenvectors ? "yes" : "no");
    if (arg.holds()) {
      cert.check("colspace_argument", true, detail);
    } else {
      use_colspace = false;
      cert.notes.push_back("column-space argument does not apply (" + detail + "); maximum sets found by branch and bound");
    }
  } else {
    cert.notes.push_back("ratio bound " + ratio.bound.to_string() +
                         " is not an integer; maximum sets found by branch and bound");
  }
  st.watch.lap("colspace_argument");

  if (use_colspace) {
    if (seeds.kind == SeedStrategy::Kind::kPairsInClass && !scheme)
      throw Error(ErrorKind::kParse, "seed strategy " + seeds.to_string() + " needs an association scheme");
    EnumerateOptions eo;
    eo.rank_cap = st.opts.rank_cap;
    eo.jobs = st.opts.jobs;
    eo.compute_h = false;
    const auto target = static_cast<std::size_t>(ratio.bound.num().to_int64());
    DriverReport d = enumerate_all_max_independent(g, m, target, seeds, scheme, eo);
    cert.method = "colspace_enumeration";
    cert.seed_strategy = seeds.to_string();
    cert.enumeration = {d.seeds, d.max_rank_C, d.candidates_tested, d.zero_one_candidates, d.valid_hits};
    st.watch.lap("enumeration");
    if (!d.sets.empty()) return d.sets;
    cert.notes.push_back("no independent set meets the ratio bound; maximum sets found by branch and bound");
  }

  BruteForceOptions bo;
  bo.node_budget = st.opts.node_budget;
  bo.jobs = st.opts.jobs;
  BruteForceResult b = max_independent_brute(g, bo);
  cert.method = "brute_force";
  cert.seed_strategy.clear();
  ratio.tight = Rational(static_cast<std::int64_t>(b.size)) == ratio.bound;
  st.watch.lap("enumeration");
  return b.witnesses;
}

/// Common checks on the enumerated sets, then records them.
void record_sets(Stage& st, const Graph& g, const std::vector<VertexSet>& sets) {
  auto& cert = st.cert;
  const std::size_t size = sets.empty() ? 0 : sets.front().count();
  bool ok = !sets.empty();
  for (const auto& s : sets) ok = ok && s.count() == size && is_independent(g, s);
  cert.check("max_sets_independent", ok, std::to_string(sets.size()) + " sets of size " + std::to_string(size));
  if (cert.ratio->tight) {
    bool tight = true;
    for (const auto& s : sets) tight = tight && tightness_eigenvector_check(g, s, cert.ratio->least_eigenvalue);
    cert.check("tightness_eigenvector_all_sets", tight, "A(x - (|S|/v)1) = tau (x - (|S|/v)1) for every set");
  }
  for (const auto& s : sets) cert.max_independent_sets.push_back(g.labels_of(s));
}

void brute_force_agreement(Stage& st, const Graph& g, const std::vector<VertexSet>& sets) {
  if (st.cert.method == "brute_force") {
    st.cert.notes.push_back("branch and bound is the enumeration method; no separate cross-check");
    return;
  }
  BruteForceOptions bo;
  bo.node_budget = st.opts.node_budget;
  bo.jobs = st.opts.jobs;
  const BruteForceResult b = max_independent_brute(g, bo);
  const bool same = !sets.empty() && b.size == sets.front().count() && b.witnesses == sets;
  st.cert.check("brute_force_agreement", same,
                "branch and bound: alpha = " + std::to_string(b.size) + ", " + std::to_string(b.count) + " maximum sets");
  st.watch.lap("brute_force");
}

// ---------------------------------------------------------------- P(3^3)

const std::int64_t kP33Table[5][5] = {
    {1, 36, 162, 54, 27}, {1, -12, -6, 6, 11}, {1, 8, -6, -9, 6}, {1, 2, -6, 6, -3}, {1, -4, 12, -6, -3}};
const std::size_t kP33Multiplicities[5] = {1, 27, 48, 120, 84};

void certify_p33(Stage& st) {
  auto& cert = st.cert;
  const P33 p = build_p33();
  const auto& scheme = p.scheme;
  const Graph& g = p.graph;
  const ExactMatrix M = build_p33_M(p.partitions);
  st.watch.lap("construct");

  const auto& val = scheme.valencies();
  if (!st.opts.enumerate_only) {
    cert.check("vertex_count_280", g.order() == 280, std::to_string(g.order()) + " partitions");
    cert.check("valencies_1_36_162_54_27", val == std::vector<std::size_t>{1, 36, 162, 54, 27}, join(val));
    verify_axioms(scheme.classes());
    cert.check("scheme_axioms", true, "zero_one, identity, partition, symmetric, regular, closure, commutative");
    st.watch.lap("axioms");
  }

  const std::int64_t tau = spectrum_and_bound(st, g);
  const Pairs expected_spectrum{{36, 1}, {8, 48}, {2, 120}, {-4, 84}, {-12, 27}};
  cert.check("spectrum_A1", cert.spectrum->pairs == expected_spectrum, spectrum_string(*cert.spectrum));
  cert.check("least_eigenvalue_-12_multiplicity_27", tau == -12 && cert.spectrum->multiplicity(-12) == 27);
  cert.check("ratio_bound_70", cert.ratio->bound == Rational(70), cert.ratio->bound.to_string());

  std::optional<Eigenmatrix> em;
  std::optional<IdempotentBasis> basis;
  std::size_t tau_space = 1;
  if (!st.opts.enumerate_only) {
    em = eigenmatrix(scheme, p33_eigenspace_order());
    bool table = em->size() == 5;
    for (std::size_t j = 0; table && j < 5; ++j) {
      table = em->multiplicities[j] == kP33Multiplicities[j] &&
              em->p[j] == std::vector<std::int64_t>(kP33Table[j], kP33Table[j] + 5);
    }
    cert.check("eigenmatrix_table", table, "rows (m_j | p_0(j) .. p_4(j)) equal the published modified matrix of eigenvalues");
    basis = idempotents(scheme, *em);
    cert.check("idempotents_certified", true, "E_jE_k = delta_jk E_j, sum E_j = I, A_iE_j = p_i(j)E_j, tr E_j = m_j");
    tau_space = *em->eigenspace_of(tau);
    st.watch.lap("eigenmatrix");

    cert.check("M_row_sums_9", all_equal(row_sums(M), Rational(9)));
    cert.check("M_column_sums_70", all_equal(col_sums(M), Rational(70)));
    const ExactMatrix B = build_k9_incidence();
    cert.check("M_Bt_equals_2J", M * B.transpose() == Rational(2) * ExactMatrix::ones(280, 9));
    const ExactMatrix L = build_line_k9_adjacency();
    const ExactMatrix mtm_expected =
        Rational(50) * ExactMatrix::identity(36) + Rational(20) * ExactMatrix::ones(36, 36) - Rational(10) * L;
    cert.check("MtM_50I_20J_minus_10L", M.transpose() * M == mtm_expected);
    const std::size_t rank_m = linalg::rank(M);
    cert.check("rank_M_28", rank_m == 28, std::to_string(rank_m));
    const SpectrumReport lk9 = integer_spectrum(build_line_graph_complete(9));
    cert.check("line_K9_spectrum", lk9.pairs == Pairs{{14, 1}, {5, 8}, {-2, 27}}, spectrum_string(lk9));

    const ExactMatrix mmt = M * M.transpose();
    const std::vector<Rational> mma{9, 0, 2, 3, 5};
    cert.check("MMT_scheme_identity", mmt == scheme.combination(mma), "MM^T = 9I + 2A_2 + 3A_3 + 5A_4");
    const ExactMatrix mme = Rational(630) * basis->idempotents[0] + Rational(70) * basis->idempotents[tau_space];
    cert.check("MMT_idempotent_identity", mmt == mme, "MM^T = 630E_0 + 70E_1");
    st.watch.lap("matrix_identities");
  }

  const SeedStrategy seeds = st.opts.seeds.value_or(SeedStrategy{SeedStrategy::Kind::kPairsInClass, 2});
  const std::vector<VertexSet> sets = enumerate_max_sets(st, g, M, seeds, &scheme);
  record_sets(st, g, sets);

  std::vector<VertexSet> stars;
  for (const auto& pr : pairs_lex(9)) stars.push_back(p33_star(p, pr[0], pr[1]));
  cert.check("max_sets_are_the_36_S_ij", sets == sorted(stars), std::to_string(sets.size()) + " sets");
  if (st.opts.enumerate_only) return;

  // The set S_{1,2} and the Seidel lemma.
  const VertexSet s12 = p33_star(p, 1, 2);
  const RationalVector x = indicator(s12);
  cert.check("S12_independent_size_70", s12.count() == 70 && is_independent(g, s12));
  cert.check("S12_tight_eigenvector", tightness_eigenvector_check(g, s12, tau));
  cert.check("S12_in_colspace", colspace_membership(M, x).has_value());
  std::vector<Rational> xex;
  for (std::size_t j = 0; j < basis->idempotents.size(); ++j) xex.push_back(dot(x, basis->idempotents[j] * x));
  const std::vector<Rational> xex_expected{Rational(70, 4), Rational(210, 4), 0, 0, 0};
  cert.check("S12_xT_E_x", xex == xex_expected, rationals(xex));
  const SeidelResult seidel = seidel_check(scheme, *em, *basis, x);
  const std::vector<Rational> lemma{Rational(1, 4), 0, Rational(1, 18), Rational(1, 12), Rational(5, 36)};
  cert.check("seidel_S12", seidel.equal && seidel.lhs_coefficients == lemma, rationals(seidel.lhs_coefficients));
  const ExactMatrix mmt36 = Rational(1, 36) * (M * M.transpose());
  cert.check("seidel_S12_equals_MMT_over_36", seidel.lhs == mmt36);
  const ExactMatrix rhs_lemma =
      Rational(70, 4) * basis->idempotents[0] + Rational(70, 36) * basis->idempotents[tau_space];
  cert.check("seidel_S12_equals_70_4_E0_plus_70_36_E1", seidel.rhs == rhs_lemma);
  cert.check("S12_S34_intersection_20", s12.intersection_count(p33_star(p, 3, 4)) == 20);
  cert.check("S12_S13_intersection_10", s12.intersection_count(p33_star(p, 1, 3)) == 10);
  st.watch.lap("seidel");

  // Any tight set has a forced inner distribution; its A_c entry decides whether class-c pairs catch every set.
  const auto forced = predicted_tight_inner_distribution(scheme, *em, *basis, tau_space, Rational(70));
  cert.check("forced_inner_distribution", forced == std::vector<Rational>{1, 0, 36, 18, 15}, rationals(forced));
  if (seeds.kind == SeedStrategy::Kind::kPairsInClass) {
    const bool complete = seeds.cls < forced.size() && forced[seeds.cls].sign() > 0;
    cert.check("seed_family_complete", complete,
               "every tight set has " + (seeds.cls < forced.size() ? forced[seeds.cls].to_string() : "0") +
                   " A_" + std::to_string(seeds.cls) + "-neighbours per member inside it");
  } else {
    cert.check("seed_family_complete", true, "every nonempty set contains a singleton seed");
  }
  bool per_vertex = true;
  bool lemma_all = true;
  for (const auto& s : sets) {
    per_vertex = per_vertex && verify_inner_distribution(scheme, s, forced);
    const auto q = scheme.quadratic_forms(indicator(s));
    for (std::size_t i = 0; i < q.size(); ++i)
      lemma_all = lemma_all && q[i] / Rational(static_cast<std::int64_t>(280 * val[i])) == lemma[i];
  }
  cert.check("inner_distribution_per_vertex", per_vertex, "(1, 0, 36, 18, 15) at every vertex of every set");
  cert.check("seidel_lemma_all_sets", lemma_all, "sum_i x^T A_i x/(v v_i) A_i = MM^T/36 for every set");

  // The seed pair a, b with a 7-cell meet, examined on its own.
  const std::size_t a = 0;
  std::size_t b = 1;
  while (scheme.relation(a, b) != 2) ++b;
  VertexSet ab = g.empty_set();
  ab.set(a);
  ab.set(b);
  EnumerateOptions eo;
  eo.minimize_c0 = true;
  eo.rank_cap = st.opts.rank_cap;
  const EnumerationReport one = colspace_enumerate(g, M, ab, 70, eo);
  const std::string seed_names = p.partitions[a].label() + ", " + p.partitions[b].label();
  cert.check("seed_pair_rank_C_6", one.rank_C == 6, "seeds " + seed_names + ": rank(C) = " + std::to_string(one.rank_C));
  cert.check("seed_pair_64_candidates", one.candidates_tested == 64, std::to_string(one.candidates_tested));
  cert.check("seed_pair_three_zero_one_choices", one.zero_one_candidates == 3,
             std::to_string(one.zero_one_candidates) + " choices of y give a 0/1 vector, the zero vector included");
  bool two = one.valid_sets.size() == 2;
  for (const auto& s : one.valid_sets) two = two && std::find(stars.begin(), stars.end(), s) != stars.end();
  cert.check("seed_pair_two_valid_sets", two, std::to_string(one.valid_sets.size()) + " sets, each some S_ij");
  cert.notes.push_back("greedy C_0 for the seed pair uses " + std::to_string(one.c0_rows.size()) + " rows of C");
  st.watch.lap("seed_pair");

  const SupportLocalization loc = support_localization_check(M, g, s12, s12.first());
  const std::vector<std::size_t> col12{pair_index(9, 1, 2)};
  cert.check("support_localization_S12", loc.holds() && loc.support == col12, loc.note);

  const CoreEvidenceReport core = p33_core_evidence(p);
  cert.check("core_intersections_70_10_20", core.intersection_pattern);
  cert.check("core_quadruple_intersection", core.quadruple_singleton, core.quadruple_member);
  cert.check("core_slices_of_S12", core.slices_partition, join(core.slice_sizes));
  cert.check("core_induced_map", core.induced_map_target, core.induced_map_description);
  st.watch.lap("core_evidence");
}

// ---------------------------------------------------------------- Witt graph

void certify_witt(Stage& st) {
  auto& cert = st.cert;
  const Witt w = build_witt();
  const Graph& g = w.graph;
  const ExactMatrix& M = w.M;
  st.watch.lap("construct");

  std::vector<std::uint32_t> masks;
  for (const auto& blk : w.blocks) {
    std::uint32_t m = 0;
    for (int pt : blk.points) m |= 1u << (pt - 1);
    masks.push_back(m);
  }
  if (!st.opts.enumerate_only) {
    const auto octads = std::count_if(w.golay.begin(), w.golay.end(), [](std::uint32_t c) { return __builtin_popcount(c) == 8; });
    cert.check("golay_4096_codewords", w.golay.size() == 4096, std::to_string(w.golay.size()));
    cert.check("golay_759_octads", octads == 759, std::to_string(octads));
    cert.check("blocks_77", w.blocks.size() == 77, std::to_string(w.blocks.size()));
    cert.check("block_size_6", all_equal(row_sums(M), Rational(6)));
    cert.check("blocks_per_point_21", all_equal(col_sums(M), Rational(21)));
    bool steiner = true;
    for (int i = 0; i < 22; ++i)
      for (int j = i + 1; j < 22; ++j)
        for (int k = j + 1; k < 22; ++k) {
          const std::uint32_t t = (1u << i) | (1u << j) | (1u << k);
          steiner = steiner && std::count_if(masks.begin(), masks.end(), [&](std::uint32_t m) { return (m & t) == t; }) == 1;
        }
    cert.check("steiner_3_22_6_1", steiner, "every 3 points lie in exactly one block");
  }

  spectrum_and_bound(st, g);
  cert.check("spectrum", cert.spectrum->pairs == Pairs{{16, 1}, {2, 55}, {-6, 21}}, spectrum_string(*cert.spectrum));
  cert.check("ratio_bound_21", cert.ratio->bound == Rational(21), cert.ratio->bound.to_string());

  if (!st.opts.enumerate_only) {
    bool lambda0 = true;
    bool mu4 = true;
    for (std::size_t x = 0; x < g.order(); ++x)
      for (std::size_t y = x + 1; y < g.order(); ++y) {
        const std::size_t common = g.neighbors(x).intersection_count(g.neighbors(y));
        if (g.adjacent(x, y)) {
          lambda0 = lambda0 && common == 0;
        } else {
          mu4 = mu4 && common == 4;
        }
      }
    cert.check("strongly_regular_77_16_0_4", lambda0 && mu4 && g.valency() == 16);
    const ExactMatrix mtm = Rational(16) * ExactMatrix::identity(22) + Rational(5) * ExactMatrix::ones(22, 22);
    cert.check("MtM_16I_5J", M.transpose() * M == mtm);

    // Blocks disjoint from a block alpha, on the 16 points off alpha.
    bool design = true;
    bool invertible = true;
    bool null6 = true;
    const ExactMatrix ntn = Rational(4) * ExactMatrix::identity(16) + Rational(2) * ExactMatrix::ones(16, 16);
    for (std::size_t alpha = 0; alpha < w.blocks.size(); ++alpha) {
      const auto disjoint = g.neighbors(alpha).indices();
      std::vector<std::size_t> off;
      for (std::size_t pt = 0; pt < 22; ++pt)
        if (!(masks[alpha] >> pt & 1u)) off.push_back(pt);
      const ExactMatrix m1 = M.select_rows(disjoint);
      const ExactMatrix n = m1.select_cols(off);
      design = design && disjoint.size() == 16 && n.transpose() * n == ntn;
      invertible = invertible && linalg::rank(n) == 16;
      const ExactMatrix null = linalg::nullspace_basis(m1);
      bool inside = null.cols() == 6;
      for (auto pt : off)
        for (std::size_t c = 0; c < null.cols() && inside; ++c) inside = null(pt, c).is_zero();
      null6 = null6 && inside;
    }
    cert.check("disjoint_blocks_2_16_6_2_design", design, "checked for all 77 blocks");
    cert.check("disjoint_incidence_invertible", invertible, "16 x 16 incidence matrix of rank 16 for all 77 blocks");
    cert.check("M1_nullspace_on_alpha", null6, "null(M_1) is the 6-dimensional space of vectors supported on alpha");
    st.watch.lap("design_checks");
  }

  const SeedStrategy seeds = st.opts.seeds.value_or(SeedStrategy{});
  const std::vector<VertexSet> sets = enumerate_max_sets(st, g, M, seeds, nullptr);
  record_sets(st, g, sets);
  std::vector<VertexSet> pencils;
  for (std::size_t pt = 0; pt < 22; ++pt) pencils.push_back(column_support(M, pt));
  cert.check("max_sets_are_22_point_pencils", sets == sorted(pencils), std::to_string(sets.size()) + " sets");
  if (st.opts.enumerate_only) return;

  bool localized = true;
  for (std::size_t pt = 0; pt < 22; ++pt) {
    const VertexSet& s = pencils[pt];
    const std::size_t alpha = s.first();
    const auto loc = support_localization_check(M, g, s, alpha, g.neighbors(alpha).indices());
    localized = localized && loc.holds() && loc.support == std::vector<std::size_t>{pt};
  }
  cert.check("support_localization_pencils", localized, "h = e_x for the pencil of x; disjoint-block columns independent");
  st.watch.lap("support_localization");
  brute_force_agreement(st, g, sets);
}

// ---------------------------------------------------------------- q-Kneser graphs

void certify_q_kneser(Stage& st, std::uint32_t q, std::size_t v, std::size_t k) {
  auto& cert = st.cert;
  const QKneser qk = build_q_kneser(q, v, k);
  const Graph& g = qk.graph;
  const ExactMatrix W = build_W1k(q, v, k);
  const ExactMatrix M = W.transpose();
  st.watch.lap("construct");

  const Integer qv = gauss_binomial(q, v, 1);
  const Integer bound = gauss_binomial(q, v - 1, k - 1);
  if (!st.opts.enumerate_only) {
    cert.check("vertex_count_gauss_binomial", Integer(static_cast<std::int64_t>(g.order())) == gauss_binomial(q, v, k),
               std::to_string(g.order()));
    const Integer valency = power(q, k * k) * gauss_binomial(q, v - k, k);
    cert.check("valency_formula", g.valency() && Integer(static_cast<std::int64_t>(*g.valency())) == valency,
               "q^(k^2) [v-k choose k]_q = " + valency.to_string());
  }
  const std::int64_t tau = spectrum_and_bound(st, g);
  if (!st.opts.enumerate_only) {
    const Integer tau_formula = Integer(0) - power(q, k * (k - 1)) * gauss_binomial(q, v - k - 1, k - 1);
    cert.check("least_eigenvalue_formula", Integer(tau) == tau_formula,
               "-q^(k(k-1)) [v-k-1 choose k-1]_q = " + tau_formula.to_string());
    cert.check("least_eigenvalue_multiplicity", Integer(static_cast<std::int64_t>(cert.spectrum->multiplicity(tau))) == qv - Integer(1),
               std::to_string(cert.spectrum->multiplicity(tau)) + " = [v]_q - 1");
    const std::size_t rank_w = linalg::rank(W);
    cert.check("rank_W_equals_[v]", Integer(static_cast<std::int64_t>(rank_w)) == qv, std::to_string(rank_w));
    cert.check("W_column_sums_[k]", all_equal(col_sums(W), Rational(gauss_binomial(q, k, 1))));
    cert.check("W_row_sums", all_equal(row_sums(W), Rational(bound)));
  }
  cert.check("ratio_bound_formula", cert.ratio->bound == Rational(bound), "[v-1 choose k-1]_q = " + bound.to_string());

  const SeedStrategy seeds = st.opts.seeds.value_or(SeedStrategy{});
  const std::vector<VertexSet> sets = enumerate_max_sets(st, g, M, seeds, nullptr);
  record_sets(st, g, sets);

  std::vector<VertexSet> stars;
  for (std::size_t p = 0; p < M.cols(); ++p) stars.push_back(column_support(M, p));
  if (v > 2 * k) {
    cert.check("max_sets_are_stars", sets == sorted(stars), std::to_string(sets.size()) + " sets, [v]_q = " + qv.to_string());
  } else {
    // v = 2k: the k-spaces inside a hyperplane are a second family of maximum sets.
    std::vector<VertexSet> duals;
    for (const auto& s : sets) {
      std::vector<std::vector<std::uint8_t>> rows;
      for (auto x : s.indices())
        for (std::size_t r = 0; r < k; ++r) {
          const auto& b = qk.subspaces[x].basis;
          rows.emplace_back(b.begin() + r * v, b.begin() + (r + 1) * v);
        }
      if (rank_gf(rows, q) == v - 1) duals.push_back(s);
    }
    std::vector<VertexSet> both = stars;
    both.insert(both.end(), duals.begin(), duals.end());
    cert.check("max_sets_are_stars_and_duals", sets == sorted(both) && Integer(static_cast<std::int64_t>(duals.size())) == qv,
               std::to_string(stars.size()) + " stars and " + std::to_string(duals.size()) + " hyperplane duals");
    cert.notes.push_back("v = 2k: the maximum sets are the stars and the k-spaces of a hyperplane, " +
                         std::to_string(sets.size()) + " in total");
  }
  cert.notes.push_back("the total number of maximum sets is computed here, not quoted");
  if (st.opts.enumerate_only) return;

  if (v > 2 * k) {
    bool localized = true;
    for (std::size_t p = 0; p < stars.size(); ++p) {
      const std::size_t alpha = stars[p].first();
      // Complement B of alpha: the span of the unit vectors off the pivot columns of alpha.
      const Subspace& a = qk.subspaces[alpha];
      std::vector<std::size_t> pivots;
      for (std::size_t r = 0; r < k; ++r) {
        std::size_t c = 0;
        while (a.at(r, c) == 0) ++c;
        pivots.push_back(c);
      }
      std::vector<std::size_t> inside_b;
      for (std::size_t x = 0; x < qk.subspaces.size(); ++x) {
        const Subspace& u = qk.subspaces[x];
        bool in = true;
        for (std::size_t r = 0; r < k && in; ++r)
          for (auto c : pivots) in = in && u.at(r, c) == 0;
        if (in) inside_b.push_back(x);
      }
      const auto loc = support_localization_check(M, g, stars[p], alpha, inside_b);
      localized = localized && loc.holds() && loc.support == std::vector<std::size_t>{p};
    }
    cert.check("support_localization_stars", localized, "h = e_p for the star of p; W_{1,k}(v-k)^T has independent columns");
    st.watch.lap("support_localization");
  }
  if (g.order() <= 160) brute_force_agreement(st, g, sets);
}

// ---------------------------------------------------------------- Kneser graphs

void certify_kneser(Stage& st, std::size_t v, std::size_t k) {
  auto& cert = st.cert;
  const KneserGraph kg = build_kneser(v, k);
  const Graph& g = kg.graph;
  const ExactMatrix M = kg.star_matrix.transpose();
  st.watch.lap("construct");

  if (!st.opts.enumerate_only)
    cert.check("valency_formula", g.valency() == binomial(v - k, k), "C(v-k, k) = " + std::to_string(binomial(v - k, k)));
  const std::int64_t tau = spectrum_and_bound(st, g);
  const auto tau_formula = -static_cast<std::int64_t>(binomial(v - k - 1, k - 1));
  cert.check("least_eigenvalue_formula", tau == tau_formula, "-C(v-k-1, k-1) = " + std::to_string(tau_formula));
  cert.check("ratio_bound_formula", cert.ratio->bound == Rational(static_cast<std::int64_t>(binomial(v - 1, k - 1))),
             cert.ratio->bound.to_string());

  const SeedStrategy seeds = st.opts.seeds.value_or(SeedStrategy{});
  const std::vector<VertexSet> sets = enumerate_max_sets(st, g, M, seeds, nullptr);
  record_sets(st, g, sets);
  if (v > 2 * k) {
    std::vector<VertexSet> stars;
    for (std::size_t p = 0; p < v; ++p) stars.push_back(column_support(M, p));
    cert.check("max_sets_are_stars", sets == sorted(stars), std::to_string(sets.size()) + " sets");
  }
  if (!st.opts.enumerate_only && g.order() <= 200) brute_force_agreement(st, g, sets);
}

// ---------------------------------------------------------------- line graphs of complete graphs

void certify_line_complete(Stage& st, std::size_t n) {
  auto& cert = st.cert;
  const Graph g = build_line_graph_complete(n);
  st.watch.lap("construct");

  const std::int64_t tau = spectrum_and_bound(st, g);
  const auto ni = static_cast<std::int64_t>(n);
  Pairs expected;
  if (n == 3) {
    expected = {{2, 1}, {-1, 2}};
  } else {
    expected = {{2 * ni - 4, 1}, {ni - 4, n - 1}, {-2, n * (n - 3) / 2}};
  }
  cert.check("spectrum_formula", cert.spectrum->pairs == expected, spectrum_string(*cert.spectrum));

  // Columns: the all-ones vector and a basis of the tau-eigenspace.
  ExactMatrix shifted = g.adjacency_matrix();
  for (std::size_t i = 0; i < g.order(); ++i) shifted(i, i) -= Rational(tau);
  const ExactMatrix M = ExactMatrix::ones(g.order(), 1).hconcat(linalg::nullspace_basis(shifted));

  const SeedStrategy seeds = st.opts.seeds.value_or(SeedStrategy{});
  const std::vector<VertexSet> sets = enumerate_max_sets(st, g, M, seeds, nullptr);
  record_sets(st, g, sets);
  const std::uint64_t matchings = n % 2 == 0 ? double_factorial(n - 1) : n * double_factorial(n - 2);
  cert.check("max_sets_are_maximum_matchings", sets.size() == matchings && !sets.empty() && sets.front().count() == n / 2,
             std::to_string(sets.size()) + " matchings with " + std::to_string(n / 2) + " edges");
  if (st.opts.enumerate_only) return;

  if (n % 2 == 0) {
    const OneFactorization f = round_robin_one_factorization(n);
    cert.check("round_robin_homomorphism", check_homomorphism(g, complete_graph(n - 1), f.line_graph_coloring()),
               "L(K_" + std::to_string(n) + ") -> K_" + std::to_string(n - 1));
  }
  if (n == 5) {
    const EndomorphismReport e = endomorphism_search(g, EndomorphismMode::kEnumerateAll, st.opts.node_budget);
    cert.check("core_L_K5", e.automorphisms == 120 && e.proper_endomorphisms == 0,
               std::to_string(e.automorphisms) + " automorphisms, " + std::to_string(e.proper_endomorphisms) +
                   " proper endomorphisms");
    st.watch.lap("endomorphisms");
  }
  brute_force_agreement(st, g, sets);
}

void validate(const FamilyRequest& r) {
  auto need = [](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::kParse, what);
  };
  if (r.family == "p33" || r.family == "witt") return;
  if (r.family == "q_kneser") {
    need(r.k >= 1 && r.v >= 2 * r.k, "q_kneser needs --v and --k with v >= 2k >= 2");
    need(r.q >= 2 && r.q < 256, "q_kneser needs a prime --q below 256");
    return;
  }
  if (r.family == "kneser") {
    need(r.k >= 1 && r.v >= 2 * r.k, "kneser needs --v and --k with v >= 2k >= 2");
    return;
  }
  if (r.family == "line_complete") {
    need(r.n >= 3, "line_complete needs --n >= 3");
    return;
  }
  throw Error(ErrorKind::kParse, "unknown family '" + r.family + "' (p33, witt, q_kneser, kneser, line_complete)");
}

}  // namespace

std::vector<std::pair<std::string, std::string>> FamilyRequest::parameters() const {
  if (family == "q_kneser") return {{"q", std::to_string(q)}, {"v", std::to_string(v)}, {"k", std::to_string(k)}};
  if (family == "kneser") return {{"v", std::to_string(v)}, {"k", std::to_string(k)}};
  if (family == "line_complete") return {{"n", std::to_string(n)}};
  return {};
}

BuiltFamily build_family(const FamilyRequest& r) {
  validate(r);
  if (r.family == "p33") {
    P33 p = build_p33();
    ExactMatrix m = build_p33_M(p.partitions);
    return {r.family, std::move(p.graph), std::move(m)};
  }
  if (r.family == "witt") {
    Witt w = build_witt();
    return {r.family, std::move(w.graph), std::move(w.M)};
  }
  if (r.family == "q_kneser") return {r.family, build_q_kneser(r.q, r.v, r.k).graph, build_W1k(r.q, r.v, r.k).transpose()};
  if (r.family == "kneser") {
    KneserGraph kg = build_kneser(r.v, r.k);
    return {r.family, std::move(kg.graph), kg.star_matrix.transpose()};
  }
  Graph g = build_line_graph_complete(r.n);
  const std::int64_t tau = integer_spectrum(g).least;
  ExactMatrix shifted = g.adjacency_matrix();
  for (std::size_t i = 0; i < g.order(); ++i) shifted(i, i) -= Rational(tau);
  ExactMatrix m = ExactMatrix::ones(g.order(), 1).hconcat(linalg::nullspace_basis(shifted));
  return {r.family, std::move(g), std::move(m)};
}

Certificate certify_family(const FamilyRequest& request, const CertifyOptions& options) {
  validate(request);
  Certificate cert;
  cert.tool_version = RATIOCERT_VERSION;
  cert.family = request.family;
  cert.parameters = request.parameters();
  Stopwatch watch(cert, options.timings);
  Stage st{cert, options, watch};
  try {
    if (request.family == "p33") {
      certify_p33(st);
    } else if (request.family == "witt") {
      certify_witt(st);
    } else if (request.family == "q_kneser") {
      certify_q_kneser(st, request.q, request.v, request.k);
    } else if (request.family == "kneser") {
      certify_kneser(st, request.v, request.k);
    } else {
      certify_line_complete(st, request.n);
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kParse) throw;
    cert.error = to_string(e.kind());
    cert.error_message = e.what();
  }
  cert.finalize();
  return cert;
}

}  // namespace ratiocert
