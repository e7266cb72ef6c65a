#include "ratiocert/schemes/scheme.hpp"

#include <algorithm>

#include "ratiocert/errors.hpp"
#include "ratiocert/exact_linalg/integer_matrix.hpp"
#include "ratiocert/exact_linalg/linalg.hpp"

namespace ratiocert {
namespace {

constexpr std::uint8_t kUncovered = 0xff;

std::string at(std::size_t x, std::size_t y) { return " at (" + std::to_string(x) + ", " + std::to_string(y) + ")"; }

IntegerMatrix class_integers(const AssociationScheme& s, std::size_t i) {
  const std::size_t v = s.vertex_count();
  IntegerMatrix a(v, v);
  for (std::size_t x = 0; x < v; ++x) {
    const auto& row = s.class_row(i, x);
    for (std::size_t y = row.first(); y != Bitset::npos; y = row.next(y + 1)) a(x, y) = Integer(1);
  }
  return a;
}

struct Piece {
  std::vector<std::int64_t> eigenvalues;
  ExactMatrix basis;
};

// Splits the A_i-invariant subspace spanned by `basis` into eigenspaces of A_i.
void split_piece(const AssociationScheme& s, const ExactMatrix& ai, std::size_t i, Piece piece, std::vector<Piece>& out) {
  const std::size_t m = piece.basis.cols();
  const linalg::RowEchelon e = linalg::rref(piece.basis.transpose());
  const ExactMatrix u = e.reduced.transpose();
  const ExactMatrix r = (ai * u).select_rows(e.pivots);
  std::size_t found = 0;
  for (std::int64_t mu : linalg::integer_eigenvalue_candidates(r, static_cast<std::int64_t>(s.valencies()[i]))) {
    ExactMatrix shifted = r;
    for (std::size_t k = 0; k < m; ++k) shifted(k, k) -= Rational(mu);
    const ExactMatrix w = linalg::nullspace_basis(shifted);
    if (w.cols() == 0) continue;
    Piece next{piece.eigenvalues, u * w};
    next.eigenvalues.push_back(mu);
    found += w.cols();
    out.push_back(std::move(next));
  }
  if (found != m) {
    throw Error(ErrorKind::kNonIntegralSpectrum, "class " + std::to_string(i) + " has a non-integral eigenvalue on a common eigenspace");
  }
}

std::vector<Rational> unit(std::size_t n, std::size_t i) {
  std::vector<Rational> e(n);
  e[i] = Rational(1);
  return e;
}

}  // namespace

AssociationScheme verify_axioms(std::vector<ExactMatrix> classes) {
  if (classes.empty()) throw Error(ErrorKind::kDimension, "verify_axioms: no classes");
  const std::size_t n = classes.size();
  if (n > kUncovered) throw Error(ErrorKind::kDimension, "verify_axioms: too many classes");
  const std::size_t v = classes[0].rows();
  for (const auto& a : classes)
    if (a.rows() != v || a.cols() != v) throw Error(ErrorKind::kDimension, "verify_axioms: classes must be square of one size");

  AssociationScheme s;
  s.v_ = v;
  s.relation_.assign(v * v, kUncovered);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t x = 0; x < v; ++x) {
      for (std::size_t y = 0; y < v; ++y) {
        const Rational& e = classes[i](x, y);
        if (e.is_zero()) continue;
        if (!e.is_one()) throw AxiomViolation("zero_one", x, y, "class " + std::to_string(i) + " has entry " + e.to_string() + at(x, y));
        if (s.relation_[x * v + y] != kUncovered)
          throw AxiomViolation("partition", x, y, "two classes cover" + at(x, y));
        s.relation_[x * v + y] = static_cast<std::uint8_t>(i);
      }
    }
  }
  for (std::size_t x = 0; x < v; ++x) {
    for (std::size_t y = 0; y < v; ++y) {
      const auto r = s.relation_[x * v + y];
      if (r == kUncovered) throw AxiomViolation("partition", x, y, "no class covers" + at(x, y));
      if ((r == 0) != (x == y)) throw AxiomViolation("identity", x, y, "A_0 differs from I" + at(x, y));
      if (r != s.relation_[y * v + x]) throw AxiomViolation("symmetric", x, y, "class " + std::to_string(r) + " is not symmetric" + at(x, y));
    }
  }

  s.rows_.assign(n, std::vector<Bitset>(v, Bitset(v)));
  for (std::size_t x = 0; x < v; ++x)
    for (std::size_t y = 0; y < v; ++y) s.rows_[s.relation_[x * v + y]][x].set(y);
  s.valencies_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    s.valencies_[i] = v ? s.rows_[i][0].count() : 0;
    for (std::size_t x = 1; x < v; ++x)
      if (s.rows_[i][x].count() != s.valencies_[i])
        throw AxiomViolation("regular", x, 0, "class " + std::to_string(i) + " has unequal row sums at row " + std::to_string(x));
    if (v && s.valencies_[i] == 0) throw AxiomViolation("regular", 0, 0, "class " + std::to_string(i) + " is empty");
  }

  // First entry (x, y) of each class; A_iA_j(x, y) = |N_i(x) & N_j(y)| by symmetry.
  std::vector<std::pair<std::size_t, std::size_t>> rep(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t x = 0;
    while (s.rows_[k][x].none()) ++x;
    rep[k] = {x, s.rows_[k][x].first()};
  }
  s.intersection_.assign(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t* c = &s.intersection_[(i * n + j) * n];
      for (std::size_t k = 0; k < n; ++k)
        c[k] = static_cast<std::int64_t>(s.rows_[i][rep[k].first].intersection_count(s.rows_[j][rep[k].second]));
      for (std::size_t x = 0; x < v; ++x) {
        for (std::size_t y = 0; y < v; ++y) {
          const auto got = static_cast<std::int64_t>(s.rows_[i][x].intersection_count(s.rows_[j][y]));
          if (got != c[s.relation_[x * v + y]]) {
            throw AxiomViolation("closure", x, y,
                                 "A_" + std::to_string(i) + "A_" + std::to_string(j) + " is not in the span of the classes" + at(x, y));
          }
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (s.intersection_number(i, j, k) != s.intersection_number(j, i, k))
          throw AxiomViolation("commutative", rep[k].first, rep[k].second,
                               "A_" + std::to_string(i) + " and A_" + std::to_string(j) + " do not commute" + at(rep[k].first, rep[k].second));
  s.classes_ = std::move(classes);
  return s;
}

AssociationScheme scheme_from_relation(std::size_t v, std::size_t d, const std::vector<std::uint8_t>& rel) {
  if (rel.size() != v * v) throw Error(ErrorKind::kDimension, "relation table has wrong size");
  std::vector<ExactMatrix> classes(d + 1, ExactMatrix(v, v));
  for (std::size_t x = 0; x < v; ++x) {
    for (std::size_t y = 0; y < v; ++y) {
      const std::size_t r = rel[x * v + y];
      if (r > d) throw Error(ErrorKind::kDimension, "relation index out of range" + at(x, y));
      classes[r](x, y) = Rational(1);
    }
  }
  return verify_axioms(std::move(classes));
}

Graph AssociationScheme::class_graph(std::size_t i, std::vector<std::string> labels) const {
  return Graph(std::move(labels), rows_[i]);
}

std::vector<Rational> AssociationScheme::quadratic_forms(std::span<const Rational> x) const {
  if (x.size() != v_) throw Error(ErrorKind::kDimension, "vector length differs from vertex count");
  Integer d(1);
  for (const auto& r : x) d = lcm(d, r.den());
  std::vector<Integer> xi;
  xi.reserve(v_);
  for (const auto& r : x) xi.push_back(r.num() * divexact(d, r.den()));
  const std::size_t n = valencies_.size();
  std::vector<Integer> sums(n);
  for (std::size_t a = 0; a < v_; ++a) {
    if (xi[a].is_zero()) continue;
    std::vector<Integer> row(n);
    for (std::size_t b = 0; b < v_; ++b)
      if (!xi[b].is_zero()) row[relation_[a * v_ + b]] = row[relation_[a * v_ + b]] + xi[b];
    for (std::size_t i = 0; i < n; ++i) sums[i] = sums[i] + xi[a] * row[i];
  }
  const Integer d2 = d * d;
  std::vector<Rational> out;
  for (auto& t : sums) out.emplace_back(t, d2);
  return out;
}

ExactMatrix AssociationScheme::combination(std::span<const Rational> c) const {
  if (c.size() != valencies_.size()) throw Error(ErrorKind::kDimension, "coefficient count differs from class count");
  std::vector<Rational> entries;
  entries.reserve(v_ * v_);
  for (auto r : relation_) entries.push_back(c[r]);
  return ExactMatrix(v_, v_, std::move(entries));
}

std::vector<Rational> AssociationScheme::multiply(std::span<const Rational> a, std::span<const Rational> b) const {
  const std::size_t n = valencies_.size();
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      const Rational ab = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k)
        if (const auto p = intersection_number(i, j, k)) out[k] += ab * Rational(p);
    }
  }
  return out;
}

std::optional<std::size_t> Eigenmatrix::eigenspace_of(std::int64_t lambda) const {
  std::optional<std::size_t> hit;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j].size() > 1 && p[j][1] == lambda) {
      if (hit) return std::nullopt;
      hit = j;
    }
  }
  return hit;
}

Eigenmatrix eigenmatrix(const AssociationScheme& s, const std::vector<std::int64_t>& a1_order) {
  const std::size_t v = s.vertex_count();
  const std::size_t d = s.class_count();
  Eigenmatrix em;
  if (d == 0) {
    em.p = {{1}};
    em.multiplicities = {v};
    em.bases = {ExactMatrix::identity(v)};
    return em;
  }

  std::vector<Piece> pieces;
  const ExactMatrix& a1 = s.matrix(1);
  for (std::int64_t lambda : linalg::integer_eigenvalue_candidates(a1, static_cast<std::int64_t>(s.valencies()[1]))) {
    ExactMatrix shifted = a1;
    for (std::size_t k = 0; k < v; ++k) shifted(k, k) -= Rational(lambda);
    ExactMatrix u = linalg::nullspace_basis(shifted);
    if (u.cols() == 0) continue;
    pieces.push_back({{1, lambda}, std::move(u)});
  }
  for (std::size_t i = 2; i <= d; ++i) {
    std::vector<Piece> next;
    for (auto& piece : pieces) split_piece(s, s.matrix(i), i, std::move(piece), next);
    pieces = std::move(next);
  }
  std::size_t total = 0;
  for (const auto& piece : pieces) total += piece.basis.cols();
  if (total != v) {
    throw Error(ErrorKind::kNonIntegralSpectrum,
                "common integer eigenspaces have total dimension " + std::to_string(total) + ", not " + std::to_string(v));
  }

  // A_i U_j = p_i(j) U_j, exactly.
  for (std::size_t i = 1; i <= d; ++i) {
    const IntegerMatrix ai = class_integers(s, i);
    for (const auto& piece : pieces) {
      const IntegerMatrix u = piece.basis.col_scaled_integers();
      const IntegerMatrix au = multiply(ai, u);
      const Integer lambda(piece.eigenvalues[i]);
      for (std::size_t k = 0; k < u.data().size(); ++k) {
        if (au.data()[k] != lambda * u.data()[k]) {
          throw Error(ErrorKind::kConstructionFailed, "eigenspace check failed for class " + std::to_string(i));
        }
      }
    }
  }

  std::vector<std::int64_t> ones(d + 1);
  for (std::size_t i = 0; i <= d; ++i) ones[i] = static_cast<std::int64_t>(s.valencies()[i]);
  std::vector<std::size_t> order(pieces.size());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  if (!a1_order.empty()) {
    order.clear();
    for (std::int64_t lambda : a1_order) {
      std::size_t hits = 0;
      for (std::size_t j = 0; j < pieces.size(); ++j) {
        if (pieces[j].eigenvalues[1] == lambda) {
          order.push_back(j);
          ++hits;
        }
      }
      if (hits != 1) throw Error(ErrorKind::kInvalidSpectrum, "requested A_1 eigenvalue " + std::to_string(lambda) + " does not name one eigenspace");
    }
    if (order.size() != pieces.size() || pieces[order[0]].eigenvalues != ones)
      throw Error(ErrorKind::kInvalidSpectrum, "requested eigenspace order must list every eigenspace, starting with the trivial one");
  } else {
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const bool ta = pieces[a].eigenvalues == ones, tb = pieces[b].eigenvalues == ones;
      if (ta != tb) return ta;
      return pieces[a].eigenvalues > pieces[b].eigenvalues;
    });
    if (pieces[order[0]].eigenvalues != ones) throw Error(ErrorKind::kConstructionFailed, "no eigenspace carries the valencies");
  }
  for (std::size_t j : order) {
    em.p.push_back(pieces[j].eigenvalues);
    em.multiplicities.push_back(pieces[j].basis.cols());
    em.bases.push_back(linalg::reduced_column_echelon(pieces[j].basis));
  }
  return em;
}

IdempotentBasis idempotents(const AssociationScheme& s, const Eigenmatrix& em) {
  const std::size_t n = s.class_count() + 1;
  const std::size_t v = s.vertex_count();
  if (em.size() != n) throw Error(ErrorKind::kDimension, "eigenmatrix size differs from class count");
  IdempotentBasis out;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> c(n);
    for (std::size_t i = 0; i < n; ++i)
      c[i] = Rational(static_cast<std::int64_t>(em.multiplicities[j])) * Rational(em.p[j][i]) /
             Rational(static_cast<std::int64_t>(v * s.valencies()[i]));
    out.coefficients.push_back(std::move(c));
  }

  auto fail = [](const std::string& what) { throw Error(ErrorKind::kConstructionFailed, "idempotent check failed: " + what); };
  std::vector<Rational> sum(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& cj = out.coefficients[j];
    for (std::size_t i = 0; i < n; ++i) sum[i] += cj[i];
    if (Rational(static_cast<std::int64_t>(v)) * cj[0] != Rational(static_cast<std::int64_t>(em.multiplicities[j])))
      fail("trace of E_" + std::to_string(j));
    for (std::size_t k = 0; k < n; ++k) {
      const auto prod = s.multiply(cj, out.coefficients[k]);
      const bool ok = j == k ? prod == cj : std::all_of(prod.begin(), prod.end(), [](const Rational& r) { return r.is_zero(); });
      if (!ok) fail("E_" + std::to_string(j) + "E_" + std::to_string(k));
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto prod = s.multiply(unit(n, i), cj);
      for (std::size_t k = 0; k < n; ++k)
        if (prod[k] != Rational(em.p[j][i]) * cj[k]) fail("A_" + std::to_string(i) + "E_" + std::to_string(j));
    }
  }
  if (sum != unit(n, 0)) fail("sum of idempotents");
  for (std::size_t i = 0; i < n; ++i)
    if (out.coefficients[0][i] != Rational(Integer(1), Integer(static_cast<std::int64_t>(v)))) fail("E_0 = J/v");
  for (const auto& c : out.coefficients) out.idempotents.push_back(s.combination(c));
  return out;
}

ExactMatrix orthogonal_projection(const ExactMatrix& u) {
  const ExactMatrix ut = u.transpose();
  const ExactMatrix gram = ut * u;
  const std::size_t m = gram.rows();
  const linalg::RowEchelon e = linalg::rref(gram.hconcat(ut));
  if (e.rank() != m || (m && e.pivots.back() != m - 1)) throw Error(ErrorKind::kDimension, "projection basis is not independent");
  std::vector<std::size_t> right;
  for (std::size_t c = m; c < e.reduced.cols(); ++c) right.push_back(c);
  return u * e.reduced.select_cols(right);
}

SeidelResult seidel_check(const AssociationScheme& s, const Eigenmatrix& em, const IdempotentBasis& basis,
                          std::span<const Rational> x) {
  const std::size_t n = s.class_count() + 1;
  const auto v = static_cast<std::int64_t>(s.vertex_count());
  const auto forms = s.quadratic_forms(x);
  SeidelResult r;
  r.lhs_coefficients.resize(n);
  r.rhs_coefficients.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.lhs_coefficients[i] = forms[i] / Rational(v * static_cast<std::int64_t>(s.valencies()[i]));
  for (std::size_t j = 0; j < n; ++j) {
    Rational xej;
    for (std::size_t i = 0; i < n; ++i) xej += basis.coefficients[j][i] * forms[i];
    const Rational w = xej / Rational(static_cast<std::int64_t>(em.multiplicities[j]));
    for (std::size_t i = 0; i < n; ++i) r.rhs_coefficients[i] += w * basis.coefficients[j][i];
  }
  r.lhs = s.combination(r.lhs_coefficients);
  r.rhs = s.combination(r.rhs_coefficients);
  r.equal = r.lhs == r.rhs;
  return r;
}

std::vector<Rational> inner_distribution(const AssociationScheme& s, const VertexSet& set) {
  const std::size_t size = set.count();
  if (size == 0) throw Error(ErrorKind::kEmptySet, "inner distribution of an empty set");
  const std::size_t n = s.class_count() + 1;
  std::vector<std::int64_t> counts(n, 0);
  for (std::size_t a = set.first(); a != Bitset::npos; a = set.next(a + 1))
    for (std::size_t i = 0; i < n; ++i) counts[i] += static_cast<std::int64_t>(s.class_row(i, a).intersection_count(set));
  std::vector<Rational> out;
  for (auto c : counts) out.emplace_back(Integer(c), Integer(static_cast<std::int64_t>(size)));
  return out;
}

}  // namespace ratiocert
