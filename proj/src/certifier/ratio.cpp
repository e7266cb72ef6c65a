#include "ratiocert/certifier/ratio.hpp"

#include "ratiocert/errors.hpp"
#include "ratiocert/exact_linalg/linalg.hpp"

namespace ratiocert {

RatioBoundCertificate ratio_bound(std::size_t v, std::int64_t k, std::int64_t tau) {
  if (tau >= 0) throw Error(ErrorKind::kInvalidSpectrum, "ratio bound needs a negative least eigenvalue, got " + std::to_string(tau));
  if (k < 1) throw Error(ErrorKind::kInvalidSpectrum, "ratio bound needs valency >= 1");
  RatioBoundCertificate c;
  c.v = v;
  c.valency = k;
  c.least_eigenvalue = tau;
  c.bound = Rational(Integer(static_cast<std::int64_t>(v)) * Integer(-tau), Integer(k - tau));
  return c;
}

bool tightness_eigenvector_check(const Graph& g, const VertexSet& s, std::int64_t tau) {
  const auto k = g.valency();
  if (!k) throw Error(ErrorKind::kNotRegular, "tightness check needs a regular graph");
  const auto v = static_cast<std::int64_t>(g.order());
  const auto size = static_cast<std::int64_t>(s.count());
  const auto cert = ratio_bound(g.order(), static_cast<std::int64_t>(*k), tau);
  if (Rational(size) != cert.bound) {
    throw Error(ErrorKind::kNotTight, "set of size " + std::to_string(size) + " does not meet the ratio bound " + cert.bound.to_string());
  }
  // Scaled by v: y = v x - |S| 1.
  for (std::size_t a = 0; a < g.order(); ++a) {
    const auto inside = static_cast<std::int64_t>(g.neighbors(a).intersection_count(s));
    const std::int64_t ay = v * inside - size * static_cast<std::int64_t>(*k);
    const std::int64_t ya = (s.test(a) ? v : 0) - size;
    if (ay != tau * ya) return false;
  }
  return true;
}

std::optional<RationalVector> colspace_membership(const ExactMatrix& m, std::span<const Rational> z) { return linalg::solve(m, z); }

ColspaceArgument colspace_rank_argument(const Graph& g, const ExactMatrix& m, std::int64_t tau, std::size_t tau_multiplicity) {
  const auto k = g.valency();
  if (!k) throw Error(ErrorKind::kNotRegular, "colspace argument needs a regular graph");
  if (m.rows() != g.order()) throw Error(ErrorKind::kDimension, "M must have one row per vertex");
  ColspaceArgument arg;
  arg.tau_multiplicity = tau_multiplicity;
  const RationalVector ones(m.rows(), Rational(1));
  arg.ones_in_colspace = linalg::solve(m, ones).has_value();
  arg.rank_M = linalg::rank(m);

  arg.columns_are_shifted_eigenvectors = true;
  const Rational t(tau);
  const Rational shift(static_cast<std::int64_t>(*k) - tau);
  const Rational v(static_cast<std::int64_t>(g.order()));
  for (std::size_t j = 0; j < m.cols() && arg.columns_are_shifted_eigenvectors; ++j) {
    Rational total;
    for (std::size_t a = 0; a < m.rows(); ++a) total += m(a, j);
    const Rational rhs = total / v * shift;
    for (std::size_t a = 0; a < m.rows(); ++a) {
      Rational ac;
      const auto& nb = g.neighbors(a);
      for (std::size_t b = nb.first(); b != Bitset::npos; b = nb.next(b + 1)) ac += m(b, j);
      if (ac - t * m(a, j) != rhs) {
        arg.columns_are_shifted_eigenvectors = false;
        break;
      }
    }
  }
  return arg;
}

}  // namespace ratiocert
