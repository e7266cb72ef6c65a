#include "ratiocert/graph_core/spectrum.hpp"

#include "ratiocert/errors.hpp"
#include "ratiocert/exact_linalg/linalg.hpp"
#include "ratiocert/exact_linalg/modular.hpp"

namespace ratiocert {

std::size_t SpectrumReport::multiplicity(std::int64_t lambda) const {
  for (auto [l, m] : pairs)
    if (l == lambda) return m;
  return 0;
}

SpectrumReport integer_spectrum(const Graph& g) {
  const auto k = g.valency();
  if (!k) throw Error(ErrorKind::kNotRegular, "integer_spectrum: graph is not regular");
  const std::size_t v = g.order();
  SpectrumReport report;
  if (v == 0) return report;

  const IntegerMatrix a = g.adjacency_integers();
  const modular::Modulus mod(modular::working_prime(0));
  const auto chi = modular::charpoly_mod(a, mod);
  const ExactMatrix am(a);

  std::size_t total = 0;
  const auto kk = static_cast<std::int64_t>(*k);
  for (std::int64_t lambda = kk; lambda >= -kk; --lambda) {
    const std::uint64_t root = lambda >= 0 ? static_cast<std::uint64_t>(lambda) : mod.neg(static_cast<std::uint64_t>(-lambda));
    if (modular::root_multiplicity(chi, root, mod) == 0) continue;
    const std::size_t m = linalg::integer_nullity(am, Integer(lambda));
    if (m == 0) continue;
    report.pairs.emplace_back(lambda, m);
    total += m;
  }
  if (total != v) {
    throw Error(ErrorKind::kNonIntegralSpectrum, "integer eigenvalue multiplicities sum to " + std::to_string(total) +
                                                     ", not " + std::to_string(v));
  }
  report.least = report.pairs.back().first;
  return report;
}

}  // namespace ratiocert
