#include "ratiocert/certifier/evidence.hpp"

#include <algorithm>

#include "ratiocert/constructions/small_graphs.hpp"
#include "ratiocert/errors.hpp"
#include "ratiocert/exact_linalg/linalg.hpp"

namespace ratiocert {

VertexSet p33_star(const P33& p33, int i, int j) {
  VertexSet s(p33.partitions.size());
  for (std::size_t x = 0; x < p33.partitions.size(); ++x)
    if (p33.partitions[x].same_cell(i, j)) s.set(x);
  return s;
}

CoreEvidenceReport p33_core_evidence(const P33& p33) {
  CoreEvidenceReport r;
  const auto pairs = pairs_lex(9);
  std::vector<VertexSet> stars;
  for (const auto& p : pairs) stars.push_back(p33_star(p33, p[0], p[1]));

  r.intersection_pattern = true;
  std::vector<Bitset> ten(pairs.size(), Bitset(pairs.size()));
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      const std::size_t count = stars[a].intersection_count(stars[b]);
      r.pairwise_intersections.push_back({pairs[a], pairs[b], count});
      const bool overlap = pairs[a][0] == pairs[b][0] || pairs[a][0] == pairs[b][1] || pairs[a][1] == pairs[b][0] ||
                           pairs[a][1] == pairs[b][1];
      const std::size_t expected = a == b ? 70 : overlap ? 10 : 20;
      if (count != expected) r.intersection_pattern = false;
      if (a != b && count == 10) ten[a].set(b);
    }
  }

  VertexSet quad = stars[pair_index(9, 1, 2)];
  quad &= stars[pair_index(9, 1, 3)];
  quad &= stars[pair_index(9, 4, 5)];
  quad &= stars[pair_index(9, 4, 6)];
  if (quad.count() == 1) r.quadruple_member = p33.partitions[quad.first()].label();
  r.quadruple_singleton = quad.count() == 1 && r.quadruple_member == "123|456|789";

  const VertexSet& s12 = stars[pair_index(9, 1, 2)];
  VertexSet cover(s12.size());
  r.slices_partition = true;
  for (int i = 3; i <= 9; ++i) {
    VertexSet slice = s12 & stars[pair_index(9, 1, i)];
    r.slice_sizes.push_back(slice.count());
    if (slice.count() != 10 || slice.intersects(cover)) r.slices_partition = false;
    cover |= slice;
  }
  if (cover != s12) r.slices_partition = false;

  std::vector<std::string> labels;
  for (const auto& p : pairs) labels.push_back(std::to_string(p[0]) + "-" + std::to_string(p[1]));
  const Graph induced(labels, ten);
  r.induced_map_target = induced == build_line_graph_complete(9);
  r.induced_map_description = r.induced_map_target ? "L(K_9)" : "not L(K_9)";

  if (!r.all_pass()) throw Error(ErrorKind::kConstructionFailed, "core evidence check failed");
  return r;
}

SupportLocalization support_localization_check(const ExactMatrix& m, const Graph& g, const VertexSet& s, std::size_t alpha,
                                               const std::vector<std::size_t>& complement_rows) {
  const std::size_t v = g.order();
  if (m.rows() != v || alpha >= v) throw Error(ErrorKind::kDimension, "support localization: shape mismatch");
  RationalVector z(v);
  for (std::size_t i = s.first(); i != Bitset::npos; i = s.next(i + 1)) z[i] = Rational(1);
  SupportLocalization out;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!m(alpha, j).is_zero()) out.inside.push_back(j);

  auto h = linalg::solve(m, z);
  if (!h) throw Error(ErrorKind::kDimension, "characteristic vector is not in the column space of M");
  out.unique = linalg::rank(m) == m.cols();
  if (out.unique) {
    out.h = std::move(*h);
    out.note = "M has full column rank; h is unique";
  } else {
    const ExactMatrix mi = m.select_cols(out.inside);
    auto hi = linalg::solve(mi, z);
    out.h.assign(m.cols(), Rational(0));
    if (hi) {
      for (std::size_t t = 0; t < out.inside.size(); ++t) out.h[out.inside[t]] = (*hi)[t];
      out.note = "h reduced modulo null(M) to a solution on the inside columns";
      if (linalg::rank(mi) == out.inside.size()) out.note += ", unique there";
    } else {
      out.h = std::move(*h);
      out.note = "no solution of M h = z is supported on the inside columns";
    }
  }
  for (std::size_t j = 0; j < out.h.size(); ++j)
    if (!out.h[j].is_zero()) out.support.push_back(j);
  out.support_inside = true;
  for (auto j : out.support)
    if (std::find(out.inside.begin(), out.inside.end(), j) == out.inside.end()) out.support_inside = false;

  if (!complement_rows.empty()) {
    const ExactMatrix rows = m.select_rows(complement_rows);
    std::vector<std::size_t> nonzero;
    for (std::size_t j = 0; j < rows.cols(); ++j) {
      bool any = false;
      for (std::size_t i = 0; i < rows.rows() && !any; ++i) any = !rows(i, j).is_zero();
      if (any) nonzero.push_back(j);
    }
    out.complement_rank_fact = linalg::rank(rows.select_cols(nonzero)) == nonzero.size();
  }
  return out;
}

}  // namespace ratiocert
