#include "ratiocert/constructions/q_kneser.hpp"

#include <algorithm>

#include "ratiocert/errors.hpp"
#include "ratiocert/exact_linalg/modular.hpp"

namespace ratiocert {
namespace {

void require_field(std::uint32_t q) {
  if (q < 2 || q > 255 || !modular::is_prime_u64(q))
    throw Error(ErrorKind::kUnsupportedField, "GF(" + std::to_string(q) + ") is not a supported prime field");
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t q) {
  std::uint32_t r = 1;
  for (std::uint32_t e = q - 2, b = a % q; e; e >>= 1, b = b * b % q)
    if (e & 1) r = r * b % q;
  return r;
}

std::vector<std::vector<std::uint8_t>> rows_of(const Subspace& s) {
  std::vector<std::vector<std::uint8_t>> rows;
  for (std::size_t r = 0; r < s.dim; ++r)
    rows.emplace_back(s.basis.begin() + static_cast<std::ptrdiff_t>(r * s.ambient_dim),
                      s.basis.begin() + static_cast<std::ptrdiff_t>((r + 1) * s.ambient_dim));
  return rows;
}

}  // namespace

Integer gauss_binomial(std::int64_t q, std::size_t n, std::size_t k) {
  if (k > n) return Integer(0);
  // prod_{i<k} (q^{n-i} - 1) / (q^{i+1} - 1), exact at every step.
  Integer num(1), den(1);
  auto qpow = [&](std::size_t e) {
    Integer r(1);
    for (std::size_t i = 0; i < e; ++i) r = r * Integer(q);
    return r;
  };
  for (std::size_t i = 0; i < k; ++i) {
    num = num * (qpow(n - i) - Integer(1));
    den = den * (qpow(i + 1) - Integer(1));
  }
  return divexact(num, den);
}

std::string Subspace::label() const {
  std::string out;
  for (std::size_t r = 0; r < dim; ++r) {
    if (r) out += '.';
    for (std::size_t c = 0; c < ambient_dim; ++c) {
      if (q > 10 && c) out += ',';
      out += std::to_string(at(r, c));
    }
  }
  return out;
}

std::size_t rank_gf(std::vector<std::vector<std::uint8_t>> rows, std::uint32_t q) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::uint32_t inv = inverse_mod(rows[rank][c], q);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      const std::uint32_t f = rows[i][c] * inv % q;
      if (!f) continue;
      for (std::size_t j = c; j < cols; ++j)
        rows[i][j] = static_cast<std::uint8_t>((rows[i][j] + (q - f) * rows[rank][j]) % q);
    }
    ++rank;
  }
  return rank;
}

std::vector<Subspace> enumerate_subspaces(std::uint32_t q, std::size_t v, std::size_t k) {
  require_field(q);
  if (k > v) return {};
  std::vector<Subspace> out;
  // Each pivot set fixes the shape; free entries are the non-pivot columns to
  // the right of a row's pivot.
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    std::vector<bool> is_pivot(v, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<std::size_t> free_slots;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = piv[r] + 1; c < v; ++c)
        if (!is_pivot[c]) free_slots.push_back(r * v + c);
    std::vector<std::uint8_t> digits(free_slots.size(), 0);
    while (true) {
      Subspace s{q, v, k, std::vector<std::uint8_t>(k * v, 0)};
      for (std::size_t r = 0; r < k; ++r) s.basis[r * v + piv[r]] = 1;
      for (std::size_t t = 0; t < free_slots.size(); ++t) s.basis[free_slots[t]] = digits[t];
      out.push_back(std::move(s));
      std::size_t t = 0;
      while (t < digits.size() && ++digits[t] == q) digits[t++] = 0;
      if (t == digits.size()) break;
    }
    std::size_t i = k;
    while (i > 0 && piv[i - 1] == v - k + i - 1) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool trivially_intersecting(const Subspace& a, const Subspace& b) {
  auto rows = rows_of(a);
  for (auto& r : rows_of(b)) rows.push_back(std::move(r));
  return rank_gf(std::move(rows), a.q) == a.dim + b.dim;
}

bool contained_in(const Subspace& a, const Subspace& b) {
  auto rows = rows_of(b);
  for (auto& r : rows_of(a)) rows.push_back(std::move(r));
  return rank_gf(std::move(rows), a.q) == b.dim;
}

QKneser build_q_kneser(std::uint32_t q, std::size_t v, std::size_t k) {
  require_field(q);
  if (v < 2 * k) throw Error(ErrorKind::kDimension, "q-Kneser graph needs v >= 2k");
  auto subs = enumerate_subspaces(q, v, k);
  std::vector<std::string> labels;
  for (const auto& s : subs) labels.push_back(s.label());
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < subs.size(); ++a)
    for (std::size_t b = a + 1; b < subs.size(); ++b)
      if (trivially_intersecting(subs[a], subs[b])) edges.emplace_back(a, b);
  Graph g = Graph::from_edges(std::move(labels), edges);
  return QKneser{std::move(subs), std::move(g)};
}

ExactMatrix build_W1k(std::uint32_t q, std::size_t v, std::size_t k) {
  const auto lines = enumerate_subspaces(q, v, 1);
  const auto spaces = enumerate_subspaces(q, v, k);
  ExactMatrix w(lines.size(), spaces.size());
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = 0; j < spaces.size(); ++j)
      if (contained_in(lines[i], spaces[j])) w(i, j) = Rational(1);
  return w;
}

}  // namespace ratiocert
