#include "ratiocert/exact_linalg/modular.hpp"

#include <mutex>
#include <numeric>

#include "ratiocert/errors.hpp"

namespace ratiocert::modular {

std::uint64_t Modulus::pow(std::uint64_t a, std::uint64_t e) const noexcept {
  std::uint64_t r = 1 % p_;
  a %= p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::optional<std::uint64_t> Modulus::reduce(const Rational& r) const {
  std::uint64_t n = r.num().mod_u64(p_);
  if (r.den().is_one()) return n;
  std::uint64_t d = r.den().mod_u64(p_);
  if (d == 0) return std::nullopt;
  return mul(n, inv(d));
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = 1, base = a, e = d;
    while (e) {
      if (e & 1) x = mulmod(x, base);
      base = mulmod(base, base);
      e >>= 1;
    }
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t working_prime(std::size_t index) {
  static std::mutex mu;
  static std::vector<std::uint64_t> primes{(std::uint64_t{1} << 61) - 1};
  std::lock_guard<std::mutex> lock(mu);
  while (primes.size() <= index) {
    std::uint64_t c = primes.back() - 2;
    while (!is_prime_u64(c)) c -= 2;
    primes.push_back(c);
  }
  return primes[index];
}

namespace {

std::optional<Rational> reconstruct_small(std::int64_t residue, std::int64_t modulus) {
  std::int64_t bound = 1;
  {
    std::int64_t half = modulus / 2;
    // integer sqrt of half
    std::int64_t lo = 0, hi = 3037000499LL;
    while (lo < hi) {
      std::int64_t mid = lo + (hi - lo + 1) / 2;
      if (mid <= half / mid) lo = mid; else hi = mid - 1;
    }
    bound = lo;
  }
  std::int64_t r0 = modulus, r1 = residue % modulus;
  if (r1 < 0) r1 += modulus;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 > bound) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    // |t| stays below modulus throughout, so q * t1 fits in int128 and the result in int64.
    std::int64_t t2 = static_cast<std::int64_t>(static_cast<__int128>(t0) - static_cast<__int128>(q) * t1);
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  std::int64_t num = r1, den = t1;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den == 0 || den > bound) return std::nullopt;
  if (std::gcd(num < 0 ? -num : num, den) != 1) return std::nullopt;
  return Rational(Integer(num), Integer(den));
}

}  // namespace

std::optional<Rational> reconstruct(const Integer& residue, const Integer& modulus) {
  if (modulus.is_small() && residue.is_small()) return reconstruct_small(residue.small_value(), modulus.small_value());
  // Extended Euclid on (modulus, residue), stopped once the remainder drops below the bound.
  mpz_class m = modulus.to_mpz();
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());

  mpz_class r0 = m, r1 = residue.to_mpz();
  r1 %= m;
  if (r1 < 0) r1 += m;
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  mpz_class num = r1, den = t1;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den == 0 || den > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) return std::nullopt;
  return Rational(Integer(num), Integer(den));
}

std::optional<std::size_t> rank_mod(const ExactMatrix& m, const Modulus& mod) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t k = 0; k < rows * cols; ++k) {
    auto v = mod.reduce(m.entries()[k]);
    if (!v) return std::nullopt;
    a[k] = *v;
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[rank * cols + j]);
    std::uint64_t inv = mod.inv(a[rank * cols + c]);
    const std::uint64_t* pr = &a[rank * cols];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      std::uint64_t* ri = &a[i * cols];
      if (ri[c] == 0) continue;
      std::uint64_t f = mod.mul(ri[c], inv);
      for (std::size_t j = c; j < cols; ++j)
        if (pr[j]) ri[j] = mod.sub(ri[j], mod.mul(f, pr[j]));
    }
    ++rank;
  }
  return rank;
}

ModularEchelon rref_mod(const IntegerMatrix& m, const Modulus& mod) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t k = 0; k < rows * cols; ++k) a[k] = m.data()[k].mod_u64(mod.prime());
  ModularEchelon out;
  out.cols = cols;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[rank * cols + j]);
    std::uint64_t* pr = &a[rank * cols];
    std::uint64_t inv = mod.inv(pr[c]);
    for (std::size_t j = c; j < cols; ++j) pr[j] = mod.mul(pr[j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank) continue;
      std::uint64_t* ri = &a[i * cols];
      std::uint64_t f = ri[c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        if (pr[j]) ri[j] = mod.sub(ri[j], mod.mul(f, pr[j]));
    }
    out.pivots.push_back(c);
    ++rank;
  }
  out.reduced.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(rank * cols));
  return out;
}

std::vector<std::uint64_t> charpoly_mod(const IntegerMatrix& m, const Modulus& mod) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorKind::kDimension, "charpoly_mod: matrix is not square");
  std::vector<std::uint64_t> h(n * n);
  for (std::size_t k = 0; k < n * n; ++k) h[k] = m.data()[k].mod_u64(mod.prime());
  auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return h[i * n + j]; };

  // Similarity transform to upper Hessenberg form.
  for (std::size_t c = 1; c + 1 < n; ++c) {
    std::size_t piv = c;
    while (piv < n && at(piv, c - 1) == 0) ++piv;
    if (piv == n) continue;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(piv, j), at(c, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(at(i, piv), at(i, c));
    }
    const std::uint64_t inv = mod.inv(at(c, c - 1));
    for (std::size_t i = c + 1; i < n; ++i) {
      const std::uint64_t u = mod.mul(at(i, c - 1), inv);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (at(c, j)) at(i, j) = mod.sub(at(i, j), mod.mul(u, at(c, j)));
      for (std::size_t r = 0; r < n; ++r)
        if (at(r, i)) at(r, c) = mod.add(at(r, c), mod.mul(u, at(r, i)));
    }
  }

  // p_k = (x - h_kk) p_{k-1} - sum_i h_{k-i,k} (h_{k,k-1} ... h_{k-i+1,k-i}) p_{k-i-1}
  std::vector<std::vector<std::uint64_t>> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    auto& pk = p[k];
    pk.assign(k + 1, 0);
    const std::uint64_t d = at(k - 1, k - 1);
    for (std::size_t e = 0; e < k; ++e) {
      pk[e + 1] = mod.add(pk[e + 1], p[k - 1][e]);
      pk[e] = mod.sub(pk[e], mod.mul(d, p[k - 1][e]));
    }
    std::uint64_t t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t = mod.mul(t, at(k - i, k - i - 1));
      if (t == 0) break;
      const std::uint64_t f = mod.mul(t, at(k - i - 1, k - 1));
      if (f == 0) continue;
      for (std::size_t e = 0; e < p[k - i - 1].size(); ++e) pk[e] = mod.sub(pk[e], mod.mul(f, p[k - i - 1][e]));
    }
  }
  return p[n];
}

std::size_t root_multiplicity(std::vector<std::uint64_t> poly, std::uint64_t root, const Modulus& mod) {
  std::size_t mult = 0;
  while (poly.size() > 1) {
    // Synthetic division by (x - root); the remainder is poly(root).
    std::vector<std::uint64_t> q(poly.size() - 1);
    std::uint64_t acc = 0;
    for (std::size_t e = poly.size(); e-- > 0;) {
      acc = mod.add(mod.mul(acc, root), poly[e]);
      if (e > 0) q[e - 1] = acc;
    }
    if (acc != 0) break;
    ++mult;
    poly = std::move(q);
  }
  return mult;
}

}  // namespace ratiocert::modular
