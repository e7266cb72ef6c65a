#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ratiocert/exact_linalg/exact_matrix.hpp"
#include "ratiocert/exact_linalg/integer_matrix.hpp"
#include "ratiocert/exact_linalg/rational.hpp"

namespace ratiocert::modular {

/// Arithmetic modulo a prime below 2^62. The Mersenne prime 2^61-1 takes a
/// shift-and-add reduction; other primes go through 128-bit remainder.
class Modulus {
 public:
  explicit Modulus(std::uint64_t p) : p_(p), mersenne61_(p == (std::uint64_t{1} << 61) - 1) {}

  std::uint64_t prime() const noexcept { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
    if (mersenne61_) {
      std::uint64_t lo = static_cast<std::uint64_t>(z) & p_;
      std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
      std::uint64_t s = lo + hi;
      return s >= p_ ? s - p_ : s;
    }
    return static_cast<std::uint64_t>(z % p_);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
  /// Inverse of a nonzero residue.
  std::uint64_t inv(std::uint64_t a) const noexcept { return pow(a, p_ - 2); }
  /// Image of a rational; nullopt when p divides the denominator.
  std::optional<std::uint64_t> reduce(const Rational& r) const;

 private:
  std::uint64_t p_;
  bool mersenne61_;
};

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// The i-th prime used for multi-modular work: 2^61-1 first, then the primes
/// just below it in decreasing order.
std::uint64_t working_prime(std::size_t index);

/// Finds n/d with |n|, d <= sqrt(modulus/2) and n = d*residue mod modulus.
std::optional<Rational> reconstruct(const Integer& residue, const Integer& modulus);

/// Row echelon data of a matrix over GF(p).
struct ModularEchelon {
  std::vector<std::size_t> pivots;
  /// Reduced row-echelon form (rank x cols), row-major residues.
  std::vector<std::uint64_t> reduced;
  std::size_t cols = 0;
};

/// Rank over GF(p); nullopt if some denominator vanishes mod p.
std::optional<std::size_t> rank_mod(const ExactMatrix& m, const Modulus& mod);
ModularEchelon rref_mod(const IntegerMatrix& m, const Modulus& mod);

/// Characteristic polynomial det(xI - M) over GF(p) of a square integer matrix,
/// coefficients from x^0 up to the leading 1. Hessenberg reduction, O(n^3).
std::vector<std::uint64_t> charpoly_mod(const IntegerMatrix& m, const Modulus& mod);

/// Multiplicity of `root` as a zero of the polynomial (coefficients low to high).
std::size_t root_multiplicity(std::vector<std::uint64_t> poly, std::uint64_t root, const Modulus& mod);

}  // namespace ratiocert::modular
