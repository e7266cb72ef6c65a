#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

namespace ratiocert {

/// Arbitrary-precision integer with an inline int64 fast path.
///
/// Values that fit in an int64 are stored inline and never allocate. Anything
/// larger is promoted to a GMP integer; results are demoted again whenever they
/// fit, so `big_` is non-null iff the value lies outside the int64 range.
class Integer {
 public:
  Integer() noexcept = default;
  template <std::signed_integral T>
  Integer(T v) noexcept : small_(static_cast<std::int64_t>(v)) {}  // NOLINT(google-explicit-constructor)
  template <std::unsigned_integral T>
  Integer(T v) {  // NOLINT(google-explicit-constructor)
    if (v <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      small_ = static_cast<std::int64_t>(v);
    } else {
      assign_big(mpz_class(static_cast<unsigned long>(v)));
    }
  }
  explicit Integer(const mpz_class& v) { assign_big(v); }
  static Integer from_int128(__int128 v);

  Integer(const Integer& o) : small_(o.small_), big_(o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr) {}
  Integer(Integer&&) noexcept = default;
  Integer& operator=(const Integer& o) {
    if (this != &o) {
      small_ = o.small_;
      big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Integer& operator=(Integer&&) noexcept = default;

  /// Parses an optionally signed decimal string. Throws Error(kParse) on bad input.
  static Integer parse(std::string_view text);

  bool is_small() const noexcept { return !big_; }
  std::int64_t small_value() const noexcept { return small_; }
  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool is_one() const noexcept { return !big_ && small_ == 1; }
  int sign() const noexcept {
    if (!big_) return (small_ > 0) - (small_ < 0);
    return sgn(*big_);
  }
  /// Throws std::overflow_error when the value does not fit.
  std::int64_t to_int64() const;
  mpz_class to_mpz() const;
  std::string to_string() const;
  std::size_t bit_length() const noexcept;
  /// Residue in [0, p) for p >= 1.
  std::uint64_t mod_u64(std::uint64_t p) const;

  Integer operator-() const;
  Integer& operator+=(const Integer& o) { return *this = *this + o; }
  Integer& operator-=(const Integer& o) { return *this = *this - o; }
  Integer& operator*=(const Integer& o) { return *this = *this * o; }

  friend Integer operator+(const Integer& a, const Integer& b) {
    std::int64_t r;
    if (!a.big_ && !b.big_ && !__builtin_add_overflow(a.small_, b.small_, &r)) return Integer(r);
    return add_slow(a, b);
  }
  friend Integer operator-(const Integer& a, const Integer& b) {
    std::int64_t r;
    if (!a.big_ && !b.big_ && !__builtin_sub_overflow(a.small_, b.small_, &r)) return Integer(r);
    return sub_slow(a, b);
  }
  friend Integer operator*(const Integer& a, const Integer& b) {
    std::int64_t r;
    if (!a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &r)) return Integer(r);
    return mul_slow(a, b);
  }

  friend bool operator==(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return cmp(*a.big_, *b.big_) == 0;
    return false;  // normalized: a small and a big value never coincide
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept;

  /// Exact quotient; the caller guarantees b divides a.
  friend Integer divexact(const Integer& a, const Integer& b);
  /// Quotient rounded toward negative infinity.
  friend Integer floor_div(const Integer& a, const Integer& b);
  /// Remainder with the sign of b (floor convention).
  friend Integer floor_mod(const Integer& a, const Integer& b);
  /// Non-negative greatest common divisor; gcd(0, 0) = 0.
  friend Integer gcd(const Integer& a, const Integer& b);
  friend Integer lcm(const Integer& a, const Integer& b);
  friend Integer abs(const Integer& a);

  /// (a*p - b*c) / d, exact. The inner step of fraction-free elimination.
  static Integer cross_divexact(const Integer& a, const Integer& p, const Integer& b, const Integer& c,
                                const Integer& d);

 private:
  void assign_big(const mpz_class& v);
  static Integer add_slow(const Integer& a, const Integer& b);
  static Integer sub_slow(const Integer& a, const Integer& b);
  static Integer mul_slow(const Integer& a, const Integer& b);

  std::int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Integer& v);

}  // namespace ratiocert
