#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "ratiocert/exact_linalg/integer.hpp"

namespace ratiocert {

/// Exact rational number in canonical form: gcd(|num|, den) = 1, den > 0, zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(Integer n) : num_(std::move(n)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  Rational(T n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when den is zero.
  Rational(Integer n, Integer d);

  /// Accepts "p", "-p" and "p/q".
  static Rational parse(std::string_view text);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  bool is_integer() const noexcept { return den_.is_one(); }
  int sign() const noexcept { return num_.sign(); }
  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  struct Canonical {};
  Rational(Integer n, Integer d, Canonical) : num_(std::move(n)), den_(std::move(d)) {}
  static Rational make(Integer n, Integer d);

  Integer num_;
  Integer den_ = Integer(1);
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace ratiocert
