#include "ratiocert/exact_linalg/rational.hpp"

#include <stdexcept>

#include "ratiocert/errors.hpp"

namespace ratiocert {

Rational::Rational(Integer n, Integer d) {
  if (d.is_zero()) throw std::domain_error("rational with zero denominator");
  *this = make(std::move(n), std::move(d));
}

Rational Rational::make(Integer n, Integer d) {
  if (d.sign() < 0) {
    n = -n;
    d = -d;
  }
  if (n.is_zero()) return Rational();
  if (d.is_one()) return Rational(std::move(n), std::move(d), Canonical{});
  Integer g = gcd(n, d);
  if (g.is_one()) return Rational(std::move(n), std::move(d), Canonical{});
  return Rational(divexact(n, g), divexact(d, g), Canonical{});
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::parse(text));
  Integer d = Integer::parse(text.substr(slash + 1));
  if (d.is_zero()) throw Error(ErrorKind::kParse, "zero denominator in '" + std::string(text) + "'");
  return Rational(Integer::parse(text.substr(0, slash)), d);
}

std::string Rational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_.is_one() && b.den_.is_one()) return Rational(a.num_ + b.num_);
  if (a.den_ == b.den_) return Rational::make(a.num_ + b.num_, a.den_);
  return Rational::make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  if (a.den_.is_one() && b.den_.is_one()) return Rational(a.num_ - b.num_);
  if (a.den_ == b.den_) return Rational::make(a.num_ - b.num_, a.den_);
  return Rational::make(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  if (a.den_.is_one() && b.den_.is_one()) return Rational(a.num_ * b.num_);
  // Cross-cancel first so the product is already canonical.
  Integer g1 = gcd(a.num_, b.den_);
  Integer g2 = gcd(b.num_, a.den_);
  Integer n = divexact(a.num_, g1) * divexact(b.num_, g2);
  Integer d = divexact(a.den_, g2) * divexact(b.den_, g1);
  return Rational(std::move(n), std::move(d), Rational::Canonical{});
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational division by zero");
  return Rational::make(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  return (a.num_ * b.den_) <=> (b.num_ * a.den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace ratiocert
