#include "ratiocert/exact_linalg/integer.hpp"

#include <cctype>
#include <stdexcept>

#include "ratiocert/errors.hpp"

namespace ratiocert {
namespace {

constexpr __int128 kInt64Min = std::numeric_limits<std::int64_t>::min();
constexpr __int128 kInt64Max = std::numeric_limits<std::int64_t>::max();

mpz_class mpz_from_int128(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return negative ? mpz_class(-r) : r;
}

}  // namespace

Integer Integer::from_int128(__int128 v) {
  if (v >= kInt64Min && v <= kInt64Max) return Integer(static_cast<std::int64_t>(v));
  Integer r;
  r.big_ = std::make_unique<mpz_class>(mpz_from_int128(v));
  return r;
}

void Integer::assign_big(const mpz_class& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) {
    small_ = mpz_get_si(v.get_mpz_t());
    big_.reset();
  } else {
    small_ = 0;
    big_ = std::make_unique<mpz_class>(v);
  }
}

Integer Integer::parse(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw Error(ErrorKind::kParse, "empty integer literal '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw Error(ErrorKind::kParse, "invalid integer literal '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  Integer r;
  r.assign_big(mpz_class(s, 10));
  return r;
}

std::int64_t Integer::to_int64() const {
  if (big_) throw std::overflow_error("Integer does not fit in int64: " + to_string());
  return small_;
}

mpz_class Integer::to_mpz() const {
  if (big_) return *big_;
  return mpz_class(static_cast<long>(small_));
}

std::string Integer::to_string() const {
  if (big_) return big_->get_str(10);
  return std::to_string(small_);
}

std::size_t Integer::bit_length() const noexcept {
  if (big_) return mpz_sizeinbase(big_->get_mpz_t(), 2);
  std::uint64_t u = small_ < 0 ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(small_)
                               : static_cast<std::uint64_t>(small_);
  return u == 0 ? 0 : 64 - static_cast<std::size_t>(__builtin_clzll(u));
}

std::uint64_t Integer::mod_u64(std::uint64_t p) const {
  if (!big_) {
    __int128 r = static_cast<__int128>(small_) % static_cast<__int128>(p);
    if (r < 0) r += p;
    return static_cast<std::uint64_t>(r);
  }
  return mpz_fdiv_ui(big_->get_mpz_t(), p);
}

Integer Integer::operator-() const {
  if (!big_) {
    if (small_ != std::numeric_limits<std::int64_t>::min()) return Integer(-small_);
    return from_int128(-static_cast<__int128>(small_));
  }
  Integer r;
  r.assign_big(mpz_class(-*big_));
  return r;
}

Integer Integer::add_slow(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return from_int128(static_cast<__int128>(a.small_) + b.small_);
  Integer r;
  r.assign_big(mpz_class(a.to_mpz() + b.to_mpz()));
  return r;
}

Integer Integer::sub_slow(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return from_int128(static_cast<__int128>(a.small_) - b.small_);
  Integer r;
  r.assign_big(mpz_class(a.to_mpz() - b.to_mpz()));
  return r;
}

Integer Integer::mul_slow(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return from_int128(static_cast<__int128>(a.small_) * b.small_);
  Integer r;
  r.assign_big(mpz_class(a.to_mpz() * b.to_mpz()));
  return r;
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  int c;
  if (a.big_ && b.big_) {
    c = cmp(*a.big_, *b.big_);
  } else if (a.big_) {
    c = sgn(*a.big_);  // |a| exceeds every int64, so its sign decides
  } else {
    c = -sgn(*b.big_);
  }
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

Integer divexact(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!a.big_ && !b.big_) {
    if (!(a.small_ == std::numeric_limits<std::int64_t>::min() && b.small_ == -1)) return Integer(a.small_ / b.small_);
  }
  mpz_class q;
  mpz_class am = a.to_mpz();
  mpz_class bm = b.to_mpz();
  mpz_divexact(q.get_mpz_t(), am.get_mpz_t(), bm.get_mpz_t());
  Integer r;
  r.assign_big(q);
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  mpz_class q;
  mpz_class am = a.to_mpz();
  mpz_class bm = b.to_mpz();
  mpz_fdiv_q(q.get_mpz_t(), am.get_mpz_t(), bm.get_mpz_t());
  Integer r;
  r.assign_big(q);
  return r;
}

Integer floor_mod(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!a.big_ && !b.big_ && b.small_ != -1) {
    std::int64_t m = a.small_ % b.small_;
    if (m != 0 && ((m < 0) != (b.small_ < 0))) m += b.small_;
    return Integer(m);
  }
  mpz_class m;
  mpz_class am = a.to_mpz();
  mpz_class bm = b.to_mpz();
  mpz_fdiv_r(m.get_mpz_t(), am.get_mpz_t(), bm.get_mpz_t());
  Integer r;
  r.assign_big(m);
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_ && a.small_ != std::numeric_limits<std::int64_t>::min() &&
      b.small_ != std::numeric_limits<std::int64_t>::min()) {
    std::uint64_t x = static_cast<std::uint64_t>(a.small_ < 0 ? -a.small_ : a.small_);
    std::uint64_t y = static_cast<std::uint64_t>(b.small_ < 0 ? -b.small_ : b.small_);
    while (y != 0) {
      std::uint64_t t = x % y;
      x = y;
      y = t;
    }
    return Integer(x);
  }
  mpz_class g;
  mpz_class am = a.to_mpz();
  mpz_class bm = b.to_mpz();
  mpz_gcd(g.get_mpz_t(), am.get_mpz_t(), bm.get_mpz_t());
  Integer r;
  r.assign_big(g);
  return r;
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return Integer(0);
  Integer g = gcd(a, b);
  return abs(divexact(a, g) * b);
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer Integer::cross_divexact(const Integer& a, const Integer& p, const Integer& b, const Integer& c,
                                const Integer& d) {
  if (!a.big_ && !p.big_ && !b.big_ && !c.big_ && !d.big_) {
    // Products of int64 values fit in 127 bits, so the difference cannot overflow int128.
    __int128 num = static_cast<__int128>(a.small_) * p.small_ - static_cast<__int128>(b.small_) * c.small_;
    if (d.small_ == 1) return from_int128(num);
    return from_int128(num / d.small_);
  }
  mpz_class num = a.to_mpz() * p.to_mpz() - b.to_mpz() * c.to_mpz();
  if (d.is_one()) {
    Integer r;
    r.assign_big(num);
    return r;
  }
  mpz_class q;
  mpz_class dm = d.to_mpz();
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), dm.get_mpz_t());
  Integer r;
  r.assign_big(q);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

}  // namespace ratiocert
