#include "ydb/rational.hpp"

#include <limits>

#include "ydb/errors.hpp"

namespace ydb {
namespace {

using u128 = unsigned __int128;

u128 magnitude(__int128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

mpz_class to_mpz(__int128 v) {
  u128 m = magnitude(v);
  mpz_class hi = static_cast<unsigned long>(m >> 64);
  mpz_class lo = static_cast<unsigned long>(m & 0xffffffffffffffffULL);
  mpz_class r = (hi << 64) + lo;
  return v < 0 ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw DivisionByZero("rational with zero denominator");
  *this = from_wide(n, d);
}

Rational::Rational(const mpq_class& q) { *this = from_big(q); }

Rational Rational::from_wide(__int128 n, __int128 d) {
  if (d == 0) throw DivisionByZero("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  u128 g = gcd128(magnitude(n), u128(d));
  if (g > 1) {
    n /= static_cast<__int128>(g);
    d /= static_cast<__int128>(g);
  }
  Rational r;
  if (fits64(n) && fits64(d)) {
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  mpq_class q(to_mpz(n), to_mpz(d));
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::from_big(mpq_class q) {
  q.canonicalize();
  Rational r;
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    r.num_ = q.get_num().get_si();
    r.den_ = q.get_den().get_si();
    return r;
  }
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal");
  std::string s(text);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal '" + s + "'");
  if (q.get_den() == 0) throw DivisionByZero("rational literal with zero denominator");
  return from_big(q);
}

bool Rational::is_integer() const { return big_ ? false : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return q;
}

std::string Rational::str() const {
  if (big_) return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (big_) return from_big(1 / *big_);
  return from_wide(den_, num_);
}

Rational Rational::operator-() const {
  if (big_) return from_big(-*big_);
  return from_wide(-static_cast<__int128>(num_), den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    if (a.den_ == b.den_) {
      return Rational::from_wide(static_cast<__int128>(a.num_) + b.num_, a.den_);
    }
    __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Rational::from_wide(n, d);
  }
  return Rational::from_big(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) {
      return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_, 1);
    }
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_,
                               static_cast<__int128>(a.den_) * b.den_);
  }
  return Rational::from_big(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical demotion: a small and a big value never coincide
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

}  // namespace ydb
