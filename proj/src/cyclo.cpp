#include "ydb/cyclo.hpp"

#include "ydb/errors.hpp"

namespace ydb {

Cyclo Cyclo::root(int k) {
  k %= 8;
  if (k < 0) k += 8;
  Cyclo r;
  if (k < 4) {
    r.c_[k] = 1;
  } else {
    r.c_[k - 4] = -1;
  }
  return r;
}

Cyclo Cyclo::galois(int k) const {
  if (k % 2 == 0) throw Error("galois: exponent must be odd");
  Cyclo r;
  for (int j = 0; j < 4; ++j) {
    if (c_[j].is_zero()) continue;
    int e = ((j * k) % 8 + 8) % 8;
    if (e < 4) {
      r.c_[e] += c_[j];
    } else {
      r.c_[e - 4] -= c_[j];
    }
  }
  return r;
}

Rational Cyclo::norm() const {
  // a * sigma_5(a) lies in Q(i); multiplying by its complex conjugate lands in Q.
  Cyclo half = *this * galois(5);
  Cyclo full = half * half.galois(3);
  return full[0];
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(w)");
  if (is_rational()) return Cyclo(c_[0].inverse());
  Cyclo half = *this * galois(5);
  Cyclo conj = half.galois(3);
  Rational n = (half * conj)[0];
  Cyclo num = galois(5) * conj;
  Rational inv = n.inverse();
  return Cyclo(num.c_[0] * inv, num.c_[1] * inv, num.c_[2] * inv, num.c_[3] * inv);
}

Cyclo Cyclo::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclo result(1);
  Cyclo base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Cyclo Cyclo::operator-() const { return Cyclo(-c_[0], -c_[1], -c_[2], -c_[3]); }

Cyclo& Cyclo::operator+=(const Cyclo& b) {
  for (int k = 0; k < 4; ++k) {
    if (!b.c_[k].is_zero()) c_[k] += b.c_[k];
  }
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& b) {
  for (int k = 0; k < 4; ++k) {
    if (!b.c_[k].is_zero()) c_[k] -= b.c_[k];
  }
  return *this;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
  Cyclo r = a;
  r += b;
  return r;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) {
  Cyclo r = a;
  r -= b;
  return r;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  if (a.is_rational()) {
    if (a.c_[0].is_zero()) return Cyclo();
    if (a.c_[0].is_one()) return b;
    const Rational& s = a.c_[0];
    return Cyclo(s * b.c_[0], s * b.c_[1], s * b.c_[2], s * b.c_[3]);
  }
  if (b.is_rational()) return b * a;
  Cyclo r;
  for (int i = 0; i < 4; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < 4; ++j) {
      if (b.c_[j].is_zero()) continue;
      Rational p = a.c_[i] * b.c_[j];
      int e = i + j;
      if (e < 4) {
        r.c_[e] += p;
      } else {
        r.c_[e - 4] -= p;
      }
    }
  }
  return r;
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

std::strong_ordering operator<=>(const Cyclo& a, const Cyclo& b) {
  for (int k = 0; k < 4; ++k) {
    auto c = a.c_[k] <=> b.c_[k];
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

std::string rational_text(const Rational& q) {
  return q.is_integer() ? q.str().substr(0, q.str().size() - 2) : q.str();
}

}  // namespace

std::string Cyclo::str() const {
  static const char* const kSymbols[4] = {"", "w", "i", "w^3"};
  std::string out;
  for (int k = 0; k < 4; ++k) {
    const Rational& q = c_[k];
    if (q.is_zero()) continue;
    bool negative = q.sign() < 0;
    Rational mag = negative ? -q : q;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += rational_text(mag);
    } else if (mag.is_one()) {
      out += kSymbols[k];
    } else {
      out += rational_text(mag) + "*" + kSymbols[k];
    }
  }
  return out.empty() ? "0" : out;
}

Cyclo parse_fourth_root(const std::string& text) {
  if (text == "1") return Cyclo(1);
  if (text == "-1") return Cyclo(-1);
  if (text == "i") return Cyclo::iota();
  if (text == "-i") return -Cyclo::iota();
  throw InvalidRoot("not a fourth root of unity spelling: '" + text + "'");
}

std::string fourth_root_name(const Cyclo& z) {
  if (z == Cyclo(1)) return "1";
  if (z == Cyclo(-1)) return "-1";
  if (z == Cyclo::iota()) return "i";
  if (z == -Cyclo::iota()) return "-i";
  throw InvalidRoot("not a fourth root of unity: " + z.str());
}

bool is_fourth_root_of_unity(const Cyclo& z) { return z.pow(4).is_one(); }

bool is_primitive_fourth_root(const Cyclo& z) {
  return is_fourth_root_of_unity(z) && !z.pow(2).is_one();
}

std::optional<Rational> rational_root(const Rational& q, int k) {
  if (k <= 0) throw Error("rational_root: exponent must be positive");
  if (q.is_zero()) return Rational();
  bool negative = q.sign() < 0;
  if (negative && k % 2 == 0) return std::nullopt;
  mpq_class m = q.to_mpq();
  mpz_class num = abs(m.get_num());
  mpz_class den = m.get_den();
  mpz_class rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k)) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(k)) == 0) return std::nullopt;
  Rational r(mpq_class(rn, rd));
  return negative ? -r : r;
}

namespace {

// Square roots go up the tower Q < Q(i) < Q(w): for x = a + b*t with t^2 = d,
// x^2 = p + q*t forces a^2 = (p +- sqrt(p^2 - d*q^2)) / 2 and b = q / (2a).

bool in_gaussian(const Cyclo& z) { return z[1].is_zero() && z[3].is_zero(); }

std::optional<Cyclo> sqrt_gaussian(const Cyclo& z) {
  const Rational& p = z[0];
  const Rational& q = z[2];
  if (q.is_zero()) {
    if (auto r = rational_root(p, 2)) return Cyclo(*r);
    if (auto r = rational_root(-p, 2)) return Cyclo(Rational(), Rational(), *r, Rational());
    return std::nullopt;
  }
  auto s = rational_root(p * p + q * q, 2);
  if (!s) return std::nullopt;
  for (const Rational& cand : {(p + *s) / Rational(2), (p - *s) / Rational(2)}) {
    auto a = rational_root(cand, 2);
    if (!a || a->is_zero()) continue;
    Cyclo x(*a, Rational(), q / (Rational(2) * *a), Rational());
    if (x * x == z) return x;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Cyclo> sqrt(const Cyclo& z) {
  if (z.is_zero()) return Cyclo();
  const Cyclo w = Cyclo::omega();
  const Cyclo i = Cyclo::iota();
  Cyclo p(z[0], Rational(), z[2], Rational());
  Cyclo q(z[1], Rational(), z[3], Rational());
  std::optional<Cyclo> out;
  if (q.is_zero()) {
    if (auto a = sqrt_gaussian(p)) {
      out = *a;
    } else if (auto b = sqrt_gaussian(-(i * p))) {
      out = *b * w;
    }
  } else if (auto s = sqrt_gaussian(p * p - i * q * q)) {
    for (const Cyclo& cand : {(p + *s) / Cyclo(2), (p - *s) / Cyclo(2)}) {
      if (!in_gaussian(cand)) continue;
      auto a = sqrt_gaussian(cand);
      if (!a || a->is_zero()) continue;
      Cyclo x = *a + (q / (Cyclo(2) * *a)) * w;
      if (x * x == z) {
        out = x;
        break;
      }
    }
  }
  if (out && *out * *out == z) return out;
  return std::nullopt;
}

}  // namespace ydb
