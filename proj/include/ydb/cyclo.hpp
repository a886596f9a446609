#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "ydb/rational.hpp"

namespace ydb {

/// Element c0 + c1*w + c2*w^2 + c3*w^3 of Q(w) with w^4 = -1, so w is a
/// primitive eighth root of unity and i := w^2 is a primitive fourth root.
///
/// Every scalar in the library is a Cyclo. Arithmetic reduces modulo the
/// minimal polynomial w^4 + 1 eagerly, so equality is coefficientwise.
class Cyclo {
 public:
  using Coeffs = std::array<Rational, 4>;

  Cyclo() = default;
  Cyclo(std::int64_t n) : c_{Rational(n), {}, {}, {}} {}  // NOLINT(google-explicit-constructor)
  Cyclo(Rational q) : c_{std::move(q), {}, {}, {}} {}     // NOLINT(google-explicit-constructor)
  Cyclo(Rational c0, Rational c1, Rational c2, Rational c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  /// w^k for any integer k.
  static Cyclo root(int k);
  static Cyclo omega() { return root(1); }
  static Cyclo iota() { return root(2); }

  const Rational& operator[](int k) const { return c_[k]; }
  const Coeffs& coeffs() const { return c_; }

  bool is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
  }
  bool is_one() const {
    return c_[0].is_one() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
  }
  bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

  /// Galois automorphism w -> w^k (k odd).
  Cyclo galois(int k) const;
  /// Field norm down to Q.
  Rational norm() const;
  Cyclo inverse() const;
  Cyclo pow(int e) const;

  Cyclo operator-() const;
  friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator/(const Cyclo& a, const Cyclo& b);
  Cyclo& operator+=(const Cyclo& b);
  Cyclo& operator-=(const Cyclo& b);
  Cyclo& operator*=(const Cyclo& b) { return *this = *this * b; }
  Cyclo& operator/=(const Cyclo& b) { return *this = *this / b; }

  friend bool operator==(const Cyclo& a, const Cyclo& b) { return a.c_ == b.c_; }
  /// Lexicographic on (c0, c1, c2, c3); used only to order outputs.
  friend std::strong_ordering operator<=>(const Cyclo& a, const Cyclo& b);

  /// Human-readable form, e.g. "1/2 + 1/2*i" or "-w^3".
  std::string str() const;

 private:
  Coeffs c_;
};

inline bool is_zero(const Cyclo& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }

/// Parses the CLI spelling of a fourth root of unity: "1", "-1", "i", "-i".
Cyclo parse_fourth_root(const std::string& text);
/// Inverse of parse_fourth_root; throws InvalidRoot for other values.
std::string fourth_root_name(const Cyclo& z);
/// True iff z^4 = 1.
bool is_fourth_root_of_unity(const Cyclo& z);
/// True iff z has multiplicative order exactly 4.
bool is_primitive_fourth_root(const Cyclo& z);

/// Rational k-th root of q if one exists (the nonnegative one for even k).
std::optional<Rational> rational_root(const Rational& q, int k);
/// A square root of z in Q(w), if z is a square there.
std::optional<Cyclo> sqrt(const Cyclo& z);

}  // namespace ydb
