#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers over arbitrary-precision integers.
 *
 * Every value is kept in lowest terms with a positive denominator, and zero
 * is always 0/1, so equality is structural. The integer substrate is GMP.
 */

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "errors.hpp"

namespace pascalrows {

using BigInt = mpz_class;

inline BigInt parse_bigint(std::string_view text) {
  if (text.empty()) throw DomainError("empty integer literal");
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) throw DomainError("malformed integer literal: " + std::string(text));
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw DomainError("malformed integer literal: " + std::string(text));
    }
  }
  std::string digits(text.front() == '+' ? text.substr(1) : text);
  return BigInt(digits, 10);
}

inline std::string to_string(const BigInt& value) { return value.get_str(10); }

class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  Rational(const BigInt& numerator, const BigInt& denominator) {
    if (sgn(denominator) == 0) throw ArithmeticError("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
  }
  Rational(long numerator, long denominator) : Rational(BigInt(numerator), BigInt(denominator)) {}

  /// Parses "num/den" or a bare integer.
  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_bigint(text));
    return Rational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
  }

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "num/den", or just "num" when the denominator is 1.
  std::string to_string() const {
    if (is_integer()) return value_.get_num().get_str(10);
    return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
  }

  Rational& operator+=(const Rational& other) {
    value_ += other.value_;
    return *this;
  }
  Rational& operator-=(const Rational& other) {
    value_ -= other.value_;
    return *this;
  }
  Rational& operator*=(const Rational& other) {
    value_ *= other.value_;
    return *this;
  }
  Rational& operator/=(const Rational& other) {
    if (other.is_zero()) throw ArithmeticError("division by zero");
    value_ /= other.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(Rational a) {
    a.value_ = -a.value_;
    return a;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class value_;  // canonical: gcd(num, den) = 1, den > 0
};

}  // namespace pascalrows
