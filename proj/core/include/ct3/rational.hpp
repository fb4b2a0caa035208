#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "ct3/int_ops.hpp"

namespace ct3 {

// Exact reduced fraction with positive denominator. Comparison is exact
// cross multiplication in 128 bits; +,-,*,/ reduce first and throw on
// 64-bit overflow rather than wrap.
class Rational {
 public:
  Rational() = default;
  Rational(i64 n) : num_(n), den_(1) {}  // NOLINT: implicit from integers is intended
  Rational(i64 n, i64 d) : num_(n), den_(d) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) { num_ = checked_sub(0, num_); den_ = checked_sub(0, den_); }
    reduce();
  }

  i64 num() const { return num_; }
  i64 den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  i64 floor() const { return floor_div(num_, den_); }
  i64 ceil() const { return ceil_div(num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    i128 lhs = i128(a.num_) * b.den_;
    i128 rhs = i128(b.num_) * a.den_;
    return lhs < rhs ? std::strong_ordering::less
         : lhs > rhs ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    i64 g = gcd64(a.den_, b.den_);
    i64 bd = b.den_ / g;
    i64 n = checked_add(checked_mul(a.num_, bd), checked_mul(b.num_, a.den_ / g));
    return Rational(n, checked_mul(a.den_, bd));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator-(const Rational& a) { return Rational(checked_sub(0, a.num_), a.den_); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    i64 g1 = gcd64(a.num_ < 0 ? -a.num_ : a.num_, b.den_);
    i64 g2 = gcd64(b.num_ < 0 ? -b.num_ : b.num_, a.den_);
    return Rational(checked_mul(a.num_ / g1, b.num_ / g2),
                    checked_mul(a.den_ / g2, b.den_ / g1));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return a * Rational(b.den_, b.num_);
  }

  // "a/m" with optional sign; a bare integer is accepted as "a/1".
  static std::optional<Rational> parse(std::string_view s);

  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  void reduce() {
    i64 a = num_ < 0 ? -num_ : num_;
    i64 g = gcd64(a, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  i64 num_{0};
  i64 den_{1};
};

inline std::optional<Rational> Rational::parse(std::string_view s) {
  auto parse_int = [](std::string_view v, i64& out) -> bool {
    if (v.empty()) return false;
    size_t i = 0;
    bool neg = false;
    if (v[0] == '+' || v[0] == '-') { neg = v[0] == '-'; i = 1; }
    if (i == v.size()) return false;
    i64 acc = 0;
    for (; i < v.size(); ++i) {
      if (v[i] < '0' || v[i] > '9') return false;
      acc = checked_add(checked_mul(acc, 10), v[i] - '0');
    }
    out = neg ? -acc : acc;
    return true;
  };
  try {
    size_t slash = s.find('/');
    i64 n = 0, d = 1;
    if (slash == std::string_view::npos) {
      if (!parse_int(s, n)) return std::nullopt;
    } else {
      if (!parse_int(s.substr(0, slash), n)) return std::nullopt;
      if (!parse_int(s.substr(slash + 1), d)) return std::nullopt;
      if (d == 0) return std::nullopt;
    }
    return Rational(n, d);
  } catch (const std::overflow_error&) {
    return std::nullopt;
  }
}

}  // namespace ct3
