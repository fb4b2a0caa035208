#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace ct3 {

using i64 = std::int64_t;
__extension__ typedef __int128 i128;

// All library arithmetic is 64-bit with explicit overflow detection: any
// operation that would wrap throws std::overflow_error instead. Intermediate
// products use __int128 where a single multiplication could overflow.

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("i64 add overflow");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("i64 sub overflow");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("i64 mul overflow");
  return r;
}

inline i64 narrow(i128 v) {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) throw std::overflow_error("i128 narrow overflow");
  return static_cast<i64>(v);
}

// Floor division, exact for all signs. q must be nonzero.
inline i64 floor_div(i64 p, i64 q) {
  if (q == 0) throw std::domain_error("floor_div: zero divisor");
  i64 d = p / q, r = p % q;
  if (r != 0 && ((r < 0) != (q < 0))) --d;
  return d;
}

inline i64 ceil_div(i64 p, i64 q) {
  if (q == 0) throw std::domain_error("ceil_div: zero divisor");
  i64 d = p / q, r = p % q;
  if (r != 0 && ((r < 0) == (q < 0))) ++d;
  return d;
}

// Exact floor(p*m/q) with the product taken in 128 bits. q >= 1.
inline i64 floor_scaled(i64 p, i64 q, i64 m) {
  if (q < 1) throw std::domain_error("floor_scaled: q must be positive");
  i128 prod = i128(p) * i128(m);
  i128 d = prod / q, r = prod % q;
  if (r != 0 && r < 0) --d;
  return narrow(d);
}

// ceil(p*m/q) = -floor(-p*m/q).
inline i64 ceil_scaled(i64 p, i64 q, i64 m) {
  return checked_sub(0, floor_scaled(checked_sub(0, p), q, m));
}

// Canonical nonnegative residue of a modulo n >= 1.
inline i64 mod_floor(i64 a, i64 n) {
  if (n < 1) throw std::domain_error("mod_floor: modulus must be positive");
  i64 r = a % n;
  return r < 0 ? r + n : r;
}

struct EgcdResult {
  i64 g;  // gcd(a, b) >= 0
  i64 x;  // a*x + b*y = g
  i64 y;
};

inline EgcdResult egcd(i64 a, i64 b) {
  i64 old_r = a, r = b;
  i64 old_x = 1, x = 0;
  i64 old_y = 0, y = 1;
  while (r != 0) {
    i64 q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_x = std::exchange(x, old_x - q * x);
    old_y = std::exchange(y, old_y - q * y);
  }
  if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
  return {old_r, old_x, old_y};
}

// Inverse of a modulo n >= 1, in [0, n). Requires gcd(a, n) = 1.
inline i64 mod_inverse(i64 a, i64 n) {
  if (n < 1) throw std::domain_error("mod_inverse: modulus must be positive");
  if (n == 1) return 0;
  auto [g, x, y] = egcd(mod_floor(a, n), n);
  if (g != 1) throw std::domain_error("mod_inverse: arguments not coprime");
  return mod_floor(x, n);
}

inline i64 gcd64(i64 a, i64 b) { return std::gcd(a, b); }

}  // namespace ct3
