#pragma once

#include <optional>
#include <vector>

#include "ct3/rational.hpp"

namespace ct3 {

// For coprime alpha <= beta with beta > 1: the unique pair (s, t) with
// 0 < s < alpha, 0 < t < beta and alpha*t = beta*s + 1 (present only when
// alpha > 1), together with s_bar = alpha - s and t_bar = beta - t, which
// satisfy alpha*t_bar = beta*s_bar - 1. For alpha = 1 only the bar pair
// exists: s_bar = 1, t_bar = beta - 1.
struct EuclidData {
  i64 alpha{};
  i64 beta{};
  std::optional<i64> s;
  std::optional<i64> t;
  i64 s_bar{};
  i64 t_bar{};
};

EuclidData euclid_pair(i64 alpha, i64 beta);

// m = p1*alpha + p2*beta with 0 <= p1 < beta and p2 >= 0.
struct Representation {
  i64 p1{};
  i64 p2{};
  friend bool operator==(const Representation&, const Representation&) = default;
};

// The normalized representation of m over coprime (alpha, beta), when one
// exists. Absence is a value, not an error.
std::optional<Representation> represent(i64 m, i64 alpha, i64 beta);

// All nonnegative representations with p1 <= p1_max, ordered by p1.
std::vector<Representation> represent_all(i64 m, i64 alpha, i64 beta, i64 p1_max);

// True iff some integer in [ceil(lo), floor(hi)] is congruent to residue
// modulo modulus. Empty ranges yield false.
bool exists_congruent_in_range(const Rational& lo, const Rational& hi, i64 residue, i64 modulus);

}  // namespace ct3
