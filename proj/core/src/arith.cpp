#include "ct3/arith.hpp"

namespace ct3 {

EuclidData euclid_pair(i64 alpha, i64 beta) {
  if (alpha < 1 || beta < 1) throw std::domain_error("euclid_pair: arguments must be positive");
  if (alpha > beta) throw std::domain_error("euclid_pair: requires alpha <= beta");
  if (beta == 1) throw std::domain_error("euclid_pair: requires beta > 1");
  if (gcd64(alpha, beta) != 1) throw std::domain_error("euclid_pair: arguments must be coprime");

  EuclidData e;
  e.alpha = alpha;
  e.beta = beta;
  if (alpha == 1) {
    e.s_bar = 1;
    e.t_bar = beta - 1;
    return e;
  }
  // alpha*t = beta*s + 1 with 0 < t < beta: t is the inverse of alpha mod beta.
  i64 t = mod_inverse(alpha, beta);
  i64 s = (checked_mul(alpha, t) - 1) / beta;
  e.s = s;
  e.t = t;
  e.s_bar = alpha - s;
  e.t_bar = beta - t;
  return e;
}

std::optional<Representation> represent(i64 m, i64 alpha, i64 beta) {
  if (alpha < 1 || beta < 1) throw std::domain_error("represent: generators must be positive");
  if (gcd64(alpha, beta) != 1) throw std::domain_error("represent: generators must be coprime");
  i64 p1 = beta == 1 ? 0 : mod_floor(checked_mul(mod_floor(m, beta), mod_inverse(alpha, beta)), beta);
  i64 rest = checked_sub(m, checked_mul(p1, alpha));
  if (rest < 0) return std::nullopt;
  i64 p2 = rest / beta;
  if (p2 * beta != rest) return std::nullopt;  // cannot happen for coprime generators
  return Representation{p1, p2};
}

std::vector<Representation> represent_all(i64 m, i64 alpha, i64 beta, i64 p1_max) {
  std::vector<Representation> out;
  auto base = represent(m, alpha, beta);
  if (!base) return out;
  for (i64 p1 = base->p1; p1 <= p1_max; p1 += beta) {
    i64 rest = m - checked_mul(p1, alpha);
    if (rest < 0) break;
    out.push_back({p1, rest / beta});
  }
  return out;
}

bool exists_congruent_in_range(const Rational& lo, const Rational& hi, i64 residue, i64 modulus) {
  if (modulus < 1) throw std::domain_error("exists_congruent_in_range: modulus must be positive");
  i64 first = lo.ceil();
  i64 last = hi.floor();
  if (first > last) return false;
  i64 xi = checked_add(first, mod_floor(residue - first, modulus));
  return xi <= last;
}

}  // namespace ct3
