#include "ct3/thresholds.hpp"

#include <algorithm>

namespace ct3 {

bool CParams::is_valid() const {
  if (alpha < 1 || beta < alpha || p1 < 0 || p2 < 1) return false;
  if (gcd64(alpha, beta) != 1) return false;
  return p2 >= std::max(alpha, p1) || p1 == p2;
}

Rational CParams::value() const {
  return Rational(checked_add(alpha, beta),
                  checked_add(checked_mul(p1, alpha), checked_mul(p2, beta)));
}

bool Ht2Params::is_valid() const {
  if (c1 < 0 || c2 < 0 || a1 < 0 || a2 < 0) return false;
  if (checked_add(c1, a1) < std::max<i64>(2, a2)) return false;
  if (checked_add(c2, a2) < std::max<i64>(2, a1)) return false;
  i64 den = checked_add(checked_mul(c1, c2),
                        checked_add(checked_mul(a1, c2), checked_mul(a2, c1)));
  return den > 0;
}

Rational Ht2Params::value() const {
  return Rational(checked_add(c1, c2),
                  checked_add(checked_mul(c1, c2),
                              checked_add(checked_mul(a1, c2), checked_mul(a2, c1))));
}

namespace {

void require_unit_interval(const Rational& q) {
  if (q <= Rational(0) || q > Rational(1))
    throw std::domain_error("membership: value must lie in (0, 1]");
}

}  // namespace

std::optional<CParams> c_member(const Rational& q, i64 k_max) {
  require_unit_interval(q);
  if (k_max < 1) throw std::domain_error("c_member: k_max must be positive");
  // The element 1 needs the sum 2 = 1*k, i.e. k = 2, which the default
  // denominator bound (k_max = 1) would never reach.
  if (q == Rational(1)) return CParams{1, 1, 1, 1};
  const i64 a = q.num(), m = q.den();
  for (i64 k = 1; k <= k_max; ++k) {
    const i64 sum = checked_mul(a, k);
    const i64 target = checked_mul(m, k);
    for (i64 alpha = sum / 2; alpha >= 1; --alpha) {
      const i64 beta = sum - alpha;
      if (gcd64(alpha, beta) != 1) continue;
      if (target % sum == 0) {
        const i64 p = target / sum;
        return CParams{alpha, beta, p, p};
      }
      auto rep = represent(target, alpha, beta);
      if (rep && rep->p2 >= std::max(alpha, rep->p1))
        return CParams{alpha, beta, rep->p1, rep->p2};
    }
  }
  return std::nullopt;
}

std::vector<CParams> collect_c_witnesses(const Rational& q, i64 k_max) {
  require_unit_interval(q);
  const i64 a = q.num(), m = q.den();
  std::vector<CParams> out;
  for (i64 k = 1; k <= k_max; ++k) {
    const i64 sum = checked_mul(a, k);
    const i64 target = checked_mul(m, k);
    for (i64 alpha = 1; alpha <= sum / 2; ++alpha) {
      const i64 beta = sum - alpha;
      if (gcd64(alpha, beta) != 1) continue;
      for (const auto& rep : represent_all(target, alpha, beta, target)) {
        CParams c{alpha, beta, rep.p1, rep.p2};
        if (c.is_valid()) out.push_back(c);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Ht2Membership> ht2_member(const Rational& q, i64 bound) {
  require_unit_interval(q);
  if (bound < 1) throw std::domain_error("ht2_member: bound must be positive");
  if (q == Rational(1)) return Ht2Membership{true, std::nullopt};
  const i64 a = q.num(), m = q.den();
  for (i64 k = 1; k <= bound; ++k) {
    const i64 total = checked_mul(a, k);
    const i64 target = checked_mul(m, k);
    for (i64 c1 = total / 2; c1 >= 1; --c1) {
      const i64 c2 = total - c1;
      const i64 rest = target - checked_mul(c1, c2);
      if (rest < 0) continue;
      for (i64 a1 = rest / c2; a1 >= 0; --a1) {
        const i64 rem = rest - a1 * c2;
        if (rem % c1 != 0) continue;
        Ht2Params h{c1, c2, a1, rem / c1};
        if (h.is_valid()) return Ht2Membership{false, h};
      }
    }
  }
  return std::nullopt;
}

Ht2Params c_to_ht2(const CParams& p) {
  if (!p.is_valid()) throw std::domain_error("c_to_ht2: invalid parameters");
  const Rational v = p.value();
  if (v >= Rational(1))
    throw std::domain_error("c_to_ht2: requires value < 1 (1 is the distinguished element)");
  const i64 sum = p.alpha + p.beta;
  const i64 m = checked_add(checked_mul(p.p1, p.alpha), checked_mul(p.p2, p.beta));
  Ht2Params h;
  if (m % sum == 0) {
    const i64 a1 = m / sum;  // >= 2 since value < 1
    h = Ht2Params{1, 1, a1, a1 - 1};
  } else {
    // sum | m iff sum | p2 - p1, so here the gap is strictly between multiples.
    const i64 diff = p.p2 - p.p1;
    const i64 l = diff / sum;
    h = Ht2Params{p.alpha, p.beta, p.p2 - p.alpha * l - p.alpha, p.p1 + p.beta * l};
  }
  if (!h.is_valid() || h.value() != v)
    throw std::logic_error("c_to_ht2: conversion failed to preserve value");
  return h;
}

CParams ht2_to_c(const Ht2Params& h) {
  if (!h.is_valid()) throw std::domain_error("ht2_to_c: invalid parameters");
  const Rational v = h.value();
  if (v > Rational(1)) throw std::domain_error("ht2_to_c: requires value <= 1");
  CParams out;
  if (h.c1 == 0 || h.c2 == 0) {
    const i64 ai = h.c1 == 0 ? h.a1 : h.a2;  // coefficient of the surviving c
    out = CParams{1, 1, ai, ai};
  } else {
    i64 c_lo = h.c1, c_hi = h.c2, a_lo = h.a1, a_hi = h.a2;
    if (c_lo > c_hi) { std::swap(c_lo, c_hi); std::swap(a_lo, a_hi); }
    const i64 d = gcd64(c_lo, c_hi);
    const i64 alpha = c_lo / d, beta = c_hi / d;
    const i64 den = checked_add(checked_mul(c_lo, c_hi),
                                checked_add(checked_mul(a_lo, c_hi), checked_mul(a_hi, c_lo)));
    const i64 m = den / d;
    if (m % (alpha + beta) == 0) {
      const i64 p = m / (alpha + beta);
      out = CParams{alpha, beta, p, p};
    } else {
      out = CParams{alpha, beta, a_hi, d * alpha + a_lo};
    }
  }
  if (!out.is_valid() || out.value() != v)
    throw std::logic_error("ht2_to_c: conversion failed to preserve value");
  return out;
}

std::vector<ThresholdEntry> enumerate_interval(const Rational& lo, const Rational& hi,
                                               i64 max_denominator, i64 k_max) {
  if (lo < Rational(0) || hi > Rational(1) || lo >= hi)
    throw std::domain_error("enumerate_interval: requires 0 <= lo < hi <= 1");
  if (max_denominator < 1) throw std::domain_error("enumerate_interval: max_denominator must be positive");
  std::vector<ThresholdEntry> out;
  for (i64 m = 1; m <= max_denominator; ++m) {
    const i64 a_lo = floor_scaled(lo.num(), lo.den(), m);      // q > lo
    const i64 a_hi = ceil_scaled(hi.num(), hi.den(), m);       // q < hi
    for (i64 a = std::max<i64>(a_lo, 0); a <= a_hi; ++a) {
      if (a < 1 || gcd64(a, m) != 1) continue;
      const Rational q(a, m);
      if (q <= lo || q >= hi) continue;
      if (c_member(q, k_max))
        out.push_back({q, collect_c_witnesses(q, k_max)});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const ThresholdEntry& x, const ThresholdEntry& y) { return x.value < y.value; });
  return out;
}

MembershipVerdict t3_classify(const Rational& q, i64 k_max) {
  if (q < Rational(0) || q > Rational(1))
    throw std::domain_error("t3_classify: value must lie in [0, 1]");
  MembershipVerdict v{q, false, std::nullopt, k_max, std::nullopt};
  if (q == Rational(0)) {
    v.member = true;
    v.exceptional = "zero";
    return v;
  }
  if (q == Rational(4, 5)) {
    v.member = true;
    v.exceptional = "four-fifths";
    return v;
  }
  v.witness = c_member(q, k_max);
  v.member = v.witness.has_value();
  return v;
}

std::vector<Rational> accumulation_clusters(const std::vector<Rational>& values,
                                            const Rational& epsilon) {
  if (epsilon <= Rational(0)) throw std::domain_error("accumulation_clusters: epsilon must be positive");
  std::vector<Rational> distinct = values;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  const i64 need = (Rational(1) / epsilon).ceil();
  auto count_near = [&](const Rational& c) -> i64 {
    const Rational lo = c - epsilon, hi = c + epsilon;
    auto first = std::upper_bound(distinct.begin(), distinct.end(), lo);
    auto last = std::lower_bound(distinct.begin(), distinct.end(), hi);
    return static_cast<i64>(last - first);
  };

  std::vector<Rational> clusters;
  if (count_near(Rational(0)) >= need) clusters.push_back(Rational(0));
  for (i64 k = need; k >= 1; --k)
    if (count_near(Rational(1, k)) >= need) clusters.push_back(Rational(1, k));
  return clusters;
}

}  // namespace ct3
