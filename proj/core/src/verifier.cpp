#include "ct3/verifier.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <set>

namespace ct3 {

namespace {

i64 c_search_bound(const Rational& q, i64 requested) {
  return requested > 0 ? requested : q.den();
}

bool value_at_most_4_5(i64 a, i64 m) {
  return checked_mul(4, m) >= checked_mul(5, a);
}

void check_in_c(const Rational& q, i64 c_bound, TupleOutcome& out) {
  if (!c_member(q, c_search_bound(q, c_bound)))
    out.failed_claims.emplace_back("threshold in C");
}

}  // namespace

std::vector<CaTuple> enumerate_ca_tuples(i64 r_max) {
  std::vector<CaTuple> out;
  for (i64 r2 = 1; r2 <= r_max; ++r2)
    for (i64 r1 = 1; r1 <= r2; ++r1) {
      const i64 sum = r1 + r2;
      for (i64 a = 5; a <= sum; ++a) {
        if (sum % a != 0) continue;
        const i64 d = sum / a;
        if (d < 2) continue;
        if (gcd64(r1, a) != 1 || gcd64(r2, a) != 1) continue;
        out.push_back({r1, r2, a, d});
      }
    }
  return out;
}

std::vector<CanTuple> enumerate_can_tuples(i64 r_max) {
  std::vector<CanTuple> out;
  for (i64 r2 = 1; r2 <= r_max; ++r2)
    for (i64 r1 = 1; r1 <= r2; ++r1) {
      const i64 sum = r1 + r2;
      for (i64 a = 5; a <= sum; ++a) {
        if (sum % a != 0) continue;
        const i64 rest = sum / a;
        for (i64 n = 2; n <= rest; ++n) {
          if (rest % n != 0) continue;
          const i64 d = rest / n;
          if (gcd64(r2, a * n) != 1 || gcd64(a, n) != 1) continue;
          for (i64 b = 1; b < n; ++b) {
            if (gcd64(b, n) != 1) continue;
            if (mod_floor(a - b * r1, n) != 0) continue;
            const i64 s1 = (a - b * r1) / n;
            const i64 s2 = (a + b * r2) / n;
            if (gcd64(s1 < 0 ? -s1 : s1, r1) != 1) continue;
            if (gcd64(s2, r2) != 1) continue;
            out.push_back({r1, r2, a, d, n, b});
          }
        }
      }
    }
  return out;
}

std::vector<CdTuple> enumerate_cd_tuples(i64 r_max) {
  std::vector<CdTuple> out;
  for (i64 r = 1; r <= r_max; ++r) {
    const i64 odd_sum = 2 * r + 1;
    for (i64 a = 5; a <= odd_sum; ++a) {
      if (odd_sum % a != 0) continue;   // a odd automatically
      const i64 d = odd_sum / a;
      if (d >= 3) out.push_back({r, a, d, 1});
    }
    const i64 even_sum = r + 1;
    for (i64 a = 5; a <= even_sum; ++a) {
      if (even_sum % a != 0) continue;
      const i64 d = even_sum / a;
      if (d >= 2) out.push_back({r, a, d, 2});
    }
  }
  return out;
}

std::vector<Cd2Tuple> enumerate_cd2_tuples(i64 r_max) {
  std::vector<Cd2Tuple> out;
  for (i64 r = 1; r <= r_max; r += 2) {  // r odd in both cases
    for (i64 a = 5; a <= r + 1; a += 2) {
      if ((r + 1) % a != 0) continue;
      out.push_back({r, a, (r + 1) / a, 1});
    }
    for (i64 a = 5; a <= r + 2; a += 2) {
      if ((r + 2) % a != 0) continue;
      const i64 odd_part = (r + 2) / a;  // odd since r + 2 is odd
      if (odd_part >= 3) out.push_back({r, a, (odd_part - 1) / 2, 2});
    }
  }
  return out;
}

CaDerived derive_ca(const CaTuple& t) {
  CaDerived d;
  d.t = t;
  // 1 + a_i*r_i = a*s_i*; for r_i = 1 this degenerates to s_i* = 0, a_i = -1.
  auto stars = [&](i64 r, i64& s_star, i64& a_coef) {
    s_star = mod_inverse(t.a, r);
    a_coef = (checked_mul(t.a, s_star) - 1) / r;
  };
  stars(t.r1, d.s1_star, d.a1);
  stars(t.r2, d.s2_star, d.a2);
  d.h = gcd64(t.r1, t.r2);
  if (t.d % d.h != 0) throw std::logic_error("derive_ca: gcd(r1,r2) must divide d");
  d.d_prime = t.d / d.h;
  d.r1p = t.r1 / d.h;
  d.r2p = t.r2 / d.h;
  auto stars_p = [&](i64 r, i64& s_star, i64& a_coef) {
    s_star = mod_inverse(t.a, r);
    a_coef = (checked_mul(t.a, s_star) - 1) / r;
  };
  stars_p(d.r1p, d.s1_star_p, d.a1p);
  stars_p(d.r2p, d.s2_star_p, d.a2p);
  return d;
}

CanDerived derive_can(const CanTuple& t) {
  CanDerived d;
  d.t = t;
  auto fail = [&](const char* what) { d.identity_failures.emplace_back(what); };

  d.s1 = (t.a - t.b * t.r1) / t.n;
  d.s2 = (t.a + t.b * t.r2) / t.n;
  auto bezout = [&](i64 s, i64 r, i64& s_star, i64& q) {
    s_star = r == 1 ? 0 : mod_inverse(s, r);
    q = (1 - checked_mul(s_star, s)) / r;
  };
  bezout(d.s1, t.r1, d.s1_star, d.q1);
  bezout(d.s2, t.r2, d.s2_star, d.q2);
  d.delta1 = -t.n * d.q1 + t.b * d.s1_star;
  d.delta2 = -t.n * d.q2 - t.b * d.s2_star;

  if (d.delta1 * t.r1 + t.n != t.a * d.s1_star) fail("delta1*r1 + n = a*s1*");
  if (d.delta2 * t.r2 + t.n != t.a * d.s2_star) fail("delta2*r2 + n = a*s2*");
  if (d.delta1 == 0 || d.delta2 == 0) fail("delta_i nonzero");
  if (d.delta2 <= 0) fail("delta2 > 0");
  if (d.delta1 > 0) {
    if (d.delta1 + d.delta2 != t.a) fail("delta1 + delta2 = a");
    if (checked_mul(t.r1, d.s2_star) + checked_mul(t.r2, d.s1_star) !=
        checked_mul(t.r1, t.r2) + checked_mul(t.d, t.n * t.n))
      fail("r1*s2* + r2*s1* = r1*r2 + d*n^2");
  }

  d.h = gcd64(t.r1, t.r2);
  if (t.d % d.h != 0) throw std::logic_error("derive_can: gcd(r1,r2) must divide d");
  d.d_prime = t.d / d.h;
  d.r1p = t.r1 / d.h;
  d.r2p = t.r2 / d.h;
  d.b_prime = mod_floor(t.b * d.h, t.n);
  d.s1p = (t.a - d.b_prime * d.r1p) / t.n;
  d.s2p = (t.a + d.b_prime * d.r2p) / t.n;
  bezout(d.s1p, d.r1p, d.s1_star_p, d.q1p);
  bezout(d.s2p, d.r2p, d.s2_star_p, d.q2p);
  d.delta1p = -t.n * d.q1p + d.b_prime * d.s1_star_p;
  d.delta2p = -t.n * d.q2p - d.b_prime * d.s2_star_p;

  if (d.delta1p * d.r1p + t.n != t.a * d.s1_star_p) fail("delta1'*r1' + n = a*s1*'");
  if (d.delta2p * d.r2p + t.n != t.a * d.s2_star_p) fail("delta2'*r2' + n = a*s2*'");
  if (d.delta1p == 0 || d.delta2p == 0) fail("delta_i' nonzero");
  if (d.delta1p >= t.a || d.delta2p >= t.a) fail("delta_i' < a");
  if (d.delta2p <= 0) fail("delta2' > 0");
  if (mod_floor(d.delta1p + d.delta2p, t.a) != 0) fail("a | delta1' + delta2'");
  if (d.delta1p > 0 && d.delta1p + d.delta2p != t.a) fail("delta1' + delta2' = a (delta1' > 0)");
  return d;
}

SmoothDerived derive_smooth(i64 alpha, i64 beta) {
  return SmoothDerived{alpha, beta, euclid_pair(alpha, beta)};
}

TupleOutcome check_smooth_m(const SmoothDerived& t, i64 m) {
  TupleOutcome out;
  const i64 alpha = t.alpha, beta = t.beta;
  if (m < checked_mul(alpha, beta)) return out;
  out.in_domain = true;

  auto rep = represent(m, alpha, beta);
  if (!rep) {
    out.failed_claims.emplace_back("representation exists for m >= alpha*beta");
    return out;
  }
  out.rep = rep;
  const i64 p1 = rep->p1, p2 = rep->p2;
  const i64 sbar = t.e.s_bar, tbar = t.e.t_bar, sum = alpha + beta;

  auto claim = [&](bool ok, const char* what) {
    if (!ok) out.failed_claims.emplace_back(what);
  };

  // Exact floor/ceiling identities from the claim proofs, valid for all m.
  const i64 m3_floor = floor_scaled(sbar + tbar, sum, m);
  const i64 m3_ceil = ceil_scaled(tbar, beta, m);
  claim(m3_ceil == p1 * sbar + p2 * tbar, "ceil(t_bar*m/beta) = p1*s_bar + p2*t_bar");
  claim(m3_floor == p1 * sbar + p2 * tbar + floor_div(p2 - p1, sum),
        "floor((s_bar+t_bar)m/(a+b)) = p1*s_bar + p2*t_bar + floor((p2-p1)/(a+b))");

  bool sni2 = true;
  if (alpha > 1) {
    const i64 s = *t.e.s, tt = *t.e.t;
    const i64 m2_floor = floor_scaled(s + tt, sum, m);
    const i64 m2_ceil = ceil_scaled(s, alpha, m);
    claim(m2_ceil == p1 * s + p2 * tt - floor_div(p2, alpha),
          "ceil(s*m/alpha) = p1*s + p2*t - floor(p2/alpha)");
    claim(m2_floor == p1 * s + p2 * tt - ceil_div(p2 - p1, sum),
          "floor((s+t)m/(a+b)) = p1*s + p2*t - ceil((p2-p1)/(a+b))");
    sni2 = m2_floor >= m2_ceil;
  }
  const bool sni3 = m3_floor >= m3_ceil;

  if (sni3) claim(p2 >= p1, "p2 >= p1");
  if (sni3 && sni2 && p2 >= p1)
    claim(p2 >= alpha || p1 == p2, "p2 >= alpha or p1 = p2");

  out.premise = sni3 && sni2;
  if (out.premise) {
    claim(CParams{alpha, beta, p1, p2}.is_valid(), "parameters lie in C");
    out.threshold = Rational(sum, m);
  }
  return out;
}

TupleOutcome check_ca_m(const CaDerived& t, i64 m, i64 c_bound) {
  TupleOutcome out;
  const i64 r1 = t.t.r1, r2 = t.t.r2, a = t.t.a;
  if (!value_at_most_4_5(a, m)) return out;
  out.in_domain = true;

  // The floor side carries the complement a - a_i (equal to a_1 resp. a_2 by
  // a_1 + a_2 = a when r_1 > 1; for r_1 = 1 the complement form is the one
  // that stays meaningful).
  const bool premise2 = floor_scaled(a - t.a2, a, m) >= ceil_scaled(r2 - t.s2_star, r2, m);
  const bool premise1 = r1 == 1 || floor_scaled(a - t.a1, a, m) >= ceil_scaled(r1 - t.s1_star, r1, m);
  out.premise = premise2 && premise1;
  if (!out.premise) return out;

  auto claim = [&](bool ok, const char* what) {
    if (!ok) out.failed_claims.emplace_back(what);
  };

  claim(floor_scaled(t.s2_star_p, t.r2p, m) >= ceil_scaled(t.a2p, a, m),
        "reduce to coprime: floor(s2*'m/r2') >= ceil(a2'm/a)");
  if (r1 > 1)
    claim(floor_scaled(t.s1_star_p, t.r1p, m) >= ceil_scaled(t.a1p, a, m),
          "reduce to coprime: floor(s1*'m/r1') >= ceil(a1'm/a)");

  const Rational q(a, m);
  out.threshold = q;
  auto rep = represent(checked_mul(t.d_prime, m), t.r1p, t.r2p);
  if (!rep) {
    // For a not dividing m the premises force dm >= r1*r2, so a normalized
    // representation must exist; a | m escapes the claim chain.
    if (m % a != 0) out.failed_claims.emplace_back("representation of d'm (dm >= r1*r2)");
  } else {
    out.rep = rep;
    const i64 p1 = rep->p1, p2 = rep->p2;
    claim((p2 - p1) % t.d_prime == 0, "d' divides p2 - p1");
    claim(p2 >= p1, "p2 >= p1");
    claim(p2 >= t.r1p || p1 == p2, "p2 >= r1' or p1 = p2");
  }
  check_in_c(q, c_bound, out);
  return out;
}

TupleOutcome check_can_m(const CanDerived& t, i64 m, i64 c_bound) {
  TupleOutcome out;
  const i64 r1 = t.t.r1, r2 = t.t.r2, a = t.t.a, d = t.t.d, n = t.t.n;
  if (m % a == 0 || !value_at_most_4_5(a, m)) return out;
  out.in_domain = true;

  const i64 a_inv = mod_inverse(a, n);
  auto residue = [&](i64 coef) { return mod_floor(mod_floor(coef, n) * a_inv % n * mod_floor(m, n), n); };

  const bool premise2 = exists_congruent_in_range(
      Rational(checked_mul(r2 - t.s2_star, m), r2), Rational(checked_mul(a - t.delta2, m), a),
      residue(a - t.delta2), n);
  const bool premise1 =
      t.delta1 <= 0 ||
      exists_congruent_in_range(Rational(checked_mul(r1 - t.s1_star, m), r1),
                                Rational(checked_mul(a - t.delta1, m), a),
                                residue(a - t.delta1), n);
  out.premise = premise2 && premise1;
  if (!out.premise) return out;

  auto claim = [&](bool ok, const char* what) {
    if (!ok) out.failed_claims.emplace_back(what);
  };

  claim(m >= r2, "m >= r2");
  claim(checked_mul(d, checked_mul(n, m)) >= checked_mul(r1, r2), "dnm >= r1*r2");

  auto xi_residue = [&](i64 s_star_p, i64 rp) {
    return mod_floor(mod_floor(s_star_p, n) * mod_inverse(rp, n) % n * mod_floor(m, n), n);
  };
  claim(exists_congruent_in_range(Rational(checked_mul(t.delta2p, m), a),
                                  Rational(checked_mul(t.s2_star_p, m), t.r2p),
                                  xi_residue(t.s2_star_p, t.r2p), n),
        "reduce to coprime: xi2 exists");
  if (t.delta1 > 0)
    claim(exists_congruent_in_range(Rational(checked_mul(t.delta1p, m), a),
                                    Rational(checked_mul(t.s1_star_p, m), t.r1p),
                                    xi_residue(t.s1_star_p, t.r1p), n),
          "reduce to coprime: xi1 exists");

  const Rational q(a, m);
  out.threshold = q;
  auto rep = represent(checked_mul(t.d_prime, checked_mul(n, m)), t.r1p, t.r2p);
  if (!rep) {
    out.failed_claims.emplace_back("representation of d'nm (dnm >= r1*r2)");
  } else {
    out.rep = rep;
    const i64 p1 = rep->p1, p2 = rep->p2;
    claim((p2 - p1) % (t.d_prime * n) == 0, "d'n divides p2 - p1");
    claim(p2 >= p1, "p2 >= p1");
    claim(p2 >= t.r1p || p1 == p2, "p2 >= r1' or p1 = p2");
    if (t.delta1 < 0)
      claim(!(p1 < p2 && p2 <= n - 1), "ruled out: p1 < p2 <= n-1 (delta1 < 0)");
  }
  check_in_c(q, c_bound, out);
  return out;
}

TupleOutcome check_cd_m(const CdTuple& t, i64 m, i64 c_bound) {
  TupleOutcome out;
  const i64 r = t.r, a = t.a, d = t.d;
  if (m % a == 0 || !value_at_most_4_5(a, m)) return out;
  out.in_domain = true;

  auto claim = [&](bool ok, const char* what) {
    if (!ok) out.failed_claims.emplace_back(what);
  };

  if (t.case_no == 1) {
    out.premise = floor_scaled(a - 2, a, m) >= ceil_scaled(r - d, r, m) &&
                  floor_scaled(2, a, m) >= ceil_scaled(d, r + 1, m);
    if (!out.premise) return out;
    claim(checked_mul(d, m) >= checked_mul(r, r + 1), "dm >= r(r+1)");
    auto rep = represent(checked_mul(d, m), r, r + 1);
    if (!rep) {
      out.failed_claims.emplace_back("representation of dm over (r, r+1)");
    } else {
      out.rep = rep;
      claim(rep->p2 >= rep->p1, "p2 >= p1");
      claim(rep->p2 >= r || rep->p1 == rep->p2, "p2 >= r or p1 = p2");
    }
  } else {
    out.premise = floor_scaled(a - 1, a, m) >= ceil_scaled(r - d, r, m) &&
                  floor_scaled(1, a, m) >= ceil_scaled(d, r + 2, m);
    if (!out.premise) return out;
    claim(checked_mul(2 * d, m) >= checked_mul(r, r + 2), "2dm >= r(r+2)");
    const i64 h = gcd64(r, r + 2);
    auto rep = represent(checked_mul(2 * d, m) / h, r / h, (r + 2) / h);
    if (!rep) {
      out.failed_claims.emplace_back("representation of 2dm over (r, r+2)");
    } else {
      out.rep = rep;
      const i64 p1 = rep->p1, p2 = rep->p2;
      if ((p1 + p2) % 2 == 0) {
        claim(p2 >= p1, "p2 >= p1 (p1+p2 even)");
        claim(p2 >= r || p1 == p2, "p2 >= r or p1 = p2 (p1+p2 even)");
      } else {
        claim(r % 2 == 0, "p1+p2 odd forces r even");
        claim(2 * p1 < r + 2, "odd branch normalization p1 < (r+2)/2");
        claim(p2 >= p1 + r + 1, "p2 >= p1 + r + 1 (p1+p2 odd)");
        claim(2 * p2 >= r, "p2 >= r/2 (p1+p2 odd)");
      }
    }
  }
  const Rational q(a, m);
  out.threshold = q;
  check_in_c(q, c_bound, out);
  return out;
}

TupleOutcome check_cd2_m(const Cd2Tuple& t, i64 m, i64 c_bound) {
  TupleOutcome out;
  const i64 r = t.r, a = t.a, d = t.d;
  if (m % a == 0 || !value_at_most_4_5(a, m)) return out;
  out.in_domain = true;

  auto claim = [&](bool ok, const char* what) {
    if (!ok) out.failed_claims.emplace_back(what);
  };

  if (t.case_no == 1) {
    out.premise =
        exists_congruent_in_range(Rational(checked_mul(r - 2 * d, m), r),
                                  Rational(checked_mul(a - 2, m), a), mod_floor(m, 2), 2) &&
        exists_congruent_in_range(Rational(checked_mul(2 * d, m), r + 2),
                                  Rational(checked_mul(2, m), a), 0, 2);
    if (!out.premise) return out;
    claim(checked_mul(2 * d, m) >= checked_mul(r, r + 2), "2dm >= r(r+2)");
    auto rep = represent(checked_mul(2 * d, m), r, r + 2);  // gcd(r, r+2) = 1 for odd r
    if (!rep) {
      out.failed_claims.emplace_back("representation of 2dm over (r, r+2)");
    } else {
      out.rep = rep;
      claim((rep->p1 + rep->p2) % 2 == 0, "p1 + p2 even");
      claim(rep->p2 >= rep->p1, "p2 >= p1");
      claim(rep->p2 >= r || rep->p1 == rep->p2, "p2 >= r or p1 = p2");
    }
  } else {
    out.premise =
        exists_congruent_in_range(Rational(checked_mul(r - 2 * d - 1, m), r),
                                  Rational(checked_mul(a - 1, m), a), 0, 2) &&
        exists_congruent_in_range(Rational(checked_mul(2 * d + 1, m), r + 4),
                                  Rational(m, a), mod_floor(m, 2), 2);
    if (!out.premise) return out;
    claim(checked_mul(4 * d + 2, m) >= checked_mul(r, r + 4), "(4d+2)m >= r(r+4)");
    auto rep = represent(checked_mul(4 * d + 2, m), r, r + 4);  // gcd(r, r+4) = 1 for odd r
    if (!rep) {
      out.failed_claims.emplace_back("representation of (4d+2)m over (r, r+4)");
    } else {
      out.rep = rep;
      claim((rep->p1 + rep->p2) % 2 == 0, "p1 + p2 even");
      claim((rep->p2 - rep->p1) % 2 == 0, "p2 - p1 even");
      claim(rep->p2 >= rep->p1, "p2 >= p1");
      claim(rep->p2 >= r || rep->p1 == rep->p2, "p2 >= r or p1 = p2");
    }
  }
  const Rational q(a, m);
  out.threshold = q;
  check_in_c(q, c_bound, out);
  return out;
}

namespace {

struct TupleWork {
  std::vector<std::pair<std::string, i64>> fields;
  std::vector<std::string> tuple_failures;
  std::function<TupleOutcome(i64)> check;
};

struct TupleResult {
  i64 m_tested{};
  i64 hits{};
  std::vector<Counterexample> ces;
  std::vector<Rational> thresholds;
};

TupleResult run_tuple(const TupleWork& w, i64 m_max) {
  TupleResult r;
  for (const auto& f : w.tuple_failures) r.ces.push_back({w.fields, 0, f});
  for (i64 m = 1; m <= m_max; ++m) {
    TupleOutcome o = w.check(m);
    if (!o.in_domain) continue;
    ++r.m_tested;
    if (o.premise) ++r.hits;
    for (const auto& c : o.failed_claims) r.ces.push_back({w.fields, m, c});
    if (o.premise && o.threshold) r.thresholds.push_back(*o.threshold);
  }
  return r;
}

SweepReport run_engine(std::string family, SweepBounds bounds, int jobs,
                       const std::vector<TupleWork>& work) {
  if (jobs < 1) jobs = 1;
  std::vector<TupleResult> results(work.size());
  auto run_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) results[i] = run_tuple(work[i], bounds.m_max);
  };
  if (jobs == 1 || work.size() < 2) {
    run_range(0, work.size());
  } else {
    const std::size_t chunks = std::min<std::size_t>(jobs, work.size());
    std::vector<std::future<void>> futures;
    const std::size_t step = (work.size() + chunks - 1) / chunks;
    for (std::size_t lo = 0; lo < work.size(); lo += step)
      futures.push_back(std::async(std::launch::async, run_range, lo,
                                   std::min(work.size(), lo + step)));
    for (auto& f : futures) f.get();
  }

  SweepReport rep;
  rep.family = std::move(family);
  rep.bounds = bounds;
  rep.tuples_enumerated = static_cast<i64>(work.size());
  std::set<Rational> thresholds;
  for (const auto& r : results) {
    rep.m_values_tested += r.m_tested;
    rep.premise_hits += r.hits;
    rep.counterexamples.insert(rep.counterexamples.end(), r.ces.begin(), r.ces.end());
    thresholds.insert(r.thresholds.begin(), r.thresholds.end());
  }
  rep.distinct_thresholds.assign(thresholds.begin(), thresholds.end());
  rep.conclusions_in_C = static_cast<i64>(rep.distinct_thresholds.size());
  return rep;
}

}  // namespace

SweepReport sweep_smooth(i64 alpha_max, i64 m_max, int jobs) {
  std::vector<TupleWork> work;
  for (i64 beta = 2; beta <= alpha_max; ++beta)
    for (i64 alpha = 1; alpha < beta; ++alpha) {
      if (gcd64(alpha, beta) != 1) continue;
      auto der = derive_smooth(alpha, beta);
      work.push_back({{{"alpha", alpha}, {"beta", beta}},
                      {},
                      [der](i64 m) { return check_smooth_m(der, m); }});
    }
  return run_engine("smooth", {alpha_max, m_max}, jobs, work);
}

SweepReport sweep_ca(i64 r_max, i64 m_max, int jobs) {
  std::vector<TupleWork> work;
  for (const auto& t : enumerate_ca_tuples(r_max)) {
    auto der = derive_ca(t);
    std::vector<std::string> tuple_failures;
    if (t.r1 > 1 && der.a1 + der.a2 != t.a) tuple_failures.emplace_back("a1 + a2 = a");
    work.push_back({{{"r1", t.r1}, {"r2", t.r2}, {"a", t.a}, {"d", t.d}},
                    std::move(tuple_failures),
                    [der](i64 m) { return check_ca_m(der, m); }});
  }
  return run_engine("cA", {r_max, m_max}, jobs, work);
}

SweepReport sweep_can(i64 r_max, i64 m_max, int jobs) {
  std::vector<TupleWork> work;
  for (const auto& t : enumerate_can_tuples(r_max)) {
    auto der = derive_can(t);
    work.push_back({{{"r1", t.r1}, {"r2", t.r2}, {"a", t.a}, {"d", t.d}, {"n", t.n}, {"b", t.b}},
                    der.identity_failures,
                    [der](i64 m) { return check_can_m(der, m); }});
  }
  return run_engine("cAn", {r_max, m_max}, jobs, work);
}

SweepReport sweep_cd(i64 r_max, i64 m_max, int jobs) {
  std::vector<TupleWork> work;
  for (const auto& t : enumerate_cd_tuples(r_max))
    work.push_back({{{"r", t.r}, {"a", t.a}, {"d", t.d}, {"case", t.case_no}},
                    {},
                    [t](i64 m) { return check_cd_m(t, m); }});
  return run_engine("cD", {r_max, m_max}, jobs, work);
}

SweepReport sweep_cd2(i64 r_max, i64 m_max, int jobs) {
  std::vector<TupleWork> work;
  for (const auto& t : enumerate_cd2_tuples(r_max))
    work.push_back({{{"r", t.r}, {"a", t.a}, {"d", t.d}, {"case", t.case_no}},
                    {},
                    [t](i64 m) { return check_cd2_m(t, m); }});
  return run_engine("cD2", {r_max, m_max}, jobs, work);
}

SweepReport inclusion_check(const std::string& family, i64 r_max, i64 m_max, int jobs) {
  SweepReport rep;
  if (family == "cA" || family == "ca") rep = sweep_ca(r_max, m_max, jobs);
  else if (family == "cAn" || family == "can") rep = sweep_can(r_max, m_max, jobs);
  else if (family == "cD" || family == "cd") rep = sweep_cd(r_max, m_max, jobs);
  else if (family == "cD2" || family == "cd2") rep = sweep_cd2(r_max, m_max, jobs);
  else throw std::domain_error("inclusion_check: unknown family tag: " + family);

  for (const auto& q : rep.distinct_thresholds) {
    if (q > Rational(4, 5))
      rep.counterexamples.push_back({{}, 0, "inclusion: threshold " + q.str() + " exceeds 4/5"});
    if (!c_member(q, q.den()))
      rep.counterexamples.push_back({{}, 0, "inclusion: threshold " + q.str() + " not in C"});
  }
  return rep;
}

}  // namespace ct3
