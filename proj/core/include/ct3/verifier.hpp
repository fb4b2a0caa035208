#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ct3/thresholds.hpp"

namespace ct3 {

// Weight parameters of the singular families. Each tuple carries the
// divisibility, coprimality and parity side conditions of its family;
// enumerate_* below produce exactly the admissible tuples within bounds.
struct CaTuple {
  i64 r1{}, r2{}, a{}, d{};  // r1 <= r2, r1 + r2 = a*d, a >= 5, d >= 2, gcd(r_i, a) = 1
};

struct CanTuple {
  i64 r1{}, r2{}, a{}, d{}, n{}, b{};  // r1 + r2 = a*d*n, a >= 5, n >= 2, 0 < b < n
};

struct CdTuple {
  i64 r{}, a{}, d{};
  int case_no{1};  // case 1: 2r+1 = a*d, a odd, d >= 3; case 2: r+1 = a*d, d >= 2
};

struct Cd2Tuple {
  i64 r{}, a{}, d{};
  int case_no{1};  // case 1: r+1 = a*d, a, r odd; case 2: r+2 = a*(2d+1), a, r odd
};

std::vector<CaTuple> enumerate_ca_tuples(i64 r_max);
std::vector<CanTuple> enumerate_can_tuples(i64 r_max);
std::vector<CdTuple> enumerate_cd_tuples(i64 r_max);
std::vector<Cd2Tuple> enumerate_cd2_tuples(i64 r_max);

// Bezout data 1 + a_i*r_i = a*s_i* (with s_i* = 0, a_i = -1 when r_i = 1)
// plus the coprime reduction r_i' = r_i/h, d' = d/h and its primed stars.
struct CaDerived {
  CaTuple t;
  i64 s1_star{}, a1{}, s2_star{}, a2{};
  i64 h{}, d_prime{}, r1p{}, r2p{};
  i64 s1_star_p{}, a1p{}, s2_star_p{}, a2p{};
};
CaDerived derive_ca(const CaTuple& t);

// s_i, Bezout stars and the delta invariants of the cA/n family, together
// with the b' = b*h (mod n) coprime reduction.
struct CanDerived {
  CanTuple t;
  i64 s1{}, s2{}, s1_star{}, s2_star{}, q1{}, q2{}, delta1{}, delta2{};
  i64 h{}, d_prime{}, r1p{}, r2p{}, b_prime{};
  i64 s1p{}, s2p{}, s1_star_p{}, s2_star_p{}, q1p{}, q2p{}, delta1p{}, delta2p{};
  std::vector<std::string> identity_failures;  // nonempty flags a broken tuple
};
CanDerived derive_can(const CanTuple& t);

// Outcome of running one m against one tuple's claim chain.
struct TupleOutcome {
  bool in_domain{false};  // value and divisibility filters
  bool premise{false};    // the stated floor/ceiling (and congruence) premises
  std::vector<std::string> failed_claims;
  std::optional<Rational> threshold;  // reduced a/m, set when the premise holds
  std::optional<Representation> rep;  // the normalized representation, when taken
};

struct SmoothDerived {
  i64 alpha{}, beta{};
  EuclidData e;
};
SmoothDerived derive_smooth(i64 alpha, i64 beta);

TupleOutcome check_smooth_m(const SmoothDerived& t, i64 m);
TupleOutcome check_ca_m(const CaDerived& t, i64 m, i64 c_bound = 0);
TupleOutcome check_can_m(const CanDerived& t, i64 m, i64 c_bound = 0);
TupleOutcome check_cd_m(const CdTuple& t, i64 m, i64 c_bound = 0);
TupleOutcome check_cd2_m(const Cd2Tuple& t, i64 m, i64 c_bound = 0);

struct Counterexample {
  std::vector<std::pair<std::string, i64>> tuple;
  i64 m{};
  std::string failed_claim;
};

struct SweepBounds {
  i64 r_max{};
  i64 m_max{};
};

struct SweepReport {
  std::string family;
  SweepBounds bounds;
  i64 tuples_enumerated{};
  i64 m_values_tested{};
  i64 premise_hits{};
  std::vector<Counterexample> counterexamples;
  i64 conclusions_in_C{};  // distinct premise-passing thresholds certified in C
  std::vector<Rational> distinct_thresholds;

  bool certified() const { return counterexamples.empty(); }
};

// Exhaustive certification of each family's claims over all admissible
// tuples within bounds and all m passing the stated premises. Sweeps are
// deterministic for any jobs count: tuples are partitioned and results
// merged in canonical tuple order.
SweepReport sweep_smooth(i64 alpha_max, i64 m_max, int jobs = 1);
SweepReport sweep_ca(i64 r_max, i64 m_max, int jobs = 1);
SweepReport sweep_can(i64 r_max, i64 m_max, int jobs = 1);
SweepReport sweep_cd(i64 r_max, i64 m_max, int jobs = 1);
SweepReport sweep_cd2(i64 r_max, i64 m_max, int jobs = 1);

// Re-runs a family sweep and re-asserts that every premise-passing threshold
// lies in C intersected with (0, 4/5], via the independent membership search.
SweepReport inclusion_check(const std::string& family, i64 r_max, i64 m_max, int jobs = 1);

}  // namespace ct3
