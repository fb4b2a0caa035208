#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ct3/arith.hpp"

namespace ct3 {

// Parameterization of an element of C: value (alpha+beta)/(p1*alpha+p2*beta)
// with alpha <= beta coprime and either p2 >= max(alpha, p1) or p1 = p2.
struct CParams {
  i64 alpha{};
  i64 beta{};
  i64 p1{};
  i64 p2{};

  bool is_valid() const;
  Rational value() const;
  friend auto operator<=>(const CParams&, const CParams&) = default;
};

// Parameterization of an element of HT2: value
// (c1+c2)/(c1*c2 + a1*c2 + a2*c1) with a1+c1 >= max(2, a2) and
// a2+c2 >= max(2, a1). The element 1 is distinguished and has no parameters.
struct Ht2Params {
  i64 c1{};
  i64 c2{};
  i64 a1{};
  i64 a2{};

  bool is_valid() const;
  Rational value() const;
  friend auto operator<=>(const Ht2Params&, const Ht2Params&) = default;
};

// First C-witness for q in (0, 1], searching k = 1..k_max over coprime pairs
// alpha + beta = numerator(q)*k, most balanced pair first within each k.
// Absence means no witness within the bound, not non-membership.
std::optional<CParams> c_member(const Rational& q, i64 k_max);

// Every C-valid parameterization of q reachable by the same search: all
// nonnegative representations of m*k over each coprime pair, k <= k_max.
// Sorted by (alpha, beta, p1, p2).
std::vector<CParams> collect_c_witnesses(const Rational& q, i64 k_max);

struct Ht2Membership {
  bool distinguished_one{false};  // q = 1, the parameterless element
  std::optional<Ht2Params> params;
};

std::optional<Ht2Membership> ht2_member(const Rational& q, i64 bound);

// Explicit conversions between the two parameterizations; value-preserving.
// c_to_ht2 requires value < 1 (1 maps to the distinguished element).
Ht2Params c_to_ht2(const CParams& p);
CParams ht2_to_c(const Ht2Params& h);

struct ThresholdEntry {
  Rational value;
  std::vector<CParams> witnesses;
};

// All members of C strictly inside (lo, hi) with reduced denominator at most
// max_denominator, each with its witness list; ascending by value.
std::vector<ThresholdEntry> enumerate_interval(const Rational& lo, const Rational& hi,
                                               i64 max_denominator, i64 k_max);

struct MembershipVerdict {
  Rational value;
  bool member{false};
  std::optional<CParams> witness;
  i64 search_bound_used{};
  std::optional<std::string> exceptional;  // "zero" | "four-fifths"
};

// Membership in the full threefold set: 0, 4/5, or a member of C.
MembershipVerdict t3_classify(const Rational& q, i64 k_max);

// Desk-scale accumulation detector: candidates 0 and 1/k for k <= ceil(1/eps);
// a candidate is reported when at least ceil(1/eps) distinct input values lie
// strictly within (c - eps, c + eps).
std::vector<Rational> accumulation_clusters(const std::vector<Rational>& values,
                                            const Rational& epsilon);

}  // namespace ct3
