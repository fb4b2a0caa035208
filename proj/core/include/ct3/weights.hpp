#pragma once

#include <compare>
#include <vector>

#include "ct3/arith.hpp"

namespace ct3 {

// Weight 1/index * numerators, one numerator per variable. index = 1 gives
// integral weights such as (1, alpha, beta); fractional indices carry the
// Kawamata weights 1/alpha (s_bar, s, 1) and 1/beta (t, 1, t_bar).
struct WeightVector {
  std::vector<i64> numerators;
  i64 index{1};
};

struct Monomial {
  std::vector<i64> exponents;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Finite monomial support of a defining power series. Coefficients are not
// tracked numerically; every stored term is marked nonzero, and inserting a
// duplicate exponent tuple merges it. insertions() keeps the pre-merge count
// so merging stays visible to reports.
class PolySupport {
 public:
  PolySupport() = default;
  explicit PolySupport(std::vector<Monomial> terms) {
    for (auto& t : terms) insert(std::move(t));
  }

  // Returns false when the term merged with an existing one.
  bool insert(Monomial m);

  const std::vector<Monomial>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  i64 insertions() const { return insertions_; }

  // Variable count; requires a nonempty support.
  std::size_t dimension() const;

  friend bool operator==(const PolySupport& a, const PolySupport& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::vector<Monomial> terms_;  // sorted, unique
  i64 insertions_{0};
};

// index * w(f): the minimum over terms of dot(exponents, numerators).
// Always an integer by construction.
i64 weighted_multiplicity(const WeightVector& w, const PolySupport& f);

// Proper transform of f in chart 1, 2 or 3 of the (1, alpha, beta) weighted
// blow-up of affine 3-space: each term's exponent at the chart variable is
// replaced by the weight excess W - m, where W is the term's (1, alpha, beta)
// weight and m the weighted multiplicity of f. Requires m <= W for every term.
PolySupport chart_proper_transform(const PolySupport& f, i64 alpha, i64 beta, int chart, i64 m);

// index * v(f_chart) for a Kawamata weight v on a quotient chart; identical
// arithmetic to weighted_multiplicity, named for its role.
i64 kawamata_multiplicity(const PolySupport& f_chart, const WeightVector& v);

}  // namespace ct3
