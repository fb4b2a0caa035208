#include "ct3/weights.hpp"

#include <algorithm>

namespace ct3 {

bool PolySupport::insert(Monomial m) {
  ++insertions_;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m);
  if (it != terms_.end() && *it == m) return false;
  terms_.insert(it, std::move(m));
  return true;
}

std::size_t PolySupport::dimension() const {
  if (terms_.empty()) throw std::domain_error("PolySupport: empty support has no dimension");
  return terms_.front().exponents.size();
}

i64 weighted_multiplicity(const WeightVector& w, const PolySupport& f) {
  if (f.empty()) throw std::domain_error("weighted_multiplicity: empty support");
  if (w.index < 1) throw std::domain_error("weighted_multiplicity: weight index must be positive");
  bool first = true;
  i64 best = 0;
  for (const auto& term : f.terms()) {
    if (term.exponents.size() != w.numerators.size())
      throw std::domain_error("weighted_multiplicity: dimension mismatch");
    i64 dot = 0;
    for (std::size_t i = 0; i < w.numerators.size(); ++i)
      dot = checked_add(dot, checked_mul(term.exponents[i], w.numerators[i]));
    if (first || dot < best) { best = dot; first = false; }
  }
  return best;
}

PolySupport chart_proper_transform(const PolySupport& f, i64 alpha, i64 beta, int chart, i64 m) {
  if (f.empty()) throw std::domain_error("chart_proper_transform: empty support");
  if (f.dimension() != 3) throw std::domain_error("chart_proper_transform: ambient dimension must be 3");
  if (chart < 1 || chart > 3) throw std::domain_error("chart_proper_transform: chart must be 1, 2 or 3");
  PolySupport out;
  for (const auto& term : f.terms()) {
    i64 w = checked_add(term.exponents[0],
                        checked_add(checked_mul(alpha, term.exponents[1]),
                                    checked_mul(beta, term.exponents[2])));
    i64 excess = checked_sub(w, m);
    if (excess < 0)
      throw std::domain_error("chart_proper_transform: m exceeds a term weight");
    Monomial mapped = term;
    mapped.exponents[chart - 1] = excess;
    out.insert(std::move(mapped));
  }
  return out;
}

i64 kawamata_multiplicity(const PolySupport& f_chart, const WeightVector& v) {
  return weighted_multiplicity(v, f_chart);
}

}  // namespace ct3
