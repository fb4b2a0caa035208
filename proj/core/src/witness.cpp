#include "ct3/witness.hpp"

#include <algorithm>

namespace ct3 {

std::string to_string(WitnessCase c) {
  switch (c) {
    case WitnessCase::SmoothPair: return "smooth-pair";
    case WitnessCase::Case1: return "case1";
    case WitnessCase::Case2: return "case2";
    case WitnessCase::Case3: return "case3";
  }
  throw std::logic_error("to_string: bad WitnessCase");
}

WitnessCase classify_case(const CParams& p) {
  if (!p.is_valid()) throw std::domain_error("classify_case: invalid parameters");
  if (p.beta == 1) return WitnessCase::SmoothPair;
  if (p.p2 % p.alpha == 0) return WitnessCase::Case1;
  return p.p1 != p.p2 ? WitnessCase::Case2 : WitnessCase::Case3;
}

std::pair<PolySupport, WitnessCase> build_witness(const CParams& p) {
  if (!p.is_valid()) throw std::domain_error("build_witness: invalid parameters");
  if (p.value() > Rational(1)) throw std::domain_error("build_witness: requires value <= 1");
  const i64 m = checked_add(checked_mul(p.p1, p.alpha), checked_mul(p.p2, p.beta));
  const WitnessCase c = classify_case(p);
  PolySupport f;
  switch (c) {
    case WitnessCase::SmoothPair:
      f.insert({{m, 0, 0}});
      f.insert({{0, m, 0}});
      f.insert({{0, 0, m}});
      break;
    case WitnessCase::Case1:
      f.insert({{m, 0, 0}});
      f.insert({{0, p.p1, p.p2}});
      f.insert({{0, (p.p2 / p.alpha) * p.beta + p.p1, 0}});
      f.insert({{0, 0, m}});
      break;
    case WitnessCase::Case2: {
      const i64 q = p.p2 % p.alpha;
      f.insert({{m, 0, 0}});
      f.insert({{0, p.p1, p.p2}});
      f.insert({{0, (p.p2 / p.alpha) * p.beta + p.p1, q}});
      f.insert({{0, m, 0}});
      f.insert({{0, 0, m}});
      break;
    }
    case WitnessCase::Case3:
      f.insert({{m, 0, 0}});
      f.insert({{0, p.p2, p.p2}});
      f.insert({{0, m, 0}});
      f.insert({{0, 0, m}});
      break;
  }
  return {std::move(f), c};
}

WitnessReport certify_witness(const CParams& p) {
  auto [f, witness_case] = build_witness(p);

  WitnessReport r;
  r.params = p;
  r.witness_case = witness_case;
  r.pre_merge_terms = f.insertions();
  r.f = std::move(f);

  auto check = [&](bool ok, const char* what) {
    if (!ok) {
      r.all_checks_passed = false;
      r.failed_checks.emplace_back(what);
    }
  };

  const i64 alpha = p.alpha, beta = p.beta, p1 = p.p1, p2 = p.p2;
  const i64 m = checked_add(checked_mul(p1, alpha), checked_mul(p2, beta));
  r.m = m;
  check(weighted_multiplicity(WeightVector{{1, alpha, beta}, 1}, r.f) == m, "m = w(f)");
  r.threshold = std::min(Rational(alpha + beta, m), Rational(1));

  if (witness_case == WitnessCase::SmoothPair) return r;

  const EuclidData e = euclid_pair(alpha, beta);
  const i64 sbar = e.s_bar, tbar = e.t_bar;
  const i64 t = beta - tbar;  // equals e.t for alpha > 1 and 1 for alpha = 1

  const i64 w3f = weighted_multiplicity(WeightVector{{1, sbar, tbar}, 1}, r.f);
  r.w3_f = w3f;
  check(w3f == checked_add(checked_mul(p1, sbar), checked_mul(p2, tbar)),
        "w3(f) = p1*s_bar + p2*t_bar");
  check(checked_mul(beta, sbar + tbar) == checked_add(1, checked_mul(tbar, alpha + beta)),
        "beta*(s_bar+t_bar) = 1 + t_bar*(alpha+beta)");
  check(checked_mul(beta, w3f) == checked_add(p1, checked_mul(tbar, m)),
        "beta*w3(f) = p1 + t_bar*m");

  const bool hyp3 = checked_mul(sbar + tbar, m) >= checked_mul(alpha + beta, w3f);
  r.hyp3_holds = hyp3;
  check(hyp3, "(s_bar+t_bar)*m >= (alpha+beta)*w3(f)");

  if (alpha > 1) {
    const i64 s = *e.s;
    const i64 w2f = weighted_multiplicity(WeightVector{{1, s, t}, 1}, r.f);
    r.w2_f = w2f;
    const bool hyp2 = checked_mul(s + t, m) >= checked_mul(alpha + beta, w2f);
    r.hyp2_holds = hyp2;
    check(hyp2, "(s+t)*m >= (alpha+beta)*w2(f)");
    if (witness_case == WitnessCase::Case2) {
      const i64 q = p2 % alpha;
      check(w2f == checked_add(checked_mul(s, (p2 / alpha) * beta + p1), checked_mul(t, q)),
            "w2(f) = s*(floor(p2/alpha)*beta + p1) + t*q");
      check(checked_mul(alpha, w2f) == checked_add(q, checked_mul(s, m)),
            "alpha*w2(f) = q + s*m");
      check(checked_mul(alpha + beta, w2f) < checked_mul(s + t, m),
            "case 2 strict: (alpha+beta)*w2(f) < (s+t)*m");
    }
    if (witness_case == WitnessCase::Case3)
      check(w2f == checked_mul(s + t, p2), "w2(f) = (s+t)*p2");
  }
  if (witness_case == WitnessCase::Case3)
    check(w3f == checked_mul(sbar + tbar, p2), "w3(f) = (s_bar+t_bar)*p2");

  for (int chart = 1; chart <= 3; ++chart)
    r.chart_transforms.emplace(chart, chart_proper_transform(r.f, alpha, beta, chart, m));

  const WeightVector v3{{t, 1, tbar}, beta};
  switch (witness_case) {
    case WitnessCase::Case1: {
      r.kawamata_mult = kawamata_multiplicity(r.chart_transforms.at(3), v3);
      check(*r.kawamata_mult == p1, "kawamata multiplicity = p1");
      // p2 >= p1 is exactly (alpha+beta)/m <= 1/p1 for p1 > 0.
      if (p1 > 0) check(checked_mul(p1, alpha + beta) <= m, "threshold <= 1/p1");
      break;
    }
    case WitnessCase::Case2: {
      const WeightVector v2{{sbar, *e.s, 1}, alpha};
      const i64 q = p2 % alpha;
      r.kawamata_mult = kawamata_multiplicity(r.chart_transforms.at(2), v2);
      check(*r.kawamata_mult == q, "kawamata multiplicity = q");
      break;
    }
    case WitnessCase::Case3: {
      r.kawamata_mult = kawamata_multiplicity(r.chart_transforms.at(3), v3);
      check(*r.kawamata_mult == p2, "kawamata multiplicity = p2 (chart 3)");
      const WeightVector v2{{sbar, *e.s, 1}, alpha};
      check(kawamata_multiplicity(r.chart_transforms.at(2), v2) == p2,
            "kawamata multiplicity = p2 (chart 2)");
      break;
    }
    case WitnessCase::SmoothPair:
      break;
  }
  return r;
}

}  // namespace ct3
