// Acceptance suite: every criterion is exact (set equalities, exhaustive
// sweeps, witness certification); there are no numeric tolerances anywhere.
// Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "ct3/cli.hpp"
#include "ct3/thresholds.hpp"
#include "ct3/verifier.hpp"
#include "ct3/witness.hpp"

using namespace ct3;

namespace {

constexpr int kJobs = 4;

struct Outcome {
  bool ok{true};
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  o.ok = false;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += why;
}

// every reduced fraction a/m with lo < a/m < hi (exclusive) and m <= max_den
std::vector<Rational> reduced_fractions(const Rational& lo, const Rational& hi, i64 max_den) {
  std::vector<Rational> out;
  for (i64 m = 1; m <= max_den; ++m)
    for (i64 a = 1; a <= m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      const Rational q(a, m);
      if (q > lo && q < hi) out.push_back(q);
    }
  return out;
}

Outcome criterion1_table() {
  Outcome o;
  std::ostringstream out, err;
  if (cli::run({"table13"}, out, err) != 0) fail(o, "table13 exited nonzero");
  const std::string text = out.str();
  const std::vector<std::string> rows = {
      "1 1 1 4 2/5",   "1 1 0 5 2/5",   "1 2 0 4 3/8",   "2 3 0 4 5/12",  "2 3 1 4 5/14",
      "2 5 0 4 7/20",  "3 4 0 4 7/16",  "3 4 1 4 7/19",  "3 4 0 5 7/20",  "3 5 0 4 2/5",
      "3 5 1 4 8/23",  "3 7 0 4 5/14",  "3 8 0 4 11/32", "4 5 0 4 9/20",  "4 5 1 4 3/8",
      "4 5 0 5 9/25",  "4 7 0 4 11/28", "4 7 1 4 11/32", "4 9 0 4 13/36", "4 11 0 4 15/44",
      "5 6 0 5 11/30", "5 7 0 5 12/35"};
  for (const auto& row : rows)
    if (text.find(row + "\n") == std::string::npos) fail(o, "missing row: " + row);
  if (text.find("family predicate check: OK") == std::string::npos)
    fail(o, "family predicate check not OK");
  return o;
}

Outcome criterion2_upper_interval() {
  Outcome o;
  std::set<Rational> expected;
  for (i64 p = 3; p <= 240; ++p) {
    const Rational v = Rational(1, 2) + Rational(1, p);
    if (v.den() <= 60 && v < Rational(1)) expected.insert(v);
  }
  std::set<Rational> got;
  for (const auto& e : enumerate_interval(Rational(1, 2), Rational(1), 60, 60))
    got.insert(e.value);
  if (got != expected) fail(o, "enumeration differs from the 1/2 + 1/p family");

  for (const auto& q : reduced_fractions(Rational(1, 2), Rational(1), 60)) {
    const bool member = t3_classify(q, 60).member;
    const bool should = expected.count(q) > 0 || q == Rational(4, 5);
    if (member != should) fail(o, "t3 disagreement at " + q.str());
  }
  return o;
}

Outcome criterion3_desk_equality() {
  Outcome o;
  for (i64 m = 1; m <= 60; ++m)
    for (i64 a = 1; a <= m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      const Rational q(a, m);
      const auto c = c_member(q, 60);
      const auto h = ht2_member(q, 60);
      if (c.has_value() != h.has_value()) {
        fail(o, "membership disagreement at " + q.str());
        continue;
      }
      if (c && q < Rational(1) && c_to_ht2(*c).value() != q)
        fail(o, "c->ht2 value drift at " + q.str());
      if (h && h->params && ht2_to_c(*h->params).value() != q)
        fail(o, "ht2->c value drift at " + q.str());
    }
  return o;
}

Outcome criterion4_witness_grid() {
  Outcome o;
  i64 certified = 0;
  for (i64 alpha = 1; alpha <= 12; ++alpha)
    for (i64 beta = alpha; beta <= 12; ++beta) {
      if (std::gcd(alpha, beta) != 1) continue;
      for (i64 p1 = 0; p1 <= 12; ++p1)
        for (i64 p2 = 1; p2 <= 20; ++p2) {
          const CParams p{alpha, beta, p1, p2};
          if (!p.is_valid() || p.value() > Rational(1)) continue;
          const auto r = certify_witness(p);
          ++certified;
          if (!r.all_checks_passed)
            fail(o, "certification failed at (" + std::to_string(alpha) + "," +
                        std::to_string(beta) + "," + std::to_string(p1) + "," +
                        std::to_string(p2) + "): " + r.failed_checks.front());
        }
    }
  o.detail = std::to_string(certified) + " parameter tuples certified";
  return o;
}

Outcome sweep_outcome(const SweepReport& rep) {
  Outcome o;
  if (!rep.certified()) {
    fail(o, rep.family + ": " + std::to_string(rep.counterexamples.size()) +
                " counterexamples, first: " + rep.counterexamples.front().failed_claim);
  } else {
    o.detail = rep.family + ": " + std::to_string(rep.premise_hits) + " premise hits, " +
               std::to_string(rep.conclusions_in_C) + " distinct thresholds";
  }
  return o;
}

Outcome criterion6_inclusion() {
  Outcome o;
  for (const std::string family : {"cA", "cAn", "cD", "cD2"}) {
    const auto rep = inclusion_check(family, 40, 3000, kJobs);
    if (!rep.certified())
      fail(o, family + " inclusion violated: " + rep.counterexamples.front().failed_claim);
    for (const auto& q : rep.distinct_thresholds) {
      if (q > Rational(4, 5) || q <= Rational(0)) fail(o, family + " threshold outside (0,4/5]");
      if (!c_member(q, q.den())) fail(o, family + " threshold not in C: " + q.str());
    }
  }
  return o;
}

Outcome criterion7_exceptional() {
  Outcome o;
  if (c_member(Rational(4, 5), 60)) fail(o, "4/5 wrongly in C");
  const auto v = t3_classify(Rational(4, 5), 60);
  if (!v.member || !v.exceptional || *v.exceptional != "four-fifths")
    fail(o, "4/5 not classified as the exceptional element");
  return o;
}

Outcome criterion8_small_numerators() {
  Outcome o;
  for (i64 m = 2; m <= 200; ++m)
    if (!c_member(Rational(2, m), m)) fail(o, "2/" + std::to_string(m) + " not found");
  for (i64 m = 3; m <= 200; ++m)
    if (!c_member(Rational(3, m), m)) fail(o, "3/" + std::to_string(m) + " not found");
  for (i64 m = 6; m <= 200; ++m)
    if (!c_member(Rational(4, m), m)) fail(o, "4/" + std::to_string(m) + " not found");
  return o;
}

Outcome criterion9_accumulation() {
  Outcome o;
  std::vector<Rational> values;
  for (const auto& e : enumerate_interval(Rational(1, 6), Rational(1), 200, 10))
    values.push_back(e.value);
  const auto clusters = accumulation_clusters(values, Rational(1, 50));
  std::set<Rational> cluster_set(clusters.begin(), clusters.end());
  for (i64 k = 2; k <= 5; ++k)
    if (!cluster_set.count(Rational(1, k)))
      fail(o, "1/" + std::to_string(k) + " not detected");
  if (cluster_set.count(Rational(1))) fail(o, "1 wrongly detected");
  if (cluster_set.count(Rational(0))) fail(o, "0 wrongly detected at this scale");
  o.detail = std::to_string(values.size()) + " thresholds examined";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"criterion 1: explicit interval table reproduction", 10, criterion1_table},
      {"criterion 2: interval (1/2, 1) is the 1/2 + 1/p family", 30, criterion2_upper_interval},
      {"criterion 3: C and HT2 agree for denominators <= 60", 300, criterion3_desk_equality},
      {"criterion 4: witness certification grid", 60, criterion4_witness_grid},
      {"criterion 5a: smooth sweep (10, 500)", 600, [] { return sweep_outcome(sweep_smooth(10, 500, kJobs)); }},
      {"criterion 5b: cA sweep (30, 2000)", 600, [] { return sweep_outcome(sweep_ca(30, 2000, kJobs)); }},
      {"criterion 5c: cA/n sweep (40, 2000)", 600, [] { return sweep_outcome(sweep_can(40, 2000, kJobs)); }},
      {"criterion 5d: cD sweep (40, 3000)", 600, [] { return sweep_outcome(sweep_cd(40, 3000, kJobs)); }},
      {"criterion 5e: cD/2 sweep (40, 3000)", 600, [] { return sweep_outcome(sweep_cd2(40, 3000, kJobs)); }},
      {"criterion 6: inclusion in C intersect (0, 4/5]", 600, criterion6_inclusion},
      {"criterion 7: exceptional element 4/5", 1, criterion7_exceptional},
      {"criterion 8: small-numerator families up to 200", 60, criterion8_small_numerators},
      {"criterion 9: accumulation detection at denominators <= 200", 600, criterion9_accumulation},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.ok = false;
      if (!o.detail.empty()) o.detail += "; ";
      o.detail += "exceeded the " + std::to_string(c.budget_seconds) + " s budget";
    }
    std::ostringstream line;
    line << (o.ok ? "PASS" : "FAIL") << "  " << c.name << "  (" << secs << " s)";
    if (!o.detail.empty()) line << "  [" << o.detail << "]";
    std::cout << line.str() << std::endl;
    if (!o.ok) ++failures;
  }
  if (failures == 0) std::cout << "all acceptance criteria passed" << std::endl;
  else std::cout << failures << " acceptance criteria FAILED" << std::endl;
  return failures == 0 ? 0 : 1;
}
