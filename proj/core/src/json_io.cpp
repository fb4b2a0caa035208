#include "ct3/json_io.hpp"

#include <json.hpp>

#include <algorithm>

namespace ct3::json_io {

using json = nlohmann::ordered_json;

namespace {

json rational_field(const Rational& q) { return q.str(); }

Rational parse_rational(const json& j) {
  auto q = Rational::parse(j.get<std::string>());
  if (!q) throw std::invalid_argument("bad rational literal: " + j.get<std::string>());
  return *q;
}

json cparams_json(const CParams& p) {
  return json{{"alpha", p.alpha}, {"beta", p.beta}, {"p1", p.p1}, {"p2", p.p2}};
}

CParams parse_cparams(const json& j) {
  return CParams{j.at("alpha"), j.at("beta"), j.at("p1"), j.at("p2")};
}

json ht2_json(const Ht2Params& h) {
  return json{{"c1", h.c1}, {"c2", h.c2}, {"a1", h.a1}, {"a2", h.a2}};
}

json support_json(const PolySupport& f) {
  json terms = json::array();
  for (const auto& t : f.terms()) terms.push_back(t.exponents);
  return terms;
}

PolySupport parse_support(const json& j) {
  PolySupport f;
  for (const auto& term : j) f.insert(Monomial{term.get<std::vector<i64>>()});
  return f;
}

std::string dump(const json& j, int indent) { return j.dump(indent); }

}  // namespace

std::string threshold_entries_json(const std::vector<ThresholdEntry>& entries, int indent) {
  json out = json::array();
  for (const auto& e : entries) {
    json witnesses = json::array();
    json ht2 = json::array();
    std::vector<Ht2Params> seen;
    for (const auto& w : e.witnesses) {
      witnesses.push_back(cparams_json(w));
      Ht2Params h = c_to_ht2(w);
      if (std::find(seen.begin(), seen.end(), h) == seen.end()) {
        seen.push_back(h);
        ht2.push_back(ht2_json(h));
      }
    }
    out.push_back(json{{"value", rational_field(e.value)},
                       {"witnesses", std::move(witnesses)},
                       {"ht2", std::move(ht2)}});
  }
  return dump(out, indent);
}

std::vector<ThresholdEntry> parse_threshold_entries(const std::string& text) {
  std::vector<ThresholdEntry> out;
  for (const auto& e : json::parse(text)) {
    ThresholdEntry entry;
    entry.value = parse_rational(e.at("value"));
    for (const auto& w : e.at("witnesses")) entry.witnesses.push_back(parse_cparams(w));
    out.push_back(std::move(entry));
  }
  return out;
}

std::string threshold_entries_csv(const std::vector<ThresholdEntry>& entries) {
  std::string out = "value,alpha,beta,p1,p2\n";
  for (const auto& e : entries)
    for (const auto& w : e.witnesses)
      out += e.value.str() + "," + std::to_string(w.alpha) + "," + std::to_string(w.beta) +
             "," + std::to_string(w.p1) + "," + std::to_string(w.p2) + "\n";
  return out;
}

std::string witness_report_json(const WitnessReport& r, int indent) {
  json charts = json::object();
  for (const auto& [chart, f] : r.chart_transforms)
    charts[std::to_string(chart)] = support_json(f);
  json j{{"params", cparams_json(r.params)},
         {"case", to_string(r.witness_case)},
         {"f", support_json(r.f)},
         {"pre_merge_terms", r.pre_merge_terms},
         {"m", r.m},
         {"w2_f", r.w2_f ? json(*r.w2_f) : json(nullptr)},
         {"w3_f", r.w3_f ? json(*r.w3_f) : json(nullptr)},
         {"hyp2_holds", r.hyp2_holds ? json(*r.hyp2_holds) : json(nullptr)},
         {"hyp3_holds", r.hyp3_holds ? json(*r.hyp3_holds) : json(nullptr)},
         {"kawamata_mult", r.kawamata_mult ? json(*r.kawamata_mult) : json(nullptr)},
         {"chart_transforms", std::move(charts)},
         {"threshold", rational_field(r.threshold)},
         {"all_checks_passed", r.all_checks_passed},
         {"failed_checks", r.failed_checks},
         {"smoothness_note", WitnessReport::kSmoothnessNote}};
  return dump(j, indent);
}

WitnessReport parse_witness_report(const std::string& text) {
  json j = json::parse(text);
  WitnessReport r;
  r.params = parse_cparams(j.at("params"));
  const std::string c = j.at("case");
  if (c == "smooth-pair") r.witness_case = WitnessCase::SmoothPair;
  else if (c == "case1") r.witness_case = WitnessCase::Case1;
  else if (c == "case2") r.witness_case = WitnessCase::Case2;
  else if (c == "case3") r.witness_case = WitnessCase::Case3;
  else throw std::invalid_argument("bad witness case: " + c);
  r.f = parse_support(j.at("f"));
  r.pre_merge_terms = j.at("pre_merge_terms");
  r.m = j.at("m");
  if (!j.at("w2_f").is_null()) r.w2_f = j.at("w2_f").get<i64>();
  if (!j.at("w3_f").is_null()) r.w3_f = j.at("w3_f").get<i64>();
  if (!j.at("hyp2_holds").is_null()) r.hyp2_holds = j.at("hyp2_holds").get<bool>();
  if (!j.at("hyp3_holds").is_null()) r.hyp3_holds = j.at("hyp3_holds").get<bool>();
  if (!j.at("kawamata_mult").is_null()) r.kawamata_mult = j.at("kawamata_mult").get<i64>();
  for (const auto& [key, val] : j.at("chart_transforms").items())
    r.chart_transforms.emplace(std::stoi(key), parse_support(val));
  r.threshold = parse_rational(j.at("threshold"));
  r.all_checks_passed = j.at("all_checks_passed");
  r.failed_checks = j.at("failed_checks").get<std::vector<std::string>>();
  return r;
}

std::string sweep_report_json(const SweepReport& r, int indent) {
  json ces = json::array();
  for (const auto& ce : r.counterexamples) {
    json tuple = json::object();
    for (const auto& [name, value] : ce.tuple) tuple[name] = value;
    ces.push_back(json{{"tuple", std::move(tuple)}, {"m", ce.m}, {"failed_claim", ce.failed_claim}});
  }
  json j{{"family", r.family},
         {"bounds", json{{"r_max", r.bounds.r_max}, {"m_max", r.bounds.m_max}}},
         {"tuples", r.tuples_enumerated},
         {"m_values_tested", r.m_values_tested},
         {"premise_hits", r.premise_hits},
         {"counterexamples", std::move(ces)},
         {"thresholds_in_C", r.conclusions_in_C}};
  return dump(j, indent);
}

SweepReport parse_sweep_report(const std::string& text) {
  json j = json::parse(text);
  SweepReport r;
  r.family = j.at("family");
  r.bounds.r_max = j.at("bounds").at("r_max");
  r.bounds.m_max = j.at("bounds").at("m_max");
  r.tuples_enumerated = j.at("tuples");
  r.m_values_tested = j.at("m_values_tested");
  r.premise_hits = j.at("premise_hits");
  for (const auto& ce : j.at("counterexamples")) {
    Counterexample c;
    for (const auto& [name, value] : ce.at("tuple").items())
      c.tuple.emplace_back(name, value.get<i64>());
    c.m = ce.at("m");
    c.failed_claim = ce.at("failed_claim");
    r.counterexamples.push_back(std::move(c));
  }
  r.conclusions_in_C = j.at("thresholds_in_C");
  return r;
}

std::string verdict_json(const MembershipVerdict& v, int indent) {
  json j{{"value", rational_field(v.value)},
         {"member", v.member},
         {"witness", v.witness ? cparams_json(*v.witness) : json(nullptr)},
         {"search_bound_used", v.search_bound_used},
         {"exceptional", v.exceptional ? json(*v.exceptional) : json(nullptr)}};
  return dump(j, indent);
}

MembershipVerdict parse_verdict(const std::string& text) {
  json j = json::parse(text);
  MembershipVerdict v;
  v.value = parse_rational(j.at("value"));
  v.member = j.at("member");
  if (!j.at("witness").is_null()) v.witness = parse_cparams(j.at("witness"));
  v.search_bound_used = j.at("search_bound_used");
  if (!j.at("exceptional").is_null()) v.exceptional = j.at("exceptional").get<std::string>();
  return v;
}

}  // namespace ct3::json_io
