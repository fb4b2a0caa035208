#include "ct3/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "ct3/json_io.hpp"
#include "ct3/version.hpp"

namespace ct3::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

std::string join_args(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) {
    if (!s.empty()) s += ' ';
    s += a;
  }
  return s;
}

Rational parse_rational_arg(const std::string& text) {
  auto q = Rational::parse(text);
  if (!q) throw std::invalid_argument("malformed rational literal: '" + text + "' (expected a/m)");
  return *q;
}

std::vector<i64> parse_int_list(const std::string& text, std::size_t count) {
  std::vector<i64> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoll(item, &pos));
      if (pos != item.size()) throw std::invalid_argument("");
    } catch (...) {
      throw std::invalid_argument("malformed integer list: '" + text + "'");
    }
  }
  if (out.size() != count)
    throw std::invalid_argument("expected " + std::to_string(count) + " comma-separated integers");
  return out;
}

// CT3_CACHE, when set, overrides the --cache flag.
std::string effective_cache_dir(const std::string& flag_value) {
  const char* env = std::getenv("CT3_CACHE");
  if (env != nullptr && *env != '\0') return env;
  return flag_value;
}

std::string enum_cache_name(const Rational& lo, const Rational& hi, i64 max_den, i64 k_max) {
  auto frac = [](const Rational& q) {
    return std::to_string(q.num()) + "-" + std::to_string(q.den());
  };
  return "enum_" + frac(lo) + "_" + frac(hi) + "_" + std::to_string(max_den) + "_" +
         std::to_string(k_max) + "_v" + kVersion + ".json";
}

json enum_cache_key(const Rational& lo, const Rational& hi, i64 max_den, i64 k_max) {
  return json{{"lo", lo.str()},
              {"hi", hi.str()},
              {"max_denominator", max_den},
              {"k_max", k_max},
              {"code_version", kVersion}};
}

std::optional<std::vector<ThresholdEntry>> cache_load(const std::string& dir, const Rational& lo,
                                                      const Rational& hi, i64 max_den, i64 k_max) {
  if (dir.empty()) return std::nullopt;
  try {
    std::ifstream in(fs::path(dir) / enum_cache_name(lo, hi, max_den, k_max));
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    json j = json::parse(ss.str());
    if (j.at("key") != enum_cache_key(lo, hi, max_den, k_max)) return std::nullopt;
    return json_io::parse_threshold_entries(j.at("entries").dump());
  } catch (...) {
    return std::nullopt;  // corrupted or stale entries are recomputed
  }
}

void cache_store(const std::string& dir, const Rational& lo, const Rational& hi, i64 max_den,
                 i64 k_max, const std::string& entries_json, std::ostream& err) {
  if (dir.empty()) return;
  std::error_code ec;
  fs::create_directories(dir, ec);
  std::ofstream out(fs::path(dir) / enum_cache_name(lo, hi, max_den, k_max));
  if (!out) {
    err << "warning: cache location not writable, continuing without cache: " << dir << "\n";
    return;
  }
  json j{{"key", enum_cache_key(lo, hi, max_den, k_max)}, {"entries", json::parse(entries_json)}};
  out << j.dump();
  if (!out) err << "warning: failed to write cache file under " << dir << "\n";
}

std::vector<ThresholdEntry> enumerate_cached(const Rational& lo, const Rational& hi, i64 max_den,
                                             i64 k_max, const std::string& cache_dir,
                                             std::ostream& err) {
  const std::string dir = effective_cache_dir(cache_dir);
  if (auto hit = cache_load(dir, lo, hi, max_den, k_max)) return *hit;
  auto entries = enumerate_interval(lo, hi, max_den, k_max);
  cache_store(dir, lo, hi, max_den, k_max, json_io::threshold_entries_json(entries), err);
  return entries;
}

void print_entries_table(std::ostream& out, const std::vector<ThresholdEntry>& entries) {
  out << "alpha beta p1 p2 ct\n";
  for (const auto& e : entries)
    for (const auto& w : e.witnesses)
      out << w.alpha << " " << w.beta << " " << w.p1 << " " << w.p2 << " " << e.value.str()
          << "\n";
}

// The parametric family (alpha, beta, p1, 3) with 0 <= p1 <= 2, 1 <= alpha <= 3,
// (2 - p1)*alpha < beta and gcd(alpha, beta) = 1; its values fill the whole
// open interval between 1/3 and 1/2.
bool family_predicate(const CParams& w) {
  return w.p2 == 3 && w.p1 >= 0 && w.p1 <= 2 && w.alpha >= 1 && w.alpha <= 3 &&
         w.alpha <= w.beta && (2 - w.p1) * w.alpha < w.beta && gcd64(w.alpha, w.beta) == 1;
}

struct FamilyCheck {
  i64 expected{};
  i64 matched{};
  bool ok{};
};

FamilyCheck check_family_rows(const std::vector<ThresholdEntry>& entries, i64 max_den) {
  FamilyCheck fc;
  fc.ok = true;
  for (i64 p1 = 0; p1 <= 2; ++p1)
    for (i64 alpha = 1; alpha <= 3; ++alpha)
      for (i64 beta = std::max(alpha, (2 - p1) * alpha + 1); beta <= 3 * max_den; ++beta) {
        CParams w{alpha, beta, p1, 3};
        if (!family_predicate(w)) continue;
        const Rational v = w.value();
        if (v.den() > max_den) continue;
        ++fc.expected;
        bool found = false;
        for (const auto& e : entries) {
          if (e.value != v) continue;
          found = std::find(e.witnesses.begin(), e.witnesses.end(), w) != e.witnesses.end();
          break;
        }
        if (found) ++fc.matched;
        else fc.ok = false;
      }
  return fc;
}

void emit_envelope(std::ostream& out, const std::string& command, json result,
                   std::chrono::steady_clock::time_point start) {
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  json envelope{{"schema_version", kSchemaVersion},
                {"command", command},
                {"result", std::move(result)},
                {"elapsed_ms", elapsed}};
  out << envelope.dump(2) << "\n";
}

json cparams_json(const CParams& p) {
  return json{{"alpha", p.alpha}, {"beta", p.beta}, {"p1", p.p1}, {"p2", p.p2}};
}

json ht2_json(const Ht2Params& h) {
  return json{{"c1", h.c1}, {"c2", h.c2}, {"a1", h.a1}, {"a2", h.a2}};
}

json support_json(const PolySupport& f) {
  json terms = json::array();
  for (const auto& t : f.terms()) terms.push_back(t.exponents);
  return terms;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const std::string command = join_args(args);

  CLI::App app{"exact classification and certification of threefold canonical thresholds"};
  app.name("ct3");
  app.require_subcommand(1);

  std::string value_str, set_name = "c";
  i64 k_max = 0;
  auto* member = app.add_subcommand("member", "decide membership of an exact fraction");
  member->add_option("value", value_str, "threshold as a/m")->required();
  member->add_option("--set", set_name, "which set to test")
      ->check(CLI::IsMember({"c", "ht2", "t3"}));
  member->add_option("--k-max", k_max, "search bound (default: denominator)");

  std::string lo_str, hi_str, format = "json", cache_dir;
  i64 max_den = 0, enum_k_max = 0;
  auto* enumerate = app.add_subcommand("enumerate", "list members of C inside an interval");
  enumerate->add_option("--lo", lo_str, "lower endpoint a/b")->required();
  enumerate->add_option("--hi", hi_str, "upper endpoint c/d")->required();
  enumerate->add_option("--max-den", max_den, "largest reduced denominator")->required();
  enumerate->add_option("--k-max", enum_k_max, "witness search bound (default: max-den)");
  enumerate->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "table"}));
  enumerate->add_option("--cache", cache_dir, "cache directory (env CT3_CACHE overrides)");

  std::string from, params_str;
  auto* convert = app.add_subcommand("convert", "convert between C and HT2 parameterizations");
  convert->add_option("--from", from, "source parameterization")
      ->required()
      ->check(CLI::IsMember({"c", "ht2"}));
  convert->add_option("params", params_str, "comma list of four integers")->required();

  std::string witness_params;
  bool certify = false;
  auto* witness = app.add_subcommand("witness", "build the explicit witness divisor");
  witness->add_option("params", witness_params, "alpha,beta,p1,p2")->required();
  witness->add_flag("--certify", certify, "run the full certification");

  std::string family;
  i64 r_max = 40, m_max = 3000;
  int jobs = 1;
  auto* verify = app.add_subcommand("verify", "run an exhaustive claim sweep");
  verify->add_option("family", family, "claim family")
      ->required()
      ->check(CLI::IsMember({"smooth", "ca", "can", "cd", "cd2"}));
  verify->add_option("--r-max", r_max, "tuple bound (alpha/beta bound for smooth)");
  verify->add_option("--m-max", m_max, "multiplicity bound");
  verify->add_option("--jobs", jobs, "worker count (deterministic output)");

  std::string t13_cache;
  auto* table13 = app.add_subcommand("table13", "reproduce the classified interval (1/3, 1/2)");
  table13->add_option("--cache", t13_cache, "cache directory (env CT3_CACHE overrides)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(member)) {
      const Rational q = parse_rational_arg(value_str);
      const i64 bound = k_max > 0 ? k_max : std::max<i64>(q.den(), 1);
      json result{{"value", q.str()}, {"set", set_name}};
      if (set_name == "c") {
        auto w = c_member(q, bound);
        result["member"] = w.has_value();
        result["witness"] = w ? cparams_json(*w) : json(nullptr);
        result["search_bound_used"] = bound;
      } else if (set_name == "ht2") {
        auto h = ht2_member(q, bound);
        result["member"] = h.has_value();
        result["distinguished_one"] = h && h->distinguished_one;
        result["witness"] = h && h->params ? ht2_json(*h->params) : json(nullptr);
        result["search_bound_used"] = bound;
      } else {
        result = json::parse(json_io::verdict_json(t3_classify(q, bound)));
        result["set"] = "t3";
      }
      emit_envelope(out, command, std::move(result), start);
      return 0;
    }

    if (app.got_subcommand(enumerate)) {
      const Rational lo = parse_rational_arg(lo_str);
      const Rational hi = parse_rational_arg(hi_str);
      const i64 bound = enum_k_max > 0 ? enum_k_max : max_den;
      auto entries = enumerate_cached(lo, hi, max_den, bound, cache_dir, err);
      if (format == "csv") {
        out << json_io::threshold_entries_csv(entries);
      } else if (format == "table") {
        print_entries_table(out, entries);
      } else {
        emit_envelope(out, command, json::parse(json_io::threshold_entries_json(entries)), start);
      }
      return 0;
    }

    if (app.got_subcommand(convert)) {
      auto v = parse_int_list(params_str, 4);
      json result{{"from", from}};
      if (from == "c") {
        CParams p{v[0], v[1], v[2], v[3]};
        if (!p.is_valid()) throw std::invalid_argument("invalid C parameters: " + params_str);
        Ht2Params h = c_to_ht2(p);
        result["input"] = cparams_json(p);
        result["value"] = p.value().str();
        result["output"] = ht2_json(h);
      } else {
        Ht2Params h{v[0], v[1], v[2], v[3]};
        if (!h.is_valid()) throw std::invalid_argument("invalid HT2 parameters: " + params_str);
        CParams p = ht2_to_c(h);
        result["input"] = ht2_json(h);
        result["value"] = h.value().str();
        result["output"] = cparams_json(p);
      }
      emit_envelope(out, command, std::move(result), start);
      return 0;
    }

    if (app.got_subcommand(witness)) {
      auto v = parse_int_list(witness_params, 4);
      CParams p{v[0], v[1], v[2], v[3]};
      json result;
      if (certify) {
        result = json::parse(json_io::witness_report_json(certify_witness(p)));
      } else {
        auto [f, witness_case] = build_witness(p);
        result = json{{"params", cparams_json(p)},
                      {"case", to_string(witness_case)},
                      {"f", support_json(f)},
                      {"threshold", std::min(p.value(), Rational(1)).str()}};
      }
      emit_envelope(out, command, std::move(result), start);
      return 0;
    }

    if (app.got_subcommand(verify)) {
      SweepReport report;
      if (family == "smooth") report = sweep_smooth(r_max, m_max, jobs);
      else if (family == "ca") report = sweep_ca(r_max, m_max, jobs);
      else if (family == "can") report = sweep_can(r_max, m_max, jobs);
      else if (family == "cd") report = sweep_cd(r_max, m_max, jobs);
      else report = sweep_cd2(r_max, m_max, jobs);
      emit_envelope(out, command, json::parse(json_io::sweep_report_json(report)), start);
      return report.certified() ? 0 : 3;
    }

    if (app.got_subcommand(table13)) {
      const Rational lo(1, 3), hi(1, 2);
      const i64 den_bound = 44, bound = 10;
      auto entries = enumerate_cached(lo, hi, den_bound, bound, t13_cache, err);
      print_entries_table(out, entries);
      auto fc = check_family_rows(entries, den_bound);
      out << "family rows (p2 = 3 series): " << fc.matched << "/" << fc.expected << "\n";
      out << "family predicate check: " << (fc.ok ? "OK" : "FAILED") << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "usage error: no subcommand given\n";
  return 2;
}

}  // namespace ct3::cli
