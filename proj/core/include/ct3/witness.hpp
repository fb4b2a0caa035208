#pragma once

#include <map>
#include <optional>
#include <string>

#include "ct3/thresholds.hpp"
#include "ct3/weights.hpp"

namespace ct3 {

// Which explicit divisor family certifies the parameterization.
enum class WitnessCase {
  SmoothPair,  // alpha = beta = 1
  Case1,       // alpha | p2
  Case2,       // alpha does not divide p2, p1 != p2
  Case3,       // alpha does not divide p2, p1 = p2
};

std::string to_string(WitnessCase c);
WitnessCase classify_case(const CParams& p);

// The witness support together with every arithmetic fact the construction
// asserts about it. Fields tied to the auxiliary weights are absent exactly
// when those weights do not exist: the w2 family needs alpha > 1 and the
// whole comparison apparatus needs beta > 1 (SmoothPair carries only m and
// the threshold).
struct WitnessReport {
  CParams params;
  WitnessCase witness_case{};
  PolySupport f;
  i64 pre_merge_terms{};
  i64 m{};
  std::optional<i64> w2_f;
  std::optional<i64> w3_f;
  std::optional<bool> hyp2_holds;
  std::optional<bool> hyp3_holds;
  std::optional<i64> kawamata_mult;
  std::map<int, PolySupport> chart_transforms;
  Rational threshold;
  bool all_checks_passed{true};
  std::vector<std::string> failed_checks;
  // Nonsingularity of the divisor away from the chart origins is a geometric
  // fact this artifact does not re-verify.
  static constexpr const char* kSmoothnessNote =
      "smoothness away from chart origins not checked";
};

// The support of the divisor certifying value(p), with its case tag.
std::pair<PolySupport, WitnessCase> build_witness(const CParams& p);

// Builds the witness and checks every asserted identity and inequality.
// A report with any failed check is returned with the failure flagged.
WitnessReport certify_witness(const CParams& p);

}  // namespace ct3
