#pragma once

#include <string>
#include <vector>

#include "ct3/verifier.hpp"
#include "ct3/witness.hpp"

// String-level serialization of the external interfaces. Rationals cross
// this boundary only as exact "a/m" strings; no field is ever a float.
namespace ct3::json_io {

std::string threshold_entries_json(const std::vector<ThresholdEntry>& entries, int indent = -1);
std::vector<ThresholdEntry> parse_threshold_entries(const std::string& text);

// One row per (value, witness) pair; consumers join on value.
std::string threshold_entries_csv(const std::vector<ThresholdEntry>& entries);

std::string witness_report_json(const WitnessReport& report, int indent = -1);
WitnessReport parse_witness_report(const std::string& text);

std::string sweep_report_json(const SweepReport& report, int indent = -1);
SweepReport parse_sweep_report(const std::string& text);

std::string verdict_json(const MembershipVerdict& verdict, int indent = -1);
MembershipVerdict parse_verdict(const std::string& text);

}  // namespace ct3::json_io
