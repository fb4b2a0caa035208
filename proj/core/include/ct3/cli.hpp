#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ct3::cli {

// Dispatches one invocation. Results go to out as a JSON OutputEnvelope
// (csv/table formats print plain text instead); warnings and usage errors
// go to err. Exit codes: 0 success (including non-member answers), 2 usage
// error, 3 when a verify sweep finds counterexamples.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ct3::cli
