#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace qgclass {

// Full verification battery over every admissible triple of every system
// in the battery for this rank cap: canonical CYBE check, r0-family
// perturbations, symmetrization, and the cohomology table cross-checks.
// Output is canonical and byte-stable.
nlohmann::json sweep_report(int rank_cap);

// Command-line entry point; `args` excludes the program name. Returns
// 0 on success, 1 on domain errors (structured JSON on the error stream),
// 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qgclass
