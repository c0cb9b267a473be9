#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bollobas::acceptance {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs the whole acceptance battery (fixed seeds, fixed tolerances), printing
// one PASS/FAIL line per criterion. Returns true iff everything passed. The
// CLI `selftest` subcommand and the acceptance test binary both call this.
bool run_all(std::ostream& out);

std::vector<CriterionResult> run_criteria(std::ostream& log);

}  // namespace bollobas::acceptance
