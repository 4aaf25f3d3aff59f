#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace frogpr {

struct AcceptanceOptions {
    bool quick = false;        // only N <= 20, fewer trials
    std::uint64_t seed = 1;
    // Relative error injected into one stored measurement of the first
    // end-to-end trial; 0 leaves the data untouched.
    double perturbation = 0.0;
};

struct CriterionResult {
    int id;
    std::string title;
    bool pass;
    std::string detail;
    double elapsed_ms;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

// "PASS  2  title: detail (12.3 ms)"
std::string format_result(const CriterionResult& r);

// Runs the suite, prints one line per criterion and returns the number of
// failures.
int report_acceptance(const AcceptanceOptions& opts, std::ostream& out);

}  // namespace frogpr
