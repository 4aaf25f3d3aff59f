#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frogpr/ambiguity.hpp"
#include "frogpr/recovery.hpp"

namespace frogpr {

struct RunReport {
    std::string command;
    // Values are JSON text, already rendered.
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::pair<std::string, std::string>> outputs;
    std::vector<std::pair<std::string, double>> residuals;
    std::optional<EquivalenceReport> equivalence;
    double elapsed_ms = 0;
    // 0 success, 1 refusal or inequivalence. Not serialized.
    int status = 0;

    std::string to_json() const;
};

// Tolerance from FROGPR_TOL if set, else fallback. Throws UsageError on a
// value that is not a nonnegative number.
double default_tolerance(double fallback);

RunReport cmd_generate(int n, std::uint64_t seed, const std::string& out);
RunReport cmd_measure(const std::string& signal, int l, bool plan_only, const std::string& out);
RunReport cmd_recover(const std::string& meas, const std::string& out, const RecoveryConfig& cfg = {});
RunReport cmd_check_equiv(const std::string& a, const std::string& b, double tol = kEquivalenceTol);
// Criterion lines go to log.
RunReport cmd_selftest(bool quick, std::uint64_t seed, std::ostream& log);

}  // namespace frogpr
