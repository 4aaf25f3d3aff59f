#pragma once

#include <stdexcept>
#include <string>

namespace frogpr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad arguments to a library call (length mismatch, out-of-range parameter).
struct InvalidArgument : Error {
    using Error::Error;
};

// Degenerate geometry in a circle solver (coincident or collinear centers).
struct SingularConfiguration : Error {
    using Error::Error;
};

// The circle system has no point within tolerance.
struct NoSolution : Error {
    using Error::Error;
};

// Input violates the genericity hypotheses (|z0| or |z1| vanishing, etc).
struct DegenerateSignal : Error {
    using Error::Error;
};

// Measurements are not consistent with any analytic signal under recovery.
struct InconsistentMeasurements : Error {
    using Error::Error;
};

// No index triple satisfies the plan constraints for some row.
struct PlanInfeasible : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// Bad command-line input (odd n for generate, length mismatch, bad flag value).
struct UsageError : Error {
    using Error::Error;
};

}  // namespace frogpr
