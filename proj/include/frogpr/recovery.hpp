#pragma once

#include "frogpr/frog.hpp"
#include "frogpr/spectral.hpp"

namespace frogpr {

struct RecoveryConfig {
    double feasibility_tol = 1e-6;
    double residual_tol = 1e-6;
    // Minimum |z0|, |z1| relative to sqrt(N * max |y|).
    double genericity_floor = 1e-9;
};

struct RecoveryResult {
    TimeSignal signal;
    Spectrum spectrum;
    int sign_branch;
    double verification_residual;
};

// |z^_0| from the k = 0, 1, 2 measurements (positive root).
double recover_z0(const FrogMeasurements& meas, const MeasurementIndexPlan& plan,
                  const RecoveryConfig& cfg = {});

// Relaxed spectrum (z~_0, ..., z~_{N/2}, 0, ..., 0) with z~_0 = sign * z0 and
// z~_1 > 0, on the branch with Im z~_2 >= 0.
Spectrum recover_tail(const FrogMeasurements& meas, const MeasurementIndexPlan& plan, double z0,
                      int sign, const RecoveryConfig& cfg = {});

// Full pipeline from the plan's entries of meas. Requires N even, L odd, r >= 5.
RecoveryResult recover(const FrogMeasurements& meas, const MeasurementIndexPlan& plan,
                       const RecoveryConfig& cfg = {});

// Largest relative deviation between the measurements implied by s and
// those in meas, over the entries present in meas.
double verify_solution(const Spectrum& s, const FrogMeasurements& meas, const FrogParams& params);

// With L even, fix z~_0 = alpha and z~_1 = (N |y_{1,0}| / (2|alpha|)) e^{i theta}
// and test the five k = 2 circles. True means no common point.
bool even_l_infeasibility_probe(const FrogMeasurements& meas, const FrogParams& params,
                                double alpha, double theta, const RecoveryConfig& cfg = {});

}  // namespace frogpr
