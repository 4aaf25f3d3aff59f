#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frogpr/spectral.hpp"

namespace frogpr {

using IndexPair = std::pair<int, int>;  // (k, m)

// Exact root e^{i 2 pi num / den}.
struct UnitRoot {
    long num;
    long den;

    cplx pow(long e) const { return unit_turn(e * num, den); }
    bool pow_is_one(long e) const;
    bool pow_is_minus_one(long e) const;
};

class FrogParams {
public:
    FrogParams(int n, int l);

    int N() const { return n_; }
    int L() const { return l_; }
    // Number of delays, ceil(N / L).
    int r() const { return r_; }
    // Delay by m*L samples multiplies z^_l by omega^{l m}, omega = e^{i 2 pi L / N}.
    // This equals e^{i 2 pi / r} exactly when L divides N.
    UnitRoot omega() const { return {l_, n_}; }

    friend bool operator==(const FrogParams&, const FrogParams&) = default;

private:
    int n_;
    int l_;
    int r_;
};

// Squared magnitudes |y^_{k,m}|^2 keyed by (k, m).
class FrogMeasurements {
public:
    explicit FrogMeasurements(FrogParams params);

    const FrogParams& params() const { return params_; }
    void set(int k, int m, double value);
    bool contains(int k, int m) const { return values_.count({k, m}) != 0; }
    double value(int k, int m) const;
    // |y^_{k,m}|
    double magnitude(int k, int m) const;
    std::size_t size() const { return values_.size(); }
    const std::map<IndexPair, double>& entries() const { return values_; }
    double max_value() const;
    FrogMeasurements restricted(const std::vector<IndexPair>& indices) const;

private:
    FrogParams params_;
    std::map<IndexPair, double> values_;
};

std::vector<IndexPair> full_grid(const FrogParams& params);

// sum_n z_n z_{n+mL} e^{-i 2 pi k n / N}
cplx frog_value_time(const TimeSignal& z, const FrogParams& params, int k, int m);
// (1/N) sum_l z^_l z^_{k-l} omega^{l m}
cplx frog_value_freq(const Spectrum& s, const FrogParams& params, int k, int m);

FrogMeasurements frog_measurements_time(const TimeSignal& z, const FrogParams& params,
                                        const std::optional<std::vector<IndexPair>>& indices = {});
FrogMeasurements frog_measurements_freq(const Spectrum& s, const FrogParams& params,
                                        const std::optional<std::vector<IndexPair>>& indices = {});

// Largest |a - b| / max(b, floor * peak) over keys of b, with peak the
// largest value in b. Keys missing from a raise InvalidArgument.
inline constexpr double kRelativeFloor = 1e-6;
double max_relative_deviation(const FrogMeasurements& a, const FrogMeasurements& b);

struct ConstraintChecks {
    bool quadratic_pole_free;  // 1 + w^{2m} != 0
    bool quadratic_ratio_ok;   // w^m / (1 + w^{2m}) defined and != 1/2
    bool cubic_ratio_ok;       // (w^m + w^{2m}) / (1 + w^{3m}) defined and != 1
};

// Predicates for w = e^{i 2 pi / r}, decided by integer congruences.
ConstraintChecks constraint_checks(int r, long m);
ConstraintChecks constraint_checks(const UnitRoot& w, long m);

struct MeasurementIndexPlan {
    FrogParams params;
    std::array<int, 5> i2;
    int i3;
    std::vector<std::array<int, 3>> ik;  // rows k = 4 .. N/2

    const std::array<int, 3>& row(int k) const { return ik.at(k - 4); }
    // Sorted distinct (k, m) pairs; 3N/2 + 1 of them.
    std::vector<IndexPair> entries() const;
};

// Five k = 2 delays: 0, then the smallest with a defined ratio != 1/2, then
// the next three pole-free delays.
std::array<int, 5> select_i2(const FrogParams& params);

// Smallest admissible indices. Requires N even, N/2 >= 4, r >= 5.
MeasurementIndexPlan plan_indices(const FrogParams& params);

// Why a plan is not valid, or empty if it is.
std::optional<std::string> plan_violation(const MeasurementIndexPlan& plan);

}  // namespace frogpr
