#pragma once

#include "frogpr/spectral.hpp"

namespace frogpr {

// g(z) = rotation_sign * translate(reflected ? reflect(z) : z, translation)
struct GroupElement {
    int rotation_sign = 1;
    int translation = 0;
    bool reflected = false;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

struct EquivalenceReport {
    bool equivalent;
    GroupElement best_element;
    double residual;
};

inline constexpr double kEquivalenceTol = 1e-6;

TimeSignal rotate(const TimeSignal& z, double theta);
// Spectral shift z^_k -> z^_k e^{i 2 pi k gamma / N}; for integer gamma this
// is result[n] = z[n + gamma].
TimeSignal translate(const TimeSignal& z, double gamma);
// result[n] = conj(z[-n])
TimeSignal reflect(const TimeSignal& z);

TimeSignal apply(const GroupElement& g, const TimeSignal& z);

// Exhaustive search over the 4N elements for min ||g(z) - w|| / max(||z||, ||w||).
EquivalenceReport equivalent_up_to_group(const TimeSignal& z, const TimeSignal& w,
                                         double tol = kEquivalenceTol);

}  // namespace frogpr
