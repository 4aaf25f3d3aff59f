#pragma once

#include <random>
#include <vector>

#include "frogpr/spectral.hpp"

namespace frogpr {

class RealSignal {
public:
    explicit RealSignal(std::vector<double> values);
    int size() const { return static_cast<int>(v_.size()); }
    double operator[](int n) const { return v_[n]; }
    const std::vector<double>& values() const { return v_; }

private:
    std::vector<double> v_;
};

struct AnalyticityReport {
    bool is_analytic;
    double max_violation;
};

// Default analyticity threshold, relative to the spectrum's largest modulus.
inline constexpr double kAnalyticRelTol = 1e-9;

// Discrete analytic signal: keep DC (and Nyquist for even N), double the
// positive frequencies, zero the rest.
TimeSignal make_analytic(const RealSignal& x);

// Absolute threshold: required-zero coefficients need modulus <= tol,
// coefficient 0 (and N/2 for even N) need |imag| <= tol.
AnalyticityReport is_analytic(const Spectrum& s, double tol);
// Same test with tol = kAnalyticRelTol * s.max_modulus().
AnalyticityReport is_analytic(const Spectrum& s);

// Gaussian real signal made analytic, redrawn while |z^_0| or |z^_1| is
// below 1e-6 of the largest coefficient.
TimeSignal generic_analytic_signal(int n, std::mt19937_64& rng);

}  // namespace frogpr
