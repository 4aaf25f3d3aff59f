#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace frogpr {

using cplx = std::complex<double>;

// Length-N complex sequence with N-periodic indexing.
class TimeSignal {
public:
    explicit TimeSignal(std::vector<cplx> values);
    TimeSignal(std::initializer_list<cplx> values);

    int size() const { return static_cast<int>(v_.size()); }
    // Periodic access: any integer index is reduced mod N.
    const cplx& operator[](long n) const { return v_[wrap(n)]; }
    const std::vector<cplx>& values() const { return v_; }
    double norm() const;

private:
    std::size_t wrap(long n) const;
    std::vector<cplx> v_;
};

// DFT coefficients z^_0 .. z^_{N-1}.
class Spectrum {
public:
    explicit Spectrum(std::vector<cplx> coeffs);
    Spectrum(std::initializer_list<cplx> coeffs);

    int size() const { return static_cast<int>(c_.size()); }
    const cplx& operator[](long k) const { return c_[wrap(k)]; }
    const std::vector<cplx>& coeffs() const { return c_; }
    double max_modulus() const;

private:
    std::size_t wrap(long k) const;
    std::vector<cplx> c_;
};

// Unnormalized forward sum z^_k = sum_n z_n e^{-2 pi i k n / N}.
Spectrum dft(const TimeSignal& z);
// Inverse with the 1/N factor.
TimeSignal idft(const Spectrum& s);

// e^{i 2 pi m / r}, with the angle reduced exactly before evaluation.
cplx root_of_unity(int r, long m);

// e^{i 2 pi num / den} for an exact rational turn.
cplx unit_turn(long num, long den);

}  // namespace frogpr
