#include "frogpr/spectral.hpp"

#include <cmath>
#include <numbers>

#include "frogpr/error.hpp"

namespace frogpr {

namespace {

std::vector<cplx> twiddles(int n, double sign)
{
    std::vector<cplx> t(n);
    for (int j = 0; j < n; ++j) {
        cplx w = unit_turn(j, n);
        t[j] = sign < 0 ? std::conj(w) : w;
    }
    return t;
}

}  // namespace

TimeSignal::TimeSignal(std::vector<cplx> values) : v_(std::move(values))
{
    if (v_.size() < 2)
        throw InvalidArgument("signal length must be at least 2");
}

TimeSignal::TimeSignal(std::initializer_list<cplx> values)
    : TimeSignal(std::vector<cplx>(values))
{
}

std::size_t TimeSignal::wrap(long n) const
{
    long N = static_cast<long>(v_.size());
    long r = n % N;
    return static_cast<std::size_t>(r < 0 ? r + N : r);
}

double TimeSignal::norm() const
{
    double s = 0;
    for (auto& x : v_)
        s += std::norm(x);
    return std::sqrt(s);
}

Spectrum::Spectrum(std::vector<cplx> coeffs) : c_(std::move(coeffs))
{
    if (c_.size() < 2)
        throw InvalidArgument("spectrum length must be at least 2");
}

Spectrum::Spectrum(std::initializer_list<cplx> coeffs)
    : Spectrum(std::vector<cplx>(coeffs))
{
}

std::size_t Spectrum::wrap(long k) const
{
    long N = static_cast<long>(c_.size());
    long r = k % N;
    return static_cast<std::size_t>(r < 0 ? r + N : r);
}

double Spectrum::max_modulus() const
{
    double m = 0;
    for (auto& c : c_)
        m = std::max(m, std::abs(c));
    return m;
}

Spectrum dft(const TimeSignal& z)
{
    const int N = z.size();
    auto t = twiddles(N, -1);
    std::vector<cplx> out(N);
    for (int k = 0; k < N; ++k) {
        cplx acc = 0;
        for (int n = 0; n < N; ++n)
            acc += z[n] * t[(static_cast<long>(k) * n) % N];
        out[k] = acc;
    }
    return Spectrum(std::move(out));
}

TimeSignal idft(const Spectrum& s)
{
    const int N = s.size();
    auto t = twiddles(N, +1);
    std::vector<cplx> out(N);
    for (int n = 0; n < N; ++n) {
        cplx acc = 0;
        for (int k = 0; k < N; ++k)
            acc += s[k] * t[(static_cast<long>(k) * n) % N];
        out[n] = acc / static_cast<double>(N);
    }
    return TimeSignal(std::move(out));
}

cplx unit_turn(long num, long den)
{
    if (den <= 0)
        throw InvalidArgument("unit_turn: denominator must be positive");
    long a = num % den;
    if (a < 0)
        a += den;
    // Quarter turns are returned exactly.
    if ((4 * a) % den == 0) {
        switch ((4 * a) / den) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        case 3: return {0.0, -1.0};
        }
    }
    // Reduce to (-1/2, 1/2] turns before evaluating.
    double frac = static_cast<double>(a) / static_cast<double>(den);
    if (frac > 0.5)
        frac -= 1.0;
    double ang = 2.0 * std::numbers::pi * frac;
    return {std::cos(ang), std::sin(ang)};
}

cplx root_of_unity(int r, long m)
{
    if (r < 1)
        throw InvalidArgument("root_of_unity: r must be positive");
    return unit_turn(m, r);
}

}  // namespace frogpr
