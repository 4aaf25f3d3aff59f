#include "frogpr/ambiguity.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "frogpr/error.hpp"

namespace frogpr {

TimeSignal rotate(const TimeSignal& z, double theta)
{
    const cplx e = std::polar(1.0, theta);
    std::vector<cplx> out(z.values());
    for (auto& v : out)
        v *= e;
    return TimeSignal(std::move(out));
}

TimeSignal translate(const TimeSignal& z, double gamma)
{
    const int N = z.size();
    if (gamma == std::floor(gamma) && std::abs(gamma) < 1e15) {
        long t = static_cast<long>(gamma);
        std::vector<cplx> out(N);
        for (int n = 0; n < N; ++n)
            out[n] = z[n + t];
        return TimeSignal(std::move(out));
    }
    auto c = dft(z).coeffs();
    // Reduce gamma mod N so the phase argument stays small.
    double g = std::fmod(gamma, static_cast<double>(N));
    for (int k = 0; k < N; ++k)
        c[k] *= std::polar(1.0, 2.0 * std::numbers::pi * k * g / N);
    return idft(Spectrum(std::move(c)));
}

TimeSignal reflect(const TimeSignal& z)
{
    const int N = z.size();
    std::vector<cplx> out(N);
    for (int n = 0; n < N; ++n)
        out[n] = std::conj(z[-n]);
    return TimeSignal(std::move(out));
}

TimeSignal apply(const GroupElement& g, const TimeSignal& z)
{
    TimeSignal base = g.reflected ? reflect(z) : z;
    const int N = z.size();
    std::vector<cplx> out(N);
    for (int n = 0; n < N; ++n)
        out[n] = static_cast<double>(g.rotation_sign) * base[n + g.translation];
    return TimeSignal(std::move(out));
}

EquivalenceReport equivalent_up_to_group(const TimeSignal& z, const TimeSignal& w, double tol)
{
    if (z.size() != w.size())
        throw InvalidArgument("equivalent_up_to_group: length mismatch");
    if (tol < 0)
        throw InvalidArgument("equivalent_up_to_group: negative tolerance");
    const int N = z.size();
    const double denom = std::max(z.norm(), w.norm());
    if (denom == 0)
        return {true, GroupElement{}, 0.0};

    const TimeSignal zr = reflect(z);
    EquivalenceReport best{false, GroupElement{}, std::numeric_limits<double>::infinity()};
    // Lexicographic scan on (rotation_sign, translation, reflected); strict
    // improvement keeps the first minimizer.
    for (int sign : {-1, 1}) {
        for (int t = 0; t < N; ++t) {
            for (bool refl : {false, true}) {
                const TimeSignal& base = refl ? zr : z;
                double s = 0;
                for (int n = 0; n < N; ++n)
                    s += std::norm(static_cast<double>(sign) * base[n + t] - w[n]);
                double res = std::sqrt(s) / denom;
                if (res < best.residual)
                    best = {false, GroupElement{sign, t, refl}, res};
            }
        }
    }
    best.equivalent = best.residual <= tol;
    return best;
}

}  // namespace frogpr
