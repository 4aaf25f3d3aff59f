#include "frogpr/analytic.hpp"

#include <cmath>

#include "frogpr/error.hpp"

namespace frogpr {

RealSignal::RealSignal(std::vector<double> values) : v_(std::move(values))
{
    if (v_.size() < 2)
        throw InvalidArgument("real signal length must be at least 2");
}

TimeSignal make_analytic(const RealSignal& x)
{
    const int N = x.size();
    std::vector<cplx> z(x.values().begin(), x.values().end());
    auto c = dft(TimeSignal(z)).coeffs();
    const int half = N / 2;
    const bool even = N % 2 == 0;
    for (int k = 1; k < N; ++k) {
        if (k < half || (!even && k == half))
            c[k] *= 2.0;
        else if (!(even && k == half))
            c[k] = 0;
    }
    // The input is real, so these are real up to rounding.
    c[0] = c[0].real();
    if (even)
        c[half] = c[half].real();
    return idft(Spectrum(std::move(c)));
}

AnalyticityReport is_analytic(const Spectrum& s, double tol)
{
    if (tol < 0)
        throw InvalidArgument("is_analytic: negative tolerance");
    const int N = s.size();
    const bool even = N % 2 == 0;
    const int last = even ? N / 2 : (N - 1) / 2;
    double worst = std::abs(s[0].imag());
    if (even)
        worst = std::max(worst, std::abs(s[N / 2].imag()));
    for (int k = last + 1; k < N; ++k)
        worst = std::max(worst, std::abs(s[k]));
    return {worst <= tol, worst};
}

AnalyticityReport is_analytic(const Spectrum& s)
{
    return is_analytic(s, kAnalyticRelTol * s.max_modulus());
}

TimeSignal generic_analytic_signal(int n, std::mt19937_64& rng)
{
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (;;) {
        std::vector<double> x(n);
        for (auto& v : x)
            v = gauss(rng);
        TimeSignal z = make_analytic(RealSignal(std::move(x)));
        Spectrum s = dft(z);
        double floor = 1e-6 * s.max_modulus();
        if (std::abs(s[0]) >= floor && std::abs(s[1]) >= floor)
            return z;
    }
}

}  // namespace frogpr
