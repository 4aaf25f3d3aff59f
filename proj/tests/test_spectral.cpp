#include <gtest/gtest.h>

#include "frogpr/error.hpp"
#include "frogpr/spectral.hpp"
#include "oracle.hpp"

using namespace frogpr;

namespace {

std::vector<cplx> random_complex(int n, std::mt19937_64& rng)
{
    std::vector<cplx> z(n);
    for (auto& v : z)
        v = oracle::complex_gaussian(rng);
    return z;
}

}  // namespace

TEST(Spectral, DeltaGivesConstant)
{
    Spectrum s = dft(TimeSignal{1.0, 0.0, 0.0, 0.0});
    for (int k = 0; k < 4; ++k)
        EXPECT_EQ(s[k], cplx(1.0));
}

TEST(Spectral, ConstantGivesScaledDelta)
{
    const cplx c{0.5, -2.0};
    Spectrum s = dft(TimeSignal(std::vector<cplx>(6, c)));
    EXPECT_NEAR(std::abs(s[0] - 6.0 * c), 0.0, 1e-14);
    for (int k = 1; k < 6; ++k)
        EXPECT_NEAR(std::abs(s[k]), 0.0, 1e-14);
}

TEST(Spectral, FourSampleAnalyticSpectrum)
{
    Spectrum s = dft(TimeSignal{{0.3252, -0.4783}, {-0.7549, -0.5226}, {1.3703, 0.4783}, {-1.7115, 0.5226}});
    const cplx want[4] = {-0.7710, {-2.0902, -1.9132}, 4.1619, 0.0};
    for (int k = 0; k < 4; ++k)
        EXPECT_NEAR(std::abs(s[k] - want[k]), 0.0, 5e-4) << k;
}

TEST(Spectral, MatchesDirectSumOracle)
{
    std::mt19937_64 rng(11);
    for (int n : {2, 3, 7, 16, 33, 64}) {
        auto z = random_complex(n, rng);
        auto want = oracle::dft(z);
        auto got = dft(TimeSignal(z)).coeffs();
        EXPECT_LT(oracle::max_abs_diff(got, want), 1e-12 * n) << n;
    }
}

TEST(Spectral, InverseMatchesOracleAndRoundTrips)
{
    std::mt19937_64 rng(12);
    auto z = random_complex(16, rng);
    auto s = dft(TimeSignal(z));
    EXPECT_LT(oracle::max_abs_diff(idft(s).values(), z), 1e-10);
    EXPECT_LT(oracle::max_abs_diff(idft(s).values(), oracle::idft(s.coeffs())), 1e-13);
}

TEST(Spectral, InverseOfScaledDeltaIsOnes)
{
    std::vector<cplx> c(5, 0.0);
    c[0] = 5.0;
    const TimeSignal ones = idft(Spectrum(c));
    for (auto v : ones.values())
        EXPECT_NEAR(std::abs(v - 1.0), 0.0, 1e-15);
    const TimeSignal zero = idft(Spectrum(std::vector<cplx>(5, 0.0)));
    for (auto v : zero.values())
        EXPECT_EQ(v, cplx(0.0));
}

TEST(Spectral, Parseval)
{
    std::mt19937_64 rng(13);
    auto z = TimeSignal(random_complex(24, rng));
    auto s = dft(z);
    double es = 0;
    for (auto c : s.coeffs())
        es += std::norm(c);
    EXPECT_NEAR(es / 24, z.norm() * z.norm(), 1e-10);
}

TEST(Spectral, PeriodicIndexing)
{
    TimeSignal z{1.0, 2.0, 3.0};
    EXPECT_EQ(z[-1], cplx(3.0));
    EXPECT_EQ(z[3], cplx(1.0));
    EXPECT_EQ(z[-7], cplx(3.0));
    Spectrum s{4.0, 5.0};
    EXPECT_EQ(s[5], cplx(5.0));
}

TEST(Spectral, RejectsShortSequences)
{
    EXPECT_THROW(TimeSignal(std::vector<cplx>{1.0}), InvalidArgument);
    EXPECT_THROW(Spectrum(std::vector<cplx>{}), InvalidArgument);
}

TEST(Spectral, RootsOfUnityAreExactAtQuarterTurns)
{
    EXPECT_EQ(root_of_unity(4, 1), cplx(0.0, 1.0));
    EXPECT_EQ(root_of_unity(5, 0), cplx(1.0));
    EXPECT_EQ(root_of_unity(6, 3), cplx(-1.0));
    EXPECT_EQ(root_of_unity(8, -2), cplx(0.0, -1.0));
    EXPECT_EQ(unit_turn(1000000007L * 4, 4), cplx(1.0));
}

TEST(Spectral, RootOfUnityMatchesPolar)
{
    for (int r = 1; r <= 17; ++r)
        for (long m = -20; m <= 20; ++m)
            EXPECT_NEAR(std::abs(root_of_unity(r, m) - cplx(oracle::expi(static_cast<long double>(m) / r))),
                        0.0, 1e-15);
}
