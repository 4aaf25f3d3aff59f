#include <gtest/gtest.h>

#include "frogpr/ambiguity.hpp"
#include "frogpr/analytic.hpp"
#include "frogpr/error.hpp"
#include "frogpr/recovery.hpp"
#include "oracle.hpp"

using namespace frogpr;

namespace {

// Analytic signal from a prescribed half spectrum (z_0 and z_{N/2} real).
TimeSignal from_half_spectrum(std::vector<cplx> half)
{
    const int n = 2 * (static_cast<int>(half.size()) - 1);
    std::vector<cplx> c(n, 0.0);
    for (std::size_t k = 0; k < half.size(); ++k)
        c[k] = half[k];
    return idft(Spectrum(c));
}

// Measurements of z at the plan entries, computed by the independent oracle.
FrogMeasurements oracle_measurements(const TimeSignal& z, const MeasurementIndexPlan& plan)
{
    FrogMeasurements m(plan.params);
    for (auto [k, d] : plan.entries())
        m.set(k, d, oracle::frog(z.values(), plan.params.L(), k, d));
    return m;
}

}  // namespace

TEST(Recovery, EndToEndSixteenThree)
{
    std::mt19937_64 rng(51);
    const FrogParams p(16, 3);
    const auto plan = plan_indices(p);
    for (int t = 0; t < 30; ++t) {
        auto z = make_analytic(RealSignal(oracle::gaussian(16, rng)));
        auto r = recover(oracle_measurements(z, plan), plan);
        EXPECT_LT(oracle::group_distance(z.values(), r.signal.values()), 1e-6) << t;
        EXPECT_LE(r.verification_residual, 1e-6);
        EXPECT_TRUE(is_analytic(r.spectrum).is_analytic);
    }
}

TEST(Recovery, GroupImagesGiveTheSameAnswer)
{
    std::mt19937_64 rng(52);
    const auto plan = plan_indices(FrogParams(16, 3));
    auto z = generic_analytic_signal(16, rng);
    for (GroupElement g : {GroupElement{-1, 0, false}, GroupElement{1, 0, true}, GroupElement{-1, 5, true}}) {
        auto r = recover(oracle_measurements(apply(g, z), plan), plan);
        EXPECT_LT(oracle::group_distance(z.values(), r.signal.values()), 1e-6);
    }
}

TEST(Recovery, AllAcceptanceConfigurations)
{
    std::mt19937_64 rng(53);
    for (auto [n, l] : {std::pair{12, 1}, {20, 3}, {32, 5}, {64, 11}, {40, 7}, {26, 5}}) {
        const auto plan = plan_indices(FrogParams(n, l));
        for (int t = 0; t < 5; ++t) {
            auto z = generic_analytic_signal(n, rng);
            auto r = recover(frog_measurements_time(z, plan.params, plan.entries()), plan);
            EXPECT_LT(equivalent_up_to_group(r.signal, z).residual, 1e-6) << n << "," << l;
        }
    }
}

TEST(Recovery, UsesOnlyPlanEntries)
{
    std::mt19937_64 rng(54);
    const FrogParams p(20, 3);
    const auto plan = plan_indices(p);
    auto z = generic_analytic_signal(20, rng);
    auto full = frog_measurements_time(z, p);
    // Corrupt every entry the plan does not use.
    auto entries = plan.entries();
    FrogMeasurements noisy(p);
    for (auto& [key, v] : full.entries()) {
        bool used = std::find(entries.begin(), entries.end(), key) != entries.end();
        noisy.set(key.first, key.second, used ? v : 3 * v + 1);
    }
    auto r = recover(noisy, plan);
    EXPECT_LT(equivalent_up_to_group(r.signal, z).residual, 1e-6);
}

TEST(Recovery, ZeroModulus)
{
    std::mt19937_64 rng(55);
    const auto plan = plan_indices(FrogParams(12, 1));
    for (int t = 0; t < 20; ++t) {
        auto z = generic_analytic_signal(12, rng);
        EXPECT_NEAR(recover_z0(frog_measurements_time(z, plan.params, plan.entries()), plan), std::abs(dft(z)[0]),
                    1e-7 * std::abs(dft(z)[0]));
    }
}

TEST(Recovery, ZeroModulusPicksSmallerRootWhenNeeded)
{
    const auto plan = plan_indices(FrogParams(12, 1));
    auto z = from_half_spectrum({0.4, {1.3, -0.2}, {-0.7, 0.9}, {0.5, 1.1}, {-1.2, 0.3}, {0.8, -0.6}, 2.5});
    auto meas = frog_measurements_time(z, plan.params, plan.entries());
    EXPECT_NEAR(recover_z0(meas, plan), 0.4, 1e-7);
    auto r = recover(meas, plan);
    EXPECT_LT(equivalent_up_to_group(r.signal, z).residual, 1e-6);
}

TEST(Recovery, ZeroModulusWithEqualEndpoints)
{
    const auto plan = plan_indices(FrogParams(12, 1));
    auto z = from_half_spectrum({1.5, {1.3, -0.2}, {-0.7, 0.9}, {0.5, 1.1}, {-1.2, 0.3}, {0.8, -0.6}, -1.5});
    auto meas = frog_measurements_time(z, plan.params, plan.entries());
    EXPECT_NEAR(recover_z0(meas, plan), std::sqrt(12 * std::sqrt(meas.value(0, 0)) / 2), 1e-12);
    EXPECT_NEAR(recover_z0(meas, plan), 1.5, 1e-7);
}

TEST(Recovery, TailModuliAndSignBranch)
{
    std::mt19937_64 rng(56);
    const auto plan = plan_indices(FrogParams(12, 1));
    auto z = generic_analytic_signal(12, rng);
    auto s = dft(z);
    auto meas = frog_measurements_time(z, plan.params, plan.entries());
    const double z0 = recover_z0(meas, plan);
    auto plus = recover_tail(meas, plan, z0, 1);
    auto minus = recover_tail(meas, plan, z0, -1);
    EXPECT_NEAR(plus[0].real(), z0, 1e-12);
    EXPECT_NEAR(minus[0].real(), -z0, 1e-12);
    for (const Spectrum* b : {&plus, &minus}) {
        for (int k = 0; k <= 6; ++k)
            EXPECT_NEAR(std::abs((*b)[k]), std::abs(s[k]), 1e-6 * s.max_modulus()) << k;
        EXPECT_GE((*b)[2].imag(), 0.0);
        EXPECT_NEAR((*b)[1].imag(), 0.0, 1e-12);
        EXPECT_GT((*b)[1].real(), 0.0);
    }
}

TEST(Recovery, VanishingThirdCoefficient)
{
    const auto plan = plan_indices(FrogParams(12, 1));
    auto z = from_half_spectrum({0.9, {1.3, -0.2}, {-0.7, 0.9}, 0.0, {-1.2, 0.3}, {0.8, -0.6}, 1.7});
    auto meas = frog_measurements_time(z, plan.params, plan.entries());
    try {
        auto r = recover(meas, plan);
        EXPECT_LE(verify_solution(r.spectrum, meas, plan.params), 1e-6);
        EXPECT_LT(std::abs(r.spectrum[3]), 1e-6);
    } catch (const Error&) {
        SUCCEED();
    }
}

TEST(Recovery, RefusesUnsupportedConfigurations)
{
    std::mt19937_64 rng(57);
    auto z = generic_analytic_signal(16, rng);
    const FrogParams even_l(16, 2);
    auto meas = frog_measurements_time(z, even_l);
    MeasurementIndexPlan fake = plan_indices(FrogParams(16, 3));
    fake.params = even_l;
    EXPECT_THROW(recover(meas, fake), InvalidArgument);
    const FrogParams small_r(16, 5);
    MeasurementIndexPlan fake2 = plan_indices(FrogParams(16, 3));
    fake2.params = small_r;
    EXPECT_THROW(recover(frog_measurements_time(z, small_r), fake2), InvalidArgument);
}

TEST(Recovery, InconsistentMeasurementsAreReported)
{
    std::mt19937_64 rng(58);
    const auto plan = plan_indices(FrogParams(16, 3));
    auto z = generic_analytic_signal(16, rng);
    auto meas = frog_measurements_time(z, plan.params, plan.entries());
    meas.set(5, plan.row(5)[1], meas.value(5, plan.row(5)[1]) * 1.001);
    EXPECT_THROW(recover(meas, plan), InconsistentMeasurements);
}

TEST(Recovery, MissingPlanEntry)
{
    std::mt19937_64 rng(59);
    const auto plan = plan_indices(FrogParams(16, 3));
    auto z = generic_analytic_signal(16, rng);
    auto entries = plan.entries();
    entries.pop_back();
    EXPECT_THROW(recover(frog_measurements_time(z, plan.params, entries), plan), InvalidArgument);
}

TEST(Recovery, VerifySolution)
{
    std::mt19937_64 rng(60);
    const FrogParams p(16, 3);
    auto z = generic_analytic_signal(16, rng);
    auto s = dft(z);
    auto meas = frog_measurements_time(z, p);
    EXPECT_LT(verify_solution(s, meas, p), 1e-10);
    auto conj = s.coeffs();
    for (auto& c : conj)
        c = std::conj(c);
    EXPECT_LT(verify_solution(Spectrum(conj), meas, p), 1e-10);

    auto swapped = s.coeffs();
    swapped[0] = std::abs(s[8]) * (s[0].real() < 0 ? -1 : 1);
    swapped[8] = std::polar(std::abs(s[0]), std::arg(s[8]));
    EXPECT_GT(verify_solution(Spectrum(swapped), meas, p), 1e-3);
    EXPECT_THROW(verify_solution(s, meas, FrogParams(16, 1)), InvalidArgument);
}

TEST(Recovery, EvenLProbe)
{
    std::mt19937_64 rng(61);
    const FrogParams p(16, 2);
    for (int t = 0; t < 100; ++t) {
        auto z = generic_analytic_signal(16, rng);
        auto s = dft(z);
        auto meas = frog_measurements_time(z, p);
        EXPECT_TRUE(even_l_infeasibility_probe(meas, p, 0.37 * s[0].real(), 1.1)) << t;
        if (t < 10) {
            EXPECT_FALSE(even_l_infeasibility_probe(meas, p, s[0].real(), std::arg(s[1])));
            EXPECT_FALSE(even_l_infeasibility_probe(meas, p, -s[0].real(), std::arg(s[1])));
        }
    }
    auto z = generic_analytic_signal(16, rng);
    EXPECT_THROW(even_l_infeasibility_probe(frog_measurements_time(z, p), p, 0.0, 0.0), DegenerateSignal);
    EXPECT_THROW(even_l_infeasibility_probe(frog_measurements_time(z, FrogParams(16, 3)), FrogParams(16, 3), 1, 0),
                 InvalidArgument);
}
