#include "frogpr/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>

#include "frogpr/ambiguity.hpp"
#include "frogpr/analytic.hpp"
#include "frogpr/circles.hpp"
#include "frogpr/error.hpp"
#include "frogpr/frog.hpp"
#include "frogpr/recovery.hpp"

namespace frogpr {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(const char* f, double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

std::string g3(double x) { return fmt("%.3g", x); }

std::string count(int good, int total) { return std::to_string(good) + "/" + std::to_string(total); }

double elapsed_ms(Clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

cplx complex_gauss(std::mt19937_64& rng)
{
    std::normal_distribution<double> g(0.0, 1.0);
    double re = g(rng);
    return {re, g(rng)};
}

// Four-sample worked example and its 2/pi translate.
CriterionResult example_reproduction()
{
    auto t0 = Clock::now();
    const TimeSignal z = make_analytic(RealSignal({0.3252, -0.7549, 1.3703, -1.7115}));
    const Spectrum s = dft(z);
    const FrogParams p(4, 1);
    const double y = std::norm(frog_value_time(z, p, 0, 0));
    const double yt = std::norm(frog_value_time(translate(z, 2 / std::numbers::pi), p, 0, 0));
    const double ms = elapsed_ms(t0);

    const cplx want[4] = {-0.7710, {-2.0902, -1.9132}, 4.1619, 0.0};
    double err = std::max(std::abs(y - 20.0614), std::abs(yt - 17.9335));
    for (int k = 0; k < 4; ++k)
        err = std::max({err, std::abs(s[k].real() - want[k].real()), std::abs(s[k].imag() - want[k].imag())});
    bool pass = err <= 5e-4 && ms < 1.0;
    std::string detail = "y00 = " + fmt("%.4f", y) + ", translated y00 = " + fmt("%.4f", yt) +
                         ", max abs error " + g3(err) + " <= 5e-4, runtime " + fmt("%.3f", ms) +
                         " ms < 1 ms";
    return {1, "four-sample worked example", pass, detail, ms};
}

struct Config {
    int n, l;
};

CriterionResult end_to_end(const AcceptanceOptions& opts)
{
    auto t0 = Clock::now();
    std::vector<Config> configs = {{12, 1}, {16, 3}, {20, 3}, {32, 5}, {64, 11}};
    if (opts.quick)
        std::erase_if(configs, [](const Config& c) { return c.n > 20; });
    const int trials = 100;

    std::mt19937_64 rng(opts.seed);
    int total_ok = 0, total = 0;
    double worst_eq = 0, worst_ver = 0;
    std::string per_config, first_failure;
    for (const Config& c : configs) {
        const FrogParams p(c.n, c.l);
        const MeasurementIndexPlan plan = plan_indices(p);
        int ok = 0;
        for (int t = 0; t < trials; ++t) {
            const TimeSignal z = generic_analytic_signal(c.n, rng);
            FrogMeasurements meas = frog_measurements_time(z, p, plan.entries());
            if (opts.perturbation != 0 && total == 0) {
                const int m = plan.i2[1];
                meas.set(2, m, meas.value(2, m) * (1 + opts.perturbation));
            }
            ++total;
            try {
                const RecoveryResult r = recover(meas, plan);
                const EquivalenceReport e = equivalent_up_to_group(r.signal, z);
                worst_eq = std::max(worst_eq, e.residual);
                worst_ver = std::max(worst_ver, r.verification_residual);
                if (e.residual < 1e-6 && r.verification_residual < 1e-6)
                    ++ok;
                else if (first_failure.empty())
                    first_failure = "(" + std::to_string(c.n) + "," + std::to_string(c.l) + ") trial " +
                                    std::to_string(t) + ": equivalence residual " + g3(e.residual);
            } catch (const Error& e) {
                if (first_failure.empty())
                    first_failure = "(" + std::to_string(c.n) + "," + std::to_string(c.l) + ") trial " +
                                    std::to_string(t) + ": " + e.what();
            }
        }
        total_ok += ok;
        per_config += (per_config.empty() ? "" : " ") + std::to_string(c.n) + "/" + std::to_string(c.l) +
                      ":" + count(ok, trials);
    }
    const double ms = elapsed_ms(t0);
    bool pass = total_ok == total && ms < 30000;
    std::string detail = count(total_ok, total) + " recovered [" + per_config +
                         "], worst equivalence " + g3(worst_eq) + " < 1e-6, worst verification " +
                         g3(worst_ver) + " < 1e-6, " + fmt("%.1f", ms / 1000) + " s < 30 s";
    if (!first_failure.empty())
        detail += "; first failure " + first_failure;
    return {2, "end-to-end recovery", pass, detail, ms};
}

double grid_deviation(const TimeSignal& a, const TimeSignal& b, const FrogParams& p)
{
    const auto grid = full_grid(p);
    return max_relative_deviation(frog_measurements_time(a, p, grid), frog_measurements_time(b, p, grid));
}

CriterionResult ambiguity_invariance(const AcceptanceOptions& opts)
{
    auto t0 = Clock::now();
    std::mt19937_64 rng(opts.seed + 3);
    const int even_n[] = {8, 10, 12, 14, 16, 18, 20};
    const int odd_n[] = {7, 9, 11, 13, 15};
    const int ls[] = {1, 2, 3};

    double worst_even = 0;
    int even_ok = 0;
    for (int i = 0; i < 50; ++i) {
        const FrogParams p(even_n[i % 7], ls[i % 3]);
        const TimeSignal z = generic_analytic_signal(p.N(), rng);
        const auto base = frog_measurements_time(z, p, full_grid(p));
        double worst = 0;
        for (int sign : {1, -1})
            for (int t = 0; t < p.N(); ++t)
                for (bool refl : {false, true}) {
                    const TimeSignal g = apply({sign, t, refl}, z);
                    worst = std::max(worst, max_relative_deviation(frog_measurements_time(g, p, full_grid(p)), base));
                }
        worst_even = std::max(worst_even, worst);
        even_ok += worst <= 1e-8;
    }

    double worst_odd = 0;
    int odd_ok = 0;
    std::uniform_real_distribution<double> shift(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const FrogParams p(odd_n[i % 5], ls[i % 3]);
        const TimeSignal z = generic_analytic_signal(p.N(), rng);
        double worst = 0;
        for (int j = 0; j < 10; ++j)
            worst = std::max(worst, grid_deviation(translate(z, p.N() * shift(rng)), z, p));
        worst_odd = std::max(worst_odd, worst);
        odd_ok += worst <= 1e-8;
    }
    const double ms = elapsed_ms(t0);
    bool pass = even_ok == 50 && odd_ok == 50;
    std::string detail = "even N: " + count(even_ok, 50) + " signals, all 4N elements, worst " +
                         g3(worst_even) + " <= 1e-8; odd N: " + count(odd_ok, 50) +
                         " signals, 10 real shifts each, worst " + g3(worst_odd) + " <= 1e-8";
    return {3, "ambiguity invariance", pass, detail, ms};
}

CriterionResult non_invariance(const AcceptanceOptions& opts)
{
    auto t0 = Clock::now();
    std::mt19937_64 rng(opts.seed + 4);
    std::uniform_real_distribution<double> frac(0.1, 0.9);
    const int ns[] = {8, 10, 12, 16, 20};
    int ok = 0;
    double smallest = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 100; ++i) {
        const FrogParams p(ns[i % 5], 1);
        TimeSignal z = generic_analytic_signal(p.N(), rng);
        while (std::abs(dft(z)[p.N() / 2]) < 1e-6 * dft(z).max_modulus())
            z = generic_analytic_signal(p.N(), rng);
        const double gamma = (i % p.N()) + frac(rng);
        const double dev = grid_deviation(translate(z, gamma), z, p);
        smallest = std::min(smallest, dev);
        ok += dev > 1e-3;
    }
    const double ms = elapsed_ms(t0);
    return {4, "non-integer translation witness", ok >= 99,
            count(ok, 100) + " trials with an entry changed by > 1e-3 (need >= 99), smallest max change " +
                g3(smallest),
            ms};
}

CriterionResult solver_oracles(const AcceptanceOptions& opts)
{
    auto t0 = Clock::now();
    std::mt19937_64 rng(opts.seed + 5);
    std::normal_distribution<double> g(0.0, 1.0);
    const int trials = 1000;
    auto close = [](cplx a, cplx b) { return std::abs(a - b) <= 1e-8 * std::max(1.0, std::abs(b)); };

    int three_ok = 0;
    double three_worst = 0;
    for (int t = 0; t < trials; ++t) {
        const cplx z = complex_gauss(rng), v1 = complex_gauss(rng), v2 = complex_gauss(rng),
                   v3 = complex_gauss(rng);
        try {
            cplx p = solve_three_circles(v1, v2, v3, std::abs(z + v1), std::abs(z + v2), std::abs(z + v3));
            three_worst = std::max(three_worst, std::abs(p - z) / std::max(1.0, std::abs(z)));
            three_ok += close(p, z);
        } catch (const Error&) {
        }
    }

    int real_ok = 0, real_conj = 0;
    for (int t = 0; t < trials; ++t) {
        const cplx z = complex_gauss(rng);
        const double v1 = g(rng), v2 = g(rng), m = g(rng);
        try {
            auto [a, b] = solve_two_circles_real(v1, v2, m, std::abs(z + m * v1), std::abs(z + m * v2));
            real_ok += close(a, z) || close(b, z);
            real_conj += a == std::conj(b);
        } catch (const Error&) {
        }
    }

    int scaled_ok = 0, scaled_conj = 0;
    for (int t = 0; t < trials; ++t) {
        const cplx z = complex_gauss(rng), m = complex_gauss(rng);
        const double v1 = g(rng), v2 = g(rng);
        try {
            auto [a, b] = solve_two_circles_scaled(v1, v2, m, std::abs(z + m * v1), std::abs(z + m * v2));
            scaled_ok += close(a, z) || close(b, z);
            // Dividing by m rounds, so the quotients are conjugate to a few ulps.
            const cplx qa = a / m, qb = b / m;
            scaled_conj += std::abs(qa - std::conj(qb)) <= 8 * std::numeric_limits<double>::epsilon() * std::abs(qa);
        } catch (const Error&) {
        }
    }
    const double ms = elapsed_ms(t0);
    bool pass = three_ok == trials && real_ok == trials && real_conj == trials && scaled_ok == trials &&
                scaled_conj == trials;
    std::string detail = "three-circle " + count(three_ok, trials) + " (worst " + g3(three_worst) +
                         "), two-circle real " + count(real_ok, trials) + " with exact conjugate pair " +
                         count(real_conj, trials) + ", scaled " + count(scaled_ok, trials) +
                         " with pair/m conjugate " + count(scaled_conj, trials) + ", tol 1e-8";
    return {5, "circle solver oracles", pass, detail, ms};
}

CriterionResult plan_validity(const AcceptanceOptions& opts)
{
    auto t0 = Clock::now();
    const int max_n = opts.quick ? 20 : 128;
    int ok = 0, total = 0;
    std::vector<std::string> failed;
    for (int n = 8; n <= max_n; n += 2)
        for (int l = 1; l <= n; l += 2) {
            const FrogParams p(n, l);
            if (p.r() < 5 || p.r() > 64)
                continue;
            ++total;
            try {
                const MeasurementIndexPlan plan = plan_indices(p);
                if (!plan_violation(plan) && plan.entries().size() == static_cast<std::size_t>(3 * n / 2 + 1))
                    ++ok;
                else
                    failed.push_back("(" + std::to_string(n) + "," + std::to_string(l) + ")");
            } catch (const PlanInfeasible&) {
                failed.push_back("(" + std::to_string(n) + "," + std::to_string(l) + ")");
            }
        }
    const double ms = elapsed_ms(t0);
    std::string detail = count(ok, total) + " admissible (N, L) with N <= " + std::to_string(max_n) +
                         " have a valid plan of 3N/2+1 entries";
    if (!failed.empty()) {
        detail += "; no plan for";
        for (auto& f : failed)
            detail += " " + f;
    }
    return {6, "index plan validity", failed.empty(), detail, ms};
}

CriterionResult modulus_rigidity(const AcceptanceOptions& opts)
{
    auto t0 = Clock::now();
    std::mt19937_64 rng(opts.seed + 7);
    const Config configs[] = {{12, 1}, {16, 3}, {20, 3}, {32, 5}, {64, 11}};
    int swapped_ok = 0, true_ok = 0;
    double swapped_min = std::numeric_limits<double>::infinity(), true_max = 0;
    for (int i = 0; i < 100; ++i) {
        const Config c = configs[i % 5];
        const FrogParams p(c.n, c.l);
        const int h = c.n / 2;
        TimeSignal z = generic_analytic_signal(c.n, rng);
        Spectrum s = dft(z);
        while (std::abs(std::abs(s[0]) - std::abs(s[h])) <= 1e-6 * s.max_modulus()) {
            z = generic_analytic_signal(c.n, rng);
            s = dft(z);
        }
        const auto meas = frog_measurements_time(z, p, full_grid(p));

        auto variant = [&](const std::function<cplx(int, cplx)>& f) {
            std::vector<cplx> v(c.n);
            for (int k = 0; k < c.n; ++k)
                v[k] = f(k, s[k]);
            return Spectrum(std::move(v));
        };
        const Spectrum swapped = variant([&](int k, cplx x) {
            if (k == 0)
                return std::polar(std::abs(s[h]), std::arg(x));
            if (k == h)
                return std::polar(std::abs(s[0]), std::arg(x));
            return x;
        });
        const double rs = verify_solution(swapped, meas, p);
        swapped_min = std::min(swapped_min, rs);
        swapped_ok += rs > 1e-3;

        double worst = 0;
        for (const Spectrum& v : {s, variant([](int, cplx x) { return std::conj(x); }),
                                  variant([](int, cplx x) { return -x; }),
                                  variant([](int k, cplx x) { return k % 2 ? -x : x; })})
            worst = std::max(worst, verify_solution(v, meas, p));
        true_max = std::max(true_max, worst);
        true_ok += worst < 1e-8;
    }
    const double ms = elapsed_ms(t0);
    std::string detail = "swapped moduli rejected " + count(swapped_ok, 100) + " (smallest residual " +
                         g3(swapped_min) + " > 1e-3); true, conjugate and sign variants accepted " +
                         count(true_ok, 100) + " (largest " + g3(true_max) + " < 1e-8)";
    return {7, "modulus rigidity", swapped_ok == 100 && true_ok == 100, detail, ms};
}

CriterionResult even_l_probe(const AcceptanceOptions& opts)
{
    auto t0 = Clock::now();
    std::mt19937_64 rng(opts.seed + 8);
    std::uniform_real_distribution<double> scale(-3.0, 3.0), angle(0.0, 2 * std::numbers::pi);
    const Config configs[] = {{16, 2}, {20, 4}, {24, 2}, {32, 4}};
    int infeasible = 0, true_feasible = 0;
    for (int i = 0; i < 100; ++i) {
        const Config c = configs[i % 4];
        const FrogParams p(c.n, c.l);
        const TimeSignal z = generic_analytic_signal(c.n, rng);
        const Spectrum s = dft(z);
        const auto meas = frog_measurements_time(z, p, full_grid(p));
        double u = scale(rng);
        while (std::abs(u - 1) <= 0.01 || std::abs(u + 1) <= 0.01)
            u = scale(rng);
        infeasible += even_l_infeasibility_probe(meas, p, u * s[0].real(), angle(rng));
        true_feasible += !even_l_infeasibility_probe(meas, p, s[0].real(), std::arg(s[1]));
    }
    const double ms = elapsed_ms(t0);
    std::string detail = "random alpha infeasible in " + count(infeasible, 100) +
                         " (need >= 99); true alpha and phase feasible in " + count(true_feasible, 100);
    return {8, "even-L probe", infeasible >= 99 && true_feasible == 100, detail, ms};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts)
{
    return {example_reproduction(),   end_to_end(opts),     ambiguity_invariance(opts),
            non_invariance(opts),     solver_oracles(opts), plan_validity(opts),
            modulus_rigidity(opts),   even_l_probe(opts)};
}

std::string format_result(const CriterionResult& r)
{
    return std::string(r.pass ? "PASS" : "FAIL") + "  " + std::to_string(r.id) + "  " + r.title + ": " +
           r.detail + " (" + fmt("%.1f", r.elapsed_ms) + " ms)";
}

int report_acceptance(const AcceptanceOptions& opts, std::ostream& out)
{
    int failures = 0;
    for (const auto& r : run_acceptance(opts)) {
        out << format_result(r) << '\n';
        failures += !r.pass;
    }
    out << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed") << '\n';
    return failures;
}

}  // namespace frogpr
