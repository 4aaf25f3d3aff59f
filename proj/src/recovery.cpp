#include "frogpr/recovery.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "frogpr/circles.hpp"
#include "frogpr/error.hpp"

namespace frogpr {

namespace {

// Powers of omega; omega^N = 1, so exponents reduce mod N.
class Powers {
public:
    explicit Powers(const FrogParams& p) : n_(p.N()), t_(p.N())
    {
        for (int e = 0; e < n_; ++e)
            t_[e] = p.omega().pow(e);
    }
    cplx operator()(long e) const
    {
        long r = e % n_;
        return t_[r < 0 ? r + n_ : r];
    }

private:
    int n_;
    std::vector<cplx> t_;
};

double magnitude_scale(const FrogMeasurements& meas)
{
    return std::sqrt(meas.params().N() * std::sqrt(meas.max_value()));
}

std::vector<Circle> k2_circles(const FrogMeasurements& meas, const std::array<int, 5>& i2,
                               const Powers& w, double z0, cplx z1)
{
    const double N = meas.params().N();
    std::vector<Circle> out;
    for (int m : i2) {
        cplx x = w(m);
        cplx den = z0 * (1.0 + x * x);
        out.push_back({-z1 * z1 * x / den, N * meas.magnitude(2, m) / std::abs(den)});
    }
    return out;
}

// Sequential solver state for one sign branch.
class TailSolver {
public:
    TailSolver(const FrogMeasurements& meas, const MeasurementIndexPlan& plan, const RecoveryConfig& cfg)
        : meas_(meas), plan_(plan), cfg_(cfg), w_(plan.params), N_(plan.params.N()),
          peak_(std::sqrt(meas.max_value()))
    {
    }

    std::vector<cplx> z;

    // Circle for row k, delay m, given z_0..z_{k-1}.
    Circle circle(int k, int m) const
    {
        cplx s = 0;
        for (int l = 1; l < k; ++l)
            s += z[l] * z[k - l] * w_(static_cast<long>(l) * m);
        cplx den = z[0] * (1.0 + w_(static_cast<long>(k) * m));
        return {-s / den, N_ * meas_.magnitude(k, m) / std::abs(den)};
    }

    // Plan rows 1..K; once K = N/2 the k = 0 rows, which involve z_0 and
    // |z_{N/2}|, are added.
    std::vector<IndexPair> rows_upto(int K) const
    {
        std::vector<IndexPair> e;
        for (auto [k, m] : plan_.entries())
            if ((k >= 1 && k <= K) || (k == 0 && K == N_ / 2))
                e.emplace_back(k, m);
        return e;
    }

    cplx model(int k, int m) const
    {
        if (k == 0) {
            // Relaxed form: z_{N/2} is known up to a phase.
            const int h = N_ / 2;
            return (z[0] * z[0] + std::norm(z[h]) * w_(static_cast<long>(h) * m)) /
                   static_cast<double>(N_);
        }
        cplx acc = 0;
        for (int l = 0; l <= k; ++l)
            acc += z[l] * z[k - l] * w_(static_cast<long>(l) * m);
        return acc / static_cast<double>(N_);
    }

    // Largest misfit of |y| over the rows used at stage K, relative to the peak |y|.
    double window_residual(int K) const
    {
        double worst = 0;
        for (auto [k, m] : rows_upto(K))
            worst = std::max(worst, std::abs(std::abs(model(k, m)) - meas_.magnitude(k, m)));
        return peak_ > 0 ? worst / peak_ : worst;
    }

    // Gauss-Newton on z_0, z_1 (kept real) and z_2..z_K against plan rows
    // 1..K. z_0 from the k = 0 row alone can carry a large relative error
    // when |z_0| << |z_{N/2}|, and row 2 is very sensitive to it.
    void refine(int K, int iters)
    {
        const auto rows = rows_upto(K);
        const int nr = static_cast<int>(rows.size());
        const int nu = 2 * K;
        const int h = N_ / 2;
        Eigen::MatrixXd J(nr, nu);
        Eigen::VectorXd f(nr);
        const double invN = 1.0 / N_;

        auto eval = [&](bool jac) {
            double cost = 0;
            for (int i = 0; i < nr; ++i) {
                auto [k, m] = rows[i];
                cplx y = model(k, m);
                double ay = std::abs(y);
                f[i] = ay - meas_.magnitude(k, m);
                cost += f[i] * f[i];
                if (!jac)
                    continue;
                J.row(i).setZero();
                if (ay == 0)
                    continue;
                const cplx cy = std::conj(y) / ay;
                if (k == 0) {
                    cplx g = 2.0 * w_(static_cast<long>(h) * m) * invN;
                    J(i, 0) = (cy * 2.0 * z[0] * invN).real();
                    J(i, 2 * h - 2) = (cy * g * z[h].real()).real();
                    J(i, 2 * h - 1) = (cy * g * z[h].imag()).real();
                    continue;
                }
                for (int j = 0; j <= k; ++j) {
                    cplx g = (w_(static_cast<long>(j) * m) + w_(static_cast<long>(k - j) * m)) *
                             z[k - j] * invN;
                    if (j < 2) {
                        J(i, j) = (cy * g).real();
                    } else {
                        J(i, 2 * j - 2) = (cy * g).real();
                        J(i, 2 * j - 1) = -(cy * g).imag();
                    }
                }
            }
            return cost;
        };

        auto apply = [&](const std::vector<cplx>& from, const Eigen::VectorXd& d, double t) {
            z = from;
            z[0] = from[0].real() + t * d[0];
            z[1] = from[1].real() + t * d[1];
            for (int j = 2; j <= K; ++j)
                z[j] = from[j] + t * cplx{d[2 * j - 2], d[2 * j - 1]};
        };

        double cost = eval(true);
        for (int it = 0; it < iters && cost > 0; ++it) {
            Eigen::VectorXd d = J.colPivHouseholderQr().solve(-f);
            const std::vector<cplx> saved = z;
            bool improved = false;
            double t = 1.0;
            for (int half = 0; half < 6; ++half, t *= 0.5) {
                apply(saved, d, t);
                if (eval(false) < cost) {
                    improved = true;
                    break;
                }
            }
            if (!improved) {
                z = saved;
                break;
            }
            cost = eval(true);
            if (t * d.norm() <= 1e-15 * norm_upto(K))
                break;
        }
    }

    // z_k from the three circles of row k.
    cplx solve_row(int k) const
    {
        const auto& t = plan_.row(k);
        std::vector<Circle> cs;
        for (int m : t)
            cs.push_back(circle(k, m));
        cplx best = nearest_common_point(cs);
        try {
            cplx closed = solve_three_circles(-cs[0].center, -cs[1].center, -cs[2].center,
                                              cs[0].radius, cs[1].radius, cs[2].radius);
            if (circle_residual(closed, cs) < circle_residual(best, cs))
                best = closed;
        } catch (const Error&) {
        }
        return best;
    }

    const FrogMeasurements& meas_;
    const MeasurementIndexPlan& plan_;
    const RecoveryConfig& cfg_;
    Powers w_;
    int N_;
    double peak_;

private:
    double norm_upto(int K) const
    {
        double s = 0;
        for (int j = 0; j <= K; ++j)
            s += std::norm(z[j]);
        return std::sqrt(s);
    }
};

void check_recoverable(const FrogParams& p)
{
    if (p.N() % 2 != 0)
        throw InvalidArgument("recovery needs even N (odd N is not supported)");
    if (p.L() % 2 == 0)
        throw InvalidArgument(
            "recovery needs odd L: with even L the k = 0 row cannot separate |z0| from |z_{N/2}|");
    if (p.r() < 5)
        throw InvalidArgument("recovery needs r = ceil(N/L) >= 5 (got r = " + std::to_string(p.r()) + ")");
    if (p.N() / 2 < 4)
        throw InvalidArgument("recovery needs N >= 8");
}

struct Z0Roots {
    double first;
    double second;  // NaN when there is only one candidate
};

Z0Roots z0_roots(const FrogMeasurements& meas, const MeasurementIndexPlan& plan, const RecoveryConfig& cfg)
{
    const double N = meas.params().N();
    const double y00 = meas.magnitude(0, 0);
    const double y01 = meas.magnitude(0, 1);
    const double y10 = meas.magnitude(1, 0);
    const double floor = cfg.genericity_floor * magnitude_scale(meas);
    const double nan = std::numeric_limits<double>::quiet_NaN();

    if (y01 <= cfg.feasibility_tol * y00) {
        double z0 = std::sqrt(N * y00 / 2);
        if (!(z0 > floor))
            throw DegenerateSignal("|z0| is below the genericity floor");
        return {z0, nan};
    }
    const double hi = std::sqrt(N * (y00 + y01) / 2);
    const double lo = std::sqrt(std::max(0.0, N * (y00 - y01) / 2));
    if (!(hi > floor))
        throw DegenerateSignal("|z0| is below the genericity floor");

    const Powers w(plan.params);
    auto feasible = [&](double a) {
        auto cs = k2_circles(meas, plan.i2, w, a, N * y10 / (2 * a));
        return circles_common_point(cs, cfg.feasibility_tol).has_value();
    };
    if (feasible(hi))
        return {hi, lo > floor ? lo : nan};
    if (!(lo > floor))
        throw DegenerateSignal("smaller |z0| candidate is below the genericity floor");
    if (feasible(lo))
        return {lo, hi};
    // Neither passes at this tolerance; verification decides, closest first.
    auto misfit = [&](double a) {
        auto cs = k2_circles(meas, plan.i2, w, a, N * y10 / (2 * a));
        try {
            return circle_residual(nearest_common_point(cs), cs);
        } catch (const SingularConfiguration&) {
            return std::numeric_limits<double>::infinity();
        }
    };
    if (misfit(lo) < misfit(hi))
        return {lo, hi};
    return {hi, lo};
}

Spectrum normalized(const Spectrum& s)
{
    const int N = s.size();
    const int half = N / 2;
    const double phase = std::arg(s[half]);
    std::vector<cplx> c(N, 0.0);
    for (int k = 0; k <= half; ++k)
        c[k] = s[k] * std::polar(1.0, -2.0 * k * phase / N);
    c[0] = c[0].real();
    c[half] = std::abs(s[half]);
    return Spectrum(std::move(c));
}

}  // namespace

double recover_z0(const FrogMeasurements& meas, const MeasurementIndexPlan& plan, const RecoveryConfig& cfg)
{
    return z0_roots(meas, plan, cfg).first;
}

Spectrum recover_tail(const FrogMeasurements& meas, const MeasurementIndexPlan& plan, double z0,
                      int sign, const RecoveryConfig& cfg)
{
    if (!(z0 > 0))
        throw InvalidArgument("recover_tail: z0 must be positive");
    if (sign != 1 && sign != -1)
        throw InvalidArgument("recover_tail: sign must be +1 or -1");
    const int N = plan.params.N();
    const int half = N / 2;

    TailSolver t(meas, plan, cfg);
    t.z.assign(N, 0.0);
    t.z[0] = sign * z0;
    t.z[1] = N * meas.magnitude(1, 0) / (2 * z0);
    const double floor = cfg.genericity_floor * magnitude_scale(meas);
    if (!(std::abs(t.z[1]) > floor))
        throw DegenerateSignal("|z1| is below the genericity floor");

    // Row 2: two real-center circles, then all five.
    {
        const cplx x = t.w_(plan.i2[1]);
        const double m = std::norm(t.z[1]) / t.z[0].real();
        const double v2 = 1.0 / (2.0 * x.real());
        const double d1 = std::abs(t.z[0].real() * 2.0);
        const double d2 = std::abs(t.z[0] * (1.0 + x * x));
        std::vector<Circle> cs;
        for (int q : plan.i2)
            cs.push_back(t.circle(2, q));
        cplx z2;
        try {
            z2 = solve_two_circles_real(0.5, v2, m, N * meas.magnitude(2, 0) / d1,
                                        N * meas.magnitude(2, plan.i2[1]) / d2)
                     .first;
        } catch (const NoSolution&) {
            z2 = nearest_common_point(cs);
        }
        z2 = refine_point(z2, cs);
        if (z2.imag() < 0 || (z2.imag() == 0 && z2.real() < 0))
            z2 = std::conj(z2);
        t.z[2] = z2;
        t.refine(2, 20);
    }

    // Row 3: two candidates, told apart by how well row 4 fits.
    {
        if (!(std::abs(t.z[2]) > floor))
            throw DegenerateSignal("z2 vanishes; row 3 is not determined");
        const cplx ms = t.z[1] * t.z[2] / t.z[0];
        const cplx x = t.w_(plan.i3);
        const double v2 = ((x + x * x) / (1.0 + x * x * x)).real();
        const Circle c0 = t.circle(3, 0);
        const Circle c1 = t.circle(3, plan.i3);
        std::vector<cplx> cands;
        try {
            auto [a, b] = solve_two_circles_scaled(1.0, v2, ms, c0.radius, c1.radius);
            cands = {a, b};
        } catch (const NoSolution&) {
            cands = circle_pair_points(c0, c1);
        }

        struct Branch {
            std::vector<cplx> z;
            double res;
        };
        const std::vector<cplx> base = t.z;
        std::vector<Branch> trials;
        for (cplx c : cands) {
            t.z = base;
            t.z[3] = c;
            try {
                t.z[4] = t.solve_row(4);
            } catch (const SingularConfiguration&) {
                continue;
            }
            t.refine(4, 20);
            trials.push_back({t.z, t.window_residual(4)});
        }
        if (trials.empty())
            throw InconsistentMeasurements("row 4 admits neither candidate for z3");
        // Both candidates are carried to the end: when z0 is small, row 4
        // barely constrains z4 and only the later rows tell them apart.

        for (auto& b : trials) {
            t.z = b.z;
            for (int k = 5; k <= half; ++k) {
                try {
                    t.z[k] = t.solve_row(k);
                } catch (const SingularConfiguration&) {
                    throw DegenerateSignal("row " + std::to_string(k) + " circles are concentric");
                }
                t.refine(k, 3);
            }
            t.refine(half, 40);
            b = {t.z, t.window_residual(half)};
        }
        t.z = std::min_element(trials.begin(), trials.end(),
                               [](const Branch& a, const Branch& b) { return a.res < b.res; })
                  ->z;
    }

    return Spectrum(t.z);
}

double verify_solution(const Spectrum& s, const FrogMeasurements& meas, const FrogParams& params)
{
    if (!(meas.params() == params))
        throw InvalidArgument("verify_solution: parameter mismatch");
    for (auto& c : s.coeffs())
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            return std::numeric_limits<double>::infinity();
    std::vector<IndexPair> keys;
    for (auto& [key, v] : meas.entries())
        keys.push_back(key);
    return max_relative_deviation(frog_measurements_freq(s, params, keys), meas);
}

RecoveryResult recover(const FrogMeasurements& meas, const MeasurementIndexPlan& plan, const RecoveryConfig& cfg)
{
    const FrogParams& p = plan.params;
    check_recoverable(p);
    if (!(meas.params() == p))
        throw InvalidArgument("measurement parameters do not match the plan");
    const FrogMeasurements sub = meas.restricted(plan.entries());

    const Z0Roots roots = z0_roots(sub, plan, cfg);
    std::string last_error = "verification residual above tolerance";
    double best = std::numeric_limits<double>::infinity();

    for (double z0 : {roots.first, roots.second}) {
        if (std::isnan(z0))
            continue;
        for (int sign : {1, -1}) {
            try {
                Spectrum s = normalized(recover_tail(sub, plan, z0, sign, cfg));
                double res = verify_solution(s, sub, p);
                if (res <= cfg.residual_tol)
                    return {idft(s), s, sign, res};
                best = std::min(best, res);
            } catch (const InvalidArgument&) {
                throw;
            } catch (const Error& e) {
                last_error = e.what();
            }
        }
    }
    throw InconsistentMeasurements("recovery failed: " + last_error +
                                   (std::isfinite(best) ? " (best residual " + std::to_string(best) + ")" : ""));
}

bool even_l_infeasibility_probe(const FrogMeasurements& meas, const FrogParams& params, double alpha,
                                double theta, const RecoveryConfig& cfg)
{
    if (params.L() % 2 != 0)
        throw InvalidArgument("even_l_infeasibility_probe needs even L");
    if (alpha == 0)
        throw DegenerateSignal("alpha must be nonzero");
    const double N = params.N();
    const cplx z1 = std::polar(N * meas.magnitude(1, 0) / (2 * std::abs(alpha)), theta);
    auto cs = k2_circles(meas, select_i2(params), Powers(params), alpha, z1);
    return !circles_common_point(cs, cfg.feasibility_tol).has_value();
}

}  // namespace frogpr
