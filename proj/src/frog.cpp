#include "frogpr/frog.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "frogpr/error.hpp"

namespace frogpr {

namespace {

long mod(long a, long n)
{
    long r = a % n;
    return r < 0 ? r + n : r;
}

void check_length(int n, const FrogParams& p)
{
    if (n != p.N())
        throw InvalidArgument("signal length does not match FROG parameters");
}

}  // namespace

bool UnitRoot::pow_is_one(long e) const
{
    return mod(e * num, den) == 0;
}

bool UnitRoot::pow_is_minus_one(long e) const
{
    return mod(2 * e * num, 2 * den) == den;
}

FrogParams::FrogParams(int n, int l) : n_(n), l_(l)
{
    if (n < 2)
        throw InvalidArgument("N must be at least 2");
    if (l < 1 || l > n)
        throw InvalidArgument("L must lie in [1, N]");
    r_ = (n + l - 1) / l;
}

FrogMeasurements::FrogMeasurements(FrogParams params) : params_(params) {}

void FrogMeasurements::set(int k, int m, double value)
{
    if (k < 0 || k >= params_.N() || m < 0 || m >= params_.r())
        throw InvalidArgument("measurement index (" + std::to_string(k) + ", " +
                              std::to_string(m) + ") out of range");
    if (!(value >= 0) || !std::isfinite(value))
        throw InvalidArgument("measurement values must be finite and nonnegative");
    values_[{k, m}] = value;
}

double FrogMeasurements::value(int k, int m) const
{
    auto it = values_.find({k, m});
    if (it == values_.end())
        throw InvalidArgument("missing measurement (" + std::to_string(k) + ", " +
                              std::to_string(m) + ")");
    return it->second;
}

double FrogMeasurements::magnitude(int k, int m) const
{
    return std::sqrt(value(k, m));
}

double FrogMeasurements::max_value() const
{
    double m = 0;
    for (auto& [key, v] : values_)
        m = std::max(m, v);
    return m;
}

FrogMeasurements FrogMeasurements::restricted(const std::vector<IndexPair>& indices) const
{
    FrogMeasurements out(params_);
    for (auto [k, m] : indices)
        out.set(k, m, value(k, m));
    return out;
}

std::vector<IndexPair> full_grid(const FrogParams& params)
{
    std::vector<IndexPair> g;
    g.reserve(static_cast<std::size_t>(params.N()) * params.r());
    for (int k = 0; k < params.N(); ++k)
        for (int m = 0; m < params.r(); ++m)
            g.emplace_back(k, m);
    return g;
}

cplx frog_value_time(const TimeSignal& z, const FrogParams& params, int k, int m)
{
    check_length(z.size(), params);
    const int N = params.N();
    const long shift = static_cast<long>(m) * params.L();
    cplx acc = 0;
    for (int n = 0; n < N; ++n)
        acc += z[n] * z[n + shift] * unit_turn(-static_cast<long>(k) * n, N);
    return acc;
}

cplx frog_value_freq(const Spectrum& s, const FrogParams& params, int k, int m)
{
    check_length(s.size(), params);
    const int N = params.N();
    const UnitRoot w = params.omega();
    cplx acc = 0;
    for (int l = 0; l < N; ++l) {
        if (s[l] == 0.0 || s[k - l] == 0.0)
            continue;
        acc += s[l] * s[k - l] * w.pow(static_cast<long>(l) * m);
    }
    return acc / static_cast<double>(N);
}

FrogMeasurements frog_measurements_time(const TimeSignal& z, const FrogParams& params,
                                        const std::optional<std::vector<IndexPair>>& indices)
{
    FrogMeasurements out(params);
    for (auto [k, m] : indices ? *indices : full_grid(params))
        out.set(k, m, std::norm(frog_value_time(z, params, k, m)));
    return out;
}

FrogMeasurements frog_measurements_freq(const Spectrum& s, const FrogParams& params,
                                        const std::optional<std::vector<IndexPair>>& indices)
{
    FrogMeasurements out(params);
    for (auto [k, m] : indices ? *indices : full_grid(params))
        out.set(k, m, std::norm(frog_value_freq(s, params, k, m)));
    return out;
}

double max_relative_deviation(const FrogMeasurements& a, const FrogMeasurements& b)
{
    const double floor = kRelativeFloor * b.max_value();
    double worst = 0;
    for (auto& [key, vb] : b.entries()) {
        double va = a.value(key.first, key.second);
        double d = std::abs(va - vb);
        if (d == 0)
            continue;
        worst = std::max(worst, d / std::max(vb, floor));
    }
    return worst;
}

ConstraintChecks constraint_checks(const UnitRoot& w, long m)
{
    ConstraintChecks c{};
    c.quadratic_pole_free = !w.pow_is_minus_one(2 * m);
    // w^m / (1 + w^{2m}) = 1/2  <=>  (w^m - 1)^2 = 0
    c.quadratic_ratio_ok = c.quadratic_pole_free && !w.pow_is_one(m);
    // w^m + w^{2m} = 1 + w^{3m}  <=>  (1 - w^m)(1 - w^{2m}) = 0
    c.cubic_ratio_ok = !w.pow_is_minus_one(3 * m) && !w.pow_is_one(m) && !w.pow_is_minus_one(m);
    return c;
}

ConstraintChecks constraint_checks(int r, long m)
{
    if (r < 1)
        throw InvalidArgument("constraint_checks: r must be positive");
    return constraint_checks(UnitRoot{1, r}, m);
}

std::vector<IndexPair> MeasurementIndexPlan::entries() const
{
    std::set<IndexPair> s{{0, 0}, {0, 1}, {1, 0}, {3, 0}};
    for (int m : i2)
        s.insert({2, m});
    s.insert({3, i3});
    for (int k = 4; k <= params.N() / 2; ++k)
        for (int m : row(k))
            s.insert({k, m});
    return {s.begin(), s.end()};
}

std::array<int, 5> select_i2(const FrogParams& params)
{
    const UnitRoot w = params.omega();
    const int r = params.r();
    std::array<int, 5> out{0, -1, -1, -1, -1};
    int q = 1;
    for (int m = 1; m < r && q == 1; ++m)
        if (constraint_checks(w, m).quadratic_ratio_ok)
            out[q++] = m;
    for (int m = 1; m < r && q < 5; ++m)
        if (m != out[1] && constraint_checks(w, m).quadratic_pole_free)
            out[q++] = m;
    if (q < 5)
        throw PlanInfeasible("no five admissible delays for row 2 (r = " + std::to_string(r) + ")");
    return out;
}

MeasurementIndexPlan plan_indices(const FrogParams& params)
{
    const int N = params.N();
    const int r = params.r();
    if (N % 2 != 0 || N / 2 < 4)
        throw InvalidArgument("index plan needs even N with N/2 >= 4");
    if (r < 5)
        throw InvalidArgument("index plan needs r = ceil(N/L) >= 5");
    const UnitRoot w = params.omega();

    MeasurementIndexPlan plan{params, select_i2(params), -1, {}};

    for (int m = 1; m < r; ++m) {
        if (constraint_checks(w, m).cubic_ratio_ok) {
            plan.i3 = m;
            break;
        }
    }
    if (plan.i3 < 0)
        throw PlanInfeasible("no admissible delay for row 3");

    for (int k = 4; k <= N / 2; ++k) {
        std::vector<int> ok;
        for (int m = 1; m < r; ++m)
            if (!w.pow_is_minus_one(static_cast<long>(k) * m))
                ok.push_back(m);
        bool found = false;
        for (std::size_t a = 0; a < ok.size() && !found; ++a) {
            for (std::size_t b = a + 1; b < ok.size() && !found; ++b) {
                // Delays with omega^{a+b} = 1 give the same circle center.
                if (!w.pow_is_one(ok[a] + ok[b])) {
                    plan.ik.push_back({0, ok[a], ok[b]});
                    found = true;
                }
            }
        }
        if (!found)
            throw PlanInfeasible("no admissible delay triple for row " + std::to_string(k) +
                                 " (N = " + std::to_string(N) + ", L = " +
                                 std::to_string(params.L()) + ")");
    }
    return plan;
}

std::optional<std::string> plan_violation(const MeasurementIndexPlan& plan)
{
    const FrogParams& p = plan.params;
    const UnitRoot w = p.omega();
    const int N = p.N();
    const int r = p.r();
    auto in_range = [r](int m) { return m >= 0 && m < r; };

    if (plan.i2[0] != 0)
        return "first row-2 delay must be 0";
    for (int m : plan.i2) {
        if (!in_range(m))
            return "row-2 delay out of range";
        if (!constraint_checks(w, m).quadratic_pole_free)
            return "row-2 delay " + std::to_string(m) + " hits 1 + w^{2m} = 0";
    }
    if (!constraint_checks(w, plan.i2[1]).quadratic_ratio_ok)
        return "second row-2 delay gives ratio 1/2";
    if (plan.i3 < 1 || plan.i3 >= r || !constraint_checks(w, plan.i3).cubic_ratio_ok)
        return "row-3 delay violates the cubic ratio constraint";
    if (static_cast<int>(plan.ik.size()) != N / 2 - 3)
        return "wrong number of rows";
    for (int k = 4; k <= N / 2; ++k) {
        const auto& t = plan.row(k);
        if (t[0] != 0)
            return "first delay of row " + std::to_string(k) + " must be 0";
        for (int m : t) {
            if (!in_range(m))
                return "delay out of range in row " + std::to_string(k);
            if (w.pow_is_minus_one(static_cast<long>(k) * m))
                return "row " + std::to_string(k) + " hits 1 + w^{km} = 0";
        }
        if (t[1] == t[2] || t[1] == 0 || t[2] == 0)
            return "row " + std::to_string(k) + " delays not distinct";
        if (w.pow_is_one(t[1] + t[2]))
            return "row " + std::to_string(k) + " has conjugate delays";
    }
    if (static_cast<int>(plan.entries().size()) != 3 * N / 2 + 1)
        return "measurement count differs from 3N/2 + 1";
    return std::nullopt;
}

}  // namespace frogpr
