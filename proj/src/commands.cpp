#include "frogpr/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <json.hpp>
#include <ostream>
#include <random>

#include "frogpr/acceptance.hpp"
#include "frogpr/analytic.hpp"
#include "frogpr/error.hpp"
#include "frogpr/frog.hpp"
#include "frogpr/io.hpp"

namespace frogpr {

namespace {

using Clock = std::chrono::steady_clock;

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

std::string number(double x) { return format_number(x); }

void append_object(std::string& out, const std::vector<std::pair<std::string, std::string>>& kv)
{
    if (kv.empty()) {
        out += "{}";
        return;
    }
    out += "{";
    for (std::size_t i = 0; i < kv.size(); ++i)
        out += (i ? ", " : "") + quoted(kv[i].first) + ": " + kv[i].second;
    out += "}";
}

double since(Clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

FrogParams params_or_usage(int n, int l)
{
    try {
        return FrogParams(n, l);
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
}

}  // namespace

std::string RunReport::to_json() const
{
    std::string out = "{\n  \"command\": " + quoted(command) + ",\n  \"inputs\": ";
    append_object(out, inputs);
    out += ",\n  \"outputs\": ";
    append_object(out, outputs);
    out += ",\n  \"residuals\": ";
    std::vector<std::pair<std::string, std::string>> r;
    for (auto& [k, v] : residuals)
        r.emplace_back(k, number(v));
    append_object(out, r);
    out += ",\n  \"equivalence\": ";
    if (equivalence) {
        const auto& e = *equivalence;
        out += "{\"equivalent\": " + std::string(e.equivalent ? "true" : "false") +
               ", \"rotation_sign\": " + std::to_string(e.best_element.rotation_sign) +
               ", \"translation\": " + std::to_string(e.best_element.translation) +
               ", \"reflected\": " + (e.best_element.reflected ? "true" : "false") +
               ", \"residual\": " + number(e.residual) + "}";
    } else {
        out += "null";
    }
    out += ",\n  \"elapsed_ms\": " + number(elapsed_ms) + "\n}\n";
    return out;
}

double default_tolerance(double fallback)
{
    const char* env = std::getenv("FROGPR_TOL");
    if (!env || !*env)
        return fallback;
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (*end != '\0' || !(v >= 0) || !std::isfinite(v))
        throw UsageError(std::string("FROGPR_TOL is not a nonnegative number: ") + env);
    return v;
}

RunReport cmd_generate(int n, std::uint64_t seed, const std::string& out)
{
    auto t0 = Clock::now();
    if (n < 4 || n % 2 != 0)
        throw UsageError("generate needs an even n >= 4 (got " + std::to_string(n) + ")");
    std::mt19937_64 rng(seed);
    const TimeSignal z = generic_analytic_signal(n, rng);
    const AnalyticityReport a = is_analytic(dft(z));
    if (!a.is_analytic)
        throw Error("generated signal failed the analyticity check");
    write_text_file(out, signal_to_json(z));

    RunReport r{"generate"};
    r.inputs = {{"n", std::to_string(n)}, {"seed", std::to_string(seed)}};
    r.outputs = {{"signal", quoted(out)}};
    r.residuals = {{"analyticity_violation", a.max_violation}};
    r.elapsed_ms = since(t0);
    return r;
}

RunReport cmd_measure(const std::string& signal, int l, bool plan_only, const std::string& out)
{
    auto t0 = Clock::now();
    const TimeSignal z = signal_from_json(read_text_file(signal));
    const FrogParams p = params_or_usage(z.size(), l);
    const auto indices = plan_only ? plan_indices(p).entries() : full_grid(p);
    write_text_file(out, measurements_to_json(frog_measurements_time(z, p, indices)));

    RunReport r{"measure"};
    r.inputs = {{"signal", quoted(signal)}, {"l", std::to_string(l)},
                {"plan_only", plan_only ? "true" : "false"}};
    r.outputs = {{"measurements", quoted(out)}};
    r.residuals = {{"entries", static_cast<double>(indices.size())}};
    r.elapsed_ms = since(t0);
    return r;
}

RunReport cmd_recover(const std::string& meas_path, const std::string& out, const RecoveryConfig& cfg)
{
    auto t0 = Clock::now();
    const FrogMeasurements meas = measurements_from_json(read_text_file(meas_path));
    const MeasurementIndexPlan plan = plan_indices(meas.params());
    const RecoveryResult res = recover(meas, plan, cfg);
    write_text_file(out, signal_to_json(res.signal));

    RunReport r{"recover"};
    r.inputs = {{"measurements", quoted(meas_path)},
                {"feasibility_tol", number(cfg.feasibility_tol)},
                {"residual_tol", number(cfg.residual_tol)}};
    r.outputs = {{"signal", quoted(out)}};
    r.residuals = {{"verification", res.verification_residual},
                   {"sign_branch", static_cast<double>(res.sign_branch)}};
    r.elapsed_ms = since(t0);
    return r;
}

RunReport cmd_check_equiv(const std::string& a, const std::string& b, double tol)
{
    auto t0 = Clock::now();
    const TimeSignal za = signal_from_json(read_text_file(a));
    const TimeSignal zb = signal_from_json(read_text_file(b));
    if (za.size() != zb.size())
        throw UsageError("signals have different lengths (" + std::to_string(za.size()) + " and " +
                         std::to_string(zb.size()) + ")");
    RunReport r{"check-equiv"};
    r.inputs = {{"a", quoted(a)}, {"b", quoted(b)}, {"tol", number(tol)}};
    r.equivalence = equivalent_up_to_group(za, zb, tol);
    r.residuals = {{"equivalence", r.equivalence->residual}};
    r.status = r.equivalence->equivalent ? 0 : 1;
    r.elapsed_ms = since(t0);
    return r;
}

RunReport cmd_selftest(bool quick, std::uint64_t seed, std::ostream& log)
{
    auto t0 = Clock::now();
    AcceptanceOptions opts;
    opts.quick = quick;
    opts.seed = seed;
    const int failures = report_acceptance(opts, log);

    RunReport r{"selftest"};
    r.inputs = {{"quick", quick ? "true" : "false"}, {"seed", std::to_string(seed)}};
    r.residuals = {{"failed_criteria", static_cast<double>(failures)}};
    r.status = failures ? 1 : 0;
    r.elapsed_ms = since(t0);
    return r;
}

}  // namespace frogpr
