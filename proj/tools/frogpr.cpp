#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <string>

#include "frogpr/commands.hpp"
#include "frogpr/error.hpp"

using namespace frogpr;

int main(int argc, char** argv)
{
    CLI::App app{"frogpr: FROG phase retrieval for even-length analytic signals"};
    app.require_subcommand(1);

    int n = 0, l = 0;
    std::uint64_t seed = 1;
    std::string out, input, other;
    bool plan_only = false, quick = false;
    double tol = -1;

    auto* gen = app.add_subcommand("generate", "write a random analytic signal");
    gen->add_option("--n", n, "signal length (even, >= 4)")->required();
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--out", out, "output signal file")->required();

    auto* meas = app.add_subcommand("measure", "synthesize FROG measurements of a signal");
    meas->add_option("signal", input, "signal file")->required();
    meas->add_option("--l", l, "delay stride L")->required();
    meas->add_flag("--plan-only", plan_only, "only the 3N/2+1 entries used by recovery");
    meas->add_option("--out", out, "output measurement file")->required();

    auto* rec = app.add_subcommand("recover", "recover a signal from measurements");
    rec->add_option("measurements", input, "measurement file")->required();
    rec->add_option("--out", out, "output signal file")->required();
    rec->add_option("--tol", tol, "feasibility and verification tolerance (default 1e-6)")
        ->check(CLI::NonNegativeNumber);

    auto* eq = app.add_subcommand("check-equiv", "compare two signals up to the ambiguity group");
    eq->add_option("a", input, "first signal file")->required();
    eq->add_option("b", other, "second signal file")->required();
    eq->add_option("--tol", tol, "equivalence tolerance (default 1e-6)")->check(CLI::NonNegativeNumber);

    auto* self = app.add_subcommand("selftest", "run the acceptance suite");
    self->add_flag("--quick", quick, "only N <= 20");
    self->add_option("--seed", seed, "base seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        RunReport report;
        if (*gen) {
            report = cmd_generate(n, seed, out);
        } else if (*meas) {
            report = cmd_measure(input, l, plan_only, out);
        } else if (*rec) {
            RecoveryConfig cfg;
            cfg.feasibility_tol = cfg.residual_tol = tol >= 0 ? tol : default_tolerance(cfg.residual_tol);
            report = cmd_recover(input, out, cfg);
        } else if (*eq) {
            report = cmd_check_equiv(input, other, tol >= 0 ? tol : default_tolerance(kEquivalenceTol));
        } else {
            report = cmd_selftest(quick, seed, std::cout);
        }
        std::cout << report.to_json();
        return report.status;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
