#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <sys/wait.h>

#include "frogpr/acceptance.hpp"
#include "frogpr/analytic.hpp"
#include "frogpr/commands.hpp"
#include "frogpr/error.hpp"
#include "frogpr/frog.hpp"
#include "frogpr/io.hpp"

using namespace frogpr;
namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() /
               ("frogpr_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    // Exit status of the installed tool, output discarded.
    int run(const std::string& args) const
    {
        std::string cmd = std::string(FROGPR_TOOL) + " " + args + " > " + path("stdout.txt") + " 2> " +
                          path("stderr.txt");
        int rc = std::system(cmd.c_str());
        return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenerateWritesAnalyticSignal)
{
    auto r = cmd_generate(16, 7, path("z.json"));
    auto z = signal_from_json(read_text_file(path("z.json")));
    EXPECT_EQ(z.size(), 16);
    EXPECT_LT(r.residuals.at(0).second, 1e-9);
    EXPECT_EQ(r.status, 0);
    cmd_generate(4, 0, path("small.json"));
    EXPECT_EQ(signal_from_json(read_text_file(path("small.json"))).size(), 4);
    EXPECT_THROW(cmd_generate(15, 1, path("bad.json")), UsageError);
}

TEST_F(Cli, GenerateIsDeterministic)
{
    cmd_generate(16, 7, path("a.json"));
    cmd_generate(16, 7, path("b.json"));
    EXPECT_EQ(read_text_file(path("a.json")), read_text_file(path("b.json")));
}

TEST_F(Cli, MeasureFullAndPlan)
{
    const TimeSignal ex = make_analytic(RealSignal({0.3252, -0.7549, 1.3703, -1.7115}));
    write_text_file(path("ex.json"), signal_to_json(ex));
    cmd_measure(path("ex.json"), 1, false, path("m.json"));
    auto m = measurements_from_json(read_text_file(path("m.json")));
    EXPECT_EQ(m.size(), 16u);
    EXPECT_EQ(m.value(0, 0), frog_measurements_time(ex, FrogParams(4, 1)).value(0, 0));
    EXPECT_NEAR(m.value(0, 0), 20.0614, 1e-3);

    cmd_generate(16, 3, path("z.json"));
    cmd_measure(path("z.json"), 3, true, path("p.json"));
    EXPECT_EQ(measurements_from_json(read_text_file(path("p.json"))).size(), 25u);

    write_text_file(path("zero.json"), "{\"N\": 4, \"values\": [[0, 0], [0, 0], [0, 0], [0, 0]]}");
    cmd_measure(path("zero.json"), 1, false, path("mz.json"));
    const auto zero = measurements_from_json(read_text_file(path("mz.json")));
    for (auto& [k, v] : zero.entries())
        EXPECT_EQ(v, 0.0);
}

TEST_F(Cli, RecoverRoundTrip)
{
    cmd_generate(16, 11, path("z.json"));
    cmd_measure(path("z.json"), 3, true, path("m.json"));
    auto r = cmd_recover(path("m.json"), path("rec.json"));
    EXPECT_EQ(r.status, 0);
    EXPECT_LE(r.residuals.at(0).second, 1e-6);
    auto e = cmd_check_equiv(path("z.json"), path("rec.json"));
    EXPECT_EQ(e.status, 0);
    ASSERT_TRUE(e.equivalence.has_value());
    EXPECT_TRUE(e.equivalence->equivalent);
    // Same inputs, same bytes.
    cmd_recover(path("m.json"), path("rec2.json"));
    EXPECT_EQ(read_text_file(path("rec.json")), read_text_file(path("rec2.json")));
}

TEST_F(Cli, RecoverRefusesEvenL)
{
    cmd_generate(16, 1, path("z.json"));
    cmd_measure(path("z.json"), 2, false, path("m.json"));
    try {
        cmd_recover(path("m.json"), path("rec.json"));
        FAIL() << "no exception";
    } catch (const InvalidArgument& e) {
        EXPECT_NE(std::string(e.what()).find("odd L"), std::string::npos) << e.what();
    }
}

TEST_F(Cli, RecoverRejectsTruncatedFile)
{
    cmd_generate(16, 1, path("z.json"));
    cmd_measure(path("z.json"), 3, true, path("m.json"));
    std::string text = read_text_file(path("m.json"));
    write_text_file(path("cut.json"), text.substr(0, text.size() / 2));
    EXPECT_THROW(cmd_recover(path("cut.json"), path("rec.json")), ParseError);
}

TEST_F(Cli, CheckEquiv)
{
    write_text_file(path("a.json"), "{\"N\": 4, \"values\": [[1, 2], [3, 4], [5, 6], [7, 8]]}");
    write_text_file(path("neg.json"), "{\"N\": 4, \"values\": [[-1, -2], [-3, -4], [-5, -6], [-7, -8]]}");
    auto r = cmd_check_equiv(path("a.json"), path("neg.json"));
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.equivalence->best_element.rotation_sign, -1);

    cmd_generate(8, 1, path("x.json"));
    cmd_generate(8, 2, path("y.json"));
    EXPECT_EQ(cmd_check_equiv(path("x.json"), path("y.json")).status, 1);

    cmd_generate(6, 1, path("short.json"));
    EXPECT_THROW(cmd_check_equiv(path("x.json"), path("short.json")), UsageError);
}

TEST_F(Cli, ReportJsonHasFixedShape)
{
    auto r = cmd_generate(8, 1, path("z.json"));
    std::string j = r.to_json();
    std::size_t last = 0;
    for (const char* key : {"\"command\"", "\"inputs\"", "\"outputs\"", "\"residuals\"", "\"equivalence\"",
                            "\"elapsed_ms\""}) {
        auto pos = j.find(key);
        ASSERT_NE(pos, std::string::npos) << key;
        EXPECT_GT(pos, last);
        last = pos;
    }
}

TEST_F(Cli, ToleranceFromEnvironment)
{
    ::setenv("FROGPR_TOL", "1e-4", 1);
    EXPECT_EQ(default_tolerance(1e-6), 1e-4);
    ::setenv("FROGPR_TOL", "abc", 1);
    EXPECT_THROW(default_tolerance(1e-6), UsageError);
    ::unsetenv("FROGPR_TOL");
    EXPECT_EQ(default_tolerance(1e-6), 1e-6);
}

TEST_F(Cli, ToolExitCodes)
{
    EXPECT_EQ(run("generate --n 16 --seed 7 --out " + path("z.json")), 0);
    EXPECT_EQ(run("generate --n 15 --out " + path("bad.json")), 2);
    EXPECT_EQ(run("measure " + path("z.json") + " --l 3 --plan-only --out " + path("m.json")), 0);
    EXPECT_EQ(run("recover " + path("m.json") + " --out " + path("rec.json")), 0);
    EXPECT_EQ(run("check-equiv " + path("z.json") + " " + path("rec.json")), 0);
    EXPECT_EQ(run("measure " + path("z.json") + " --l 2 --out " + path("m2.json")), 0);
    EXPECT_EQ(run("recover " + path("m2.json") + " --out " + path("rec2.json")), 1);
    write_text_file(path("junk.json"), "{\"N\": 16, \"L\": 3, \"entries\": [");
    EXPECT_EQ(run("recover " + path("junk.json") + " --out " + path("rec3.json")), 2);
    EXPECT_EQ(run("recover " + path("missing.json") + " --out " + path("rec4.json")), 2);
    EXPECT_EQ(run("frobnicate"), 2);
    EXPECT_EQ(run("recover " + path("m.json") + " --out " + path("r.json") + " --tol -1"), 2);
    EXPECT_EQ(run("generate --n 8 --seed 2 --out " + path("w.json")), 0);
    EXPECT_EQ(run("check-equiv " + path("z.json") + " " + path("w.json")), 2);
    EXPECT_EQ(run("--help"), 0);
}

TEST(Selftest, QuickSubsetRunsAndReportsEachCriterion)
{
    std::ostringstream log;
    auto r = cmd_selftest(true, 1, log);
    int lines = 0;
    std::istringstream in(log.str());
    for (std::string line; std::getline(in, line);)
        lines += line.rfind("PASS", 0) == 0 || line.rfind("FAIL", 0) == 0;
    EXPECT_EQ(lines, 8);
    EXPECT_LT(r.elapsed_ms, 5000);
}

TEST(Selftest, PerturbedMeasurementFailsEndToEnd)
{
    AcceptanceOptions opts;
    opts.quick = true;
    opts.perturbation = 1e-3;
    auto results = run_acceptance(opts);
    EXPECT_FALSE(results.at(1).pass);
    EXPECT_NE(results.at(1).detail.find("99/100"), std::string::npos) << results.at(1).detail;
    opts.perturbation = -1e-3;
    EXPECT_FALSE(run_acceptance(opts).at(1).pass);
}
