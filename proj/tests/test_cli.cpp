#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "surf4/cli.hpp"
#include "surf4/surface_file.hpp"

namespace surf4 {
namespace {

namespace fs = std::filesystem;

struct CliResult
{
    int code;
    std::string out, err;
};

CliResult run(std::vector<std::string> args)
{
    args.insert(args.begin(), "surf4");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string read_file(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class CliTest : public ::testing::Test
{
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() /
               ("surf4_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }

    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text)
    {
        const fs::path p = dir_ / name;
        std::ofstream(p, std::ios::binary) << text;
        return p.string();
    }

    fs::path dir_;
};

const char* kSurfaceB = "# circle point at the origin\nphi = x^2 - y^2\npsi = 2*x*y\ndomain = -0.5 0.5 -0.5 0.5\n";

TEST_F(CliTest, AnalyzeSurfaceB)
{
    const CliResult r = run({"analyze", "--surface", write("b.surf", kSurfaceB), "--at", "0,0"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("\nK=-8\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("\nkappa=8\n"), std::string::npos);
    EXPECT_NE(r.out.find("\nDelta=16\n"), std::string::npos);
    EXPECT_NE(r.out.find("\nclass=elliptic\n"), std::string::npos);
    EXPECT_NE(r.out.find("\numbilic=true\n"), std::string::npos);
    EXPECT_NE(r.out.find("\ncharacteristic_kind=ellipse\n"), std::string::npos);
    EXPECT_EQ(r.out.rfind("x=0\ny=0\n", 0), 0u);
}

TEST_F(CliTest, GridRowCount)
{
    const CliResult r = run({"grid", "--surface", write("b.surf", kSurfaceB), "--res", "20"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1 + 20 * 20);
    EXPECT_EQ(r.out.rfind("x,y,K,kappa,Delta,class\n", 0), 0u);
}

TEST_F(CliTest, GridToFileMatchesStdout)
{
    const std::string surf = write("b.surf", kSurfaceB);
    const std::string out = (dir_ / "grid.csv").string();
    const CliResult a = run({"grid", "--surface", surf, "--res", "16", "--out", out});
    const CliResult b = run({"grid", "--surface", surf, "--res", "16"});
    ASSERT_EQ(a.code, kExitOk);
    EXPECT_EQ(read_file(out), b.out);
}

TEST_F(CliTest, TraceAndInflections)
{
    const std::string surf = write("h.surf", "phi = x^2 - y^2\npsi = x^3/3 + x*y^2\ndomain = -0.5 0.5 -0.5 0.5\n");
    const CliResult t = run({"trace", "--surface", surf, "--res", "64", "--out", (dir_ / "t.csv").string()});
    ASSERT_EQ(t.code, kExitOk) << t.err;
    EXPECT_NE(t.out.find("polylines="), std::string::npos);
    EXPECT_EQ(read_file(dir_ / "t.csv").rfind("polyline_id,vertex_id,x,y,delta_residual\n", 0), 0u);
    const CliResult i = run({"inflections", "--surface", surf, "--res", "64"});
    ASSERT_EQ(i.code, kExitOk) << i.err;
    EXPECT_EQ(std::count(i.out.begin(), i.out.end(), '\n'), 1);
    EXPECT_NE(i.out.find(" real "), std::string::npos) << i.out;
}

TEST_F(CliTest, PlotWritesSvg)
{
    const std::string out = (dir_ / "p.svg").string();
    const CliResult r = run({"plot", "--surface", write("b.surf", kSurfaceB), "--at", "0,0", "--out", out});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const std::string svg = read_file(out);
    EXPECT_NE(svg.find("<svg"), std::string::npos);
    EXPECT_NE(svg.find("class=\"characteristic\""), std::string::npos);
}

TEST_F(CliTest, SelfCheckPasses)
{
    const CliResult r = run({"selfcheck", "--surface", write("b.surf", kSurfaceB), "--res", "16"});
    EXPECT_EQ(r.code, kExitOk) << r.out;
    EXPECT_NE(r.out.find("failures=0\n"), std::string::npos);
}

TEST_F(CliTest, UsageErrors)
{
    const std::string surf = write("b.surf", kSurfaceB);
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"bogus"}).code, kExitUsage);
    EXPECT_EQ(run({"grid", "--surface", surf, "--res", "8"}).code, kExitUsage);
    EXPECT_EQ(run({"analyze", "--surface", surf, "--at", "2,0"}).code, kExitUsage);
    EXPECT_EQ(run({"analyze", "--surface", surf, "--at", "zero"}).code, kExitUsage);
    EXPECT_EQ(run({"analyze", "--surface", surf}).code, kExitUsage);
    EXPECT_EQ(run({"grid", "--surface", surf, "--res", "16", "--out", (dir_ / "no" / "x.csv").string()}).code,
              kExitUsage);
    EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST_F(CliTest, SurfaceFileErrors)
{
    const CliResult missing = run({"analyze", "--surface", (dir_ / "absent.surf").string(), "--at", "0,0"});
    EXPECT_EQ(missing.code, kExitSurfaceFile);

    const CliResult bad = run({"analyze", "--surface", write("bad.surf", "phi = x +\npsi = y\n"), "--at", "0,0"});
    EXPECT_EQ(bad.code, kExitSurfaceFile);
    EXPECT_NE(bad.err.find("line 1"), std::string::npos) << bad.err;

    const CliResult nopsi = run({"analyze", "--surface", write("n.surf", "phi = x\n"), "--at", "0,0"});
    EXPECT_EQ(nopsi.code, kExitSurfaceFile);
    EXPECT_NE(nopsi.err.find("psi"), std::string::npos);
}

TEST_F(CliTest, NumericalFailure)
{
    const CliResult r = run({"grid", "--surface", write("l.surf", "phi = log(x)\npsi = y\ndomain = -1 1 -1 1\n"), "--res", "16"});
    EXPECT_EQ(r.code, kExitNumerical);
    EXPECT_NE(r.err.find("at (-1, -1)"), std::string::npos) << r.err;
}

TEST_F(CliTest, RepeatedRunsAreIdentical)
{
    const std::string surf = write("g.surf", "phi = 1.5*x^2 + 0.5*y^2 + sin(x*y)\npsi = 2*x*y\ndomain = -1 1 -1 1\n");
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"grid", "--surface", surf, "--res", "32"},
          std::vector<std::string>{"plot", "--surface", surf, "--at", "0.1,-0.2"},
          std::vector<std::string>{"trace", "--surface", surf, "--res", "32"}}) {
        const CliResult a = run(args), b = run(args);
        EXPECT_EQ(a.code, kExitOk);
        EXPECT_EQ(a.out, b.out);
    }
}

TEST_F(CliTest, Goldens)
{
    const fs::path data = SURF4_TEST_DATA;
    const CliResult grid = run({"grid", "--surface", (data / "surface_b.surf").string(), "--res", "16"});
    ASSERT_EQ(grid.code, kExitOk) << grid.err;
    EXPECT_EQ(grid.out, read_file(data / "surface_b_grid16.csv"));
    const CliResult plot = run({"plot", "--surface", (data / "surface_g.surf").string(), "--at", "0,0"});
    ASSERT_EQ(plot.code, kExitOk) << plot.err;
    EXPECT_EQ(plot.out, read_file(data / "surface_g_plot.svg"));
}

TEST(SurfaceFileTest, Parsing)
{
    const SurfaceSpec s = parse_surface_text("phi = x^2  # comment\n\n  psi=y\ndomain = -1 2 -3 4\n");
    EXPECT_EQ(s.domain.xmin, -1.0);
    EXPECT_EQ(s.domain.ymax, 4.0);
    EXPECT_EQ(evaluate(s.phi, 3, 0), 9.0);

    auto line_of = [](const std::string& text) {
        try {
            parse_surface_text(text);
        } catch (const SurfaceFileError& e) {
            return e.line();
        }
        return -1;
    };
    EXPECT_EQ(line_of("phi = x\npsi = y\npsi = x\n"), 3);
    EXPECT_EQ(line_of("phi = x\nrho = y\n"), 2);
    EXPECT_EQ(line_of("phi = x\npsi y\n"), 2);
    EXPECT_EQ(line_of("phi = x\npsi = y\ndomain = 1 0 0 1\n"), 3);
    EXPECT_EQ(line_of("phi = x\npsi = y\ndomain = 0 1 0\n"), 3);
    EXPECT_EQ(line_of("psi = y\n"), 0);
}

} // namespace
} // namespace surf4
