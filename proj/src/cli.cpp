#include "surf4/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <ostream>

#include "surf4/format.hpp"
#include "surf4/report.hpp"
#include "surf4/surface_file.hpp"
#include "surf4/svg.hpp"

namespace surf4 {

namespace {

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct RunConfig
{
    std::string surface_path;
    std::string at;
    std::string out_path = "-";
    int res = kDefaultResolution;
    double rel = ToleranceSet{}.rel;
};

Vec2 parse_point(const std::string& text, const Domain& domain)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw UsageError("--at expects X,Y");
    double v[2];
    const std::string parts[2] = {text.substr(0, comma), text.substr(comma + 1)};
    for (int k = 0; k < 2; ++k) {
        const char* begin = parts[k].data();
        const char* end = begin + parts[k].size();
        if (begin != end && *begin == '+')
            ++begin;
        const auto res = std::from_chars(begin, end, v[k]);
        if (res.ec != std::errc() || res.ptr != end)
            throw UsageError("--at expects X,Y, got '" + text + "'");
    }
    if (!domain.contains(v[0], v[1]))
        throw UsageError("point (" + format_real(v[0]) + ", " + format_real(v[1]) + ") lies outside the domain");
    return {v[0], v[1]};
}

void write_output(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw UsageError("cannot write '" + path + "'");
    file << text;
    if (!file)
        throw UsageError("cannot write '" + path + "'");
}

void add_surface(CLI::App* cmd, RunConfig& cfg)
{
    cmd->add_option("--surface", cfg.surface_path, "Surface description file")->required();
}

void add_res(CLI::App* cmd, RunConfig& cfg)
{
    cmd->add_option("--res", cfg.res, "Grid nodes per axis")
        ->check(CLI::Range(kMinResolution, kMaxResolution))
        ->capture_default_str();
}

void add_out(CLI::App* cmd, RunConfig& cfg)
{
    cmd->add_option("--out", cfg.out_path, "Output file ('-' for standard output)")->capture_default_str();
}

void add_rel(CLI::App* cmd, RunConfig& cfg)
{
    cmd->add_option("--rel", cfg.rel, "Relative classification tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Second-order geometry of surfaces in R^4 given in Monge form", "surf4"};
    app.require_subcommand(1);
    RunConfig cfg;

    CLI::App* analyze = app.add_subcommand("analyze", "Print every invariant at one point");
    add_surface(analyze, cfg);
    analyze->add_option("--at", cfg.at, "Point X,Y")->required();
    add_rel(analyze, cfg);

    CLI::App* grid = app.add_subcommand("grid", "Classify every node of a grid (CSV)");
    add_surface(grid, cfg);
    add_res(grid, cfg);
    add_out(grid, cfg);
    add_rel(grid, cfg);

    CLI::App* trace = app.add_subcommand("trace", "Trace the parabolic curve (CSV)");
    add_surface(trace, cfg);
    add_res(trace, cfg);
    add_out(trace, cfg);

    CLI::App* inflections = app.add_subcommand("inflections", "Locate inflection points");
    add_surface(inflections, cfg);
    add_res(inflections, cfg);

    CLI::App* plot = app.add_subcommand("plot", "Plot the normal plane at one point (SVG)");
    add_surface(plot, cfg);
    plot->add_option("--at", cfg.at, "Point X,Y")->required();
    add_out(plot, cfg);

    CLI::App* selfcheck = app.add_subcommand("selfcheck", "Run the cross-formula checks over a grid");
    add_surface(selfcheck, cfg);
    add_res(selfcheck, cfg);

    std::vector<const char*> argv;
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const SurfaceSpec surface = parse_surface_file(cfg.surface_path);
        ToleranceSet tol;
        tol.rel = cfg.rel;

        if (analyze->parsed()) {
            const Vec2 p = parse_point(cfg.at, surface.domain);
            out << format_record(analyze_record(surface, p(0), p(1), tol));
        } else if (grid->parsed()) {
            write_output(cfg.out_path, grid_csv(surface, cfg.res, tol), out);
        } else if (trace->parsed()) {
            const PolylineSet set = trace_parabolic(surface, cfg.res);
            write_output(cfg.out_path, trace_csv(set), out);
            if (cfg.out_path != "-")
                out << "polylines=" << set.polylines.size() << "\ndegenerate_cells=" << set.degenerate_cells.size()
                    << '\n';
        } else if (inflections->parsed()) {
            out << inflections_text(find_inflections(surface, cfg.res));
        } else if (plot->parsed()) {
            const Vec2 p = parse_point(cfg.at, surface.domain);
            const PlotData data = build_plot(local_invariants(surface, p(0), p(1)), tol);
            write_output(cfg.out_path, render_svg(data), out);
        } else if (selfcheck->parsed()) {
            const SelfCheckSummary sum = self_check(surface, cfg.res);
            out << "points=" << sum.points << "\nchecks=" << sum.checks << "\nfailures=" << sum.failures.size()
                << '\n';
            const std::size_t shown = std::min<std::size_t>(sum.failures.size(), 20);
            for (std::size_t k = 0; k < shown; ++k) {
                const SelfCheckFailure& f = sum.failures[k];
                out << "FAIL " << f.check << " at (" << format_real(f.x) << ", " << format_real(f.y)
                    << "): " << format_real(f.value) << " > " << format_real(f.limit) << '\n';
            }
            return sum.ok() ? kExitOk : kExitSelfCheckFailed;
        }
    } catch (const SurfaceFileError& e) {
        err << "surf4: " << cfg.surface_path << ": " << e.what() << '\n';
        return kExitSurfaceFile;
    } catch (const UsageError& e) {
        err << "surf4: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "surf4: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "surf4: numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitOk;
}

} // namespace surf4
