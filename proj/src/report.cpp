#include "surf4/report.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "surf4/format.hpp"

namespace surf4 {

namespace {

std::string join_directions(const std::vector<Vec2>& dirs)
{
    if (dirs.empty())
        return "none";
    std::string out;
    for (const Vec2& d : dirs) {
        if (!out.empty())
            out += ';';
        out += format_real(d(0)) + ' ' + format_real(d(1));
    }
    return out;
}

std::string matrix_entries(const Mat3& m)
{
    std::string out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (!out.empty())
                out += ' ';
            out += format_real(m(i, j));
        }
    return out;
}

std::string flag(bool v) { return v ? "true" : "false"; }

} // namespace

Record analyze_record(const SurfaceSpec& surface, double x, double y, const ToleranceSet& tol)
{
    const LocalInvariants inv = local_invariants(surface, x, y);
    const PointClassification pc = classify_point(inv, tol);
    const double brioschi = brioschi_curvature_from_jets(inv.phi_jet, inv.psi_jet);

    Record r;
    auto put = [&](const char* key, double v) { r.emplace_back(key, format_real(v)); };
    put("x", inv.x);
    put("y", inv.y);
    put("E", inv.E);
    put("F", inv.F);
    put("G", inv.G);
    put("W", inv.W);
    put("Ehat", inv.Ehat);
    put("Fhat", inv.Fhat);
    put("Ghat", inv.Ghat);
    put("a", inv.a);
    put("b", inv.b);
    put("c", inv.c);
    put("e", inv.e);
    put("f", inv.f);
    put("g", inv.g);
    put("K", inv.K);
    put("K_hessian", inv.K_hessian);
    put("K_brioschi", brioschi);
    put("kappa", inv.kappa);
    put("kappa_minors", inv.kappa_minors);
    put("H3", inv.H[0]);
    put("H4", inv.H[1]);
    put("Delta", inv.Delta);
    put("Delta_det", inv.Delta_det);
    put("nq0", inv.nq0);
    put("nq1", inv.nq1);
    put("nq2", inv.nq2);
    r.emplace_back("class", pc.label());
    r.emplace_back("inflection_type", pc.inflection_type ? std::string(to_string(*pc.inflection_type)) : "none");
    r.emplace_back("circle", flag(pc.is_circle));
    r.emplace_back("minimal", flag(pc.is_minimal));
    r.emplace_back("umbilic", flag(pc.is_umbilic));
    r.emplace_back("rankM", std::to_string(pc.rank_m));

    try {
        const std::vector<Binormal> bns = binormals(inv, tol);
        std::vector<Vec2> asym, normals;
        for (const Binormal& b : bns) {
            asym.push_back(b.asymptotic);
            normals.push_back(b.normal);
        }
        r.emplace_back("asymptotic", join_directions(asym));
        r.emplace_back("binormal", join_directions(normals));
    } catch (const GeometryError& err) {
        if (err.reason() != GeometryError::Reason::Inflection)
            throw;
        r.emplace_back("asymptotic", "all");
        r.emplace_back("binormal", "all");
    }

    const Indicatrix ind = indicatrix(inv);
    put("wintgen_gap", wintgen_gap(inv));
    put("semi_axis_major", ind.semi_axis_major);
    put("semi_axis_minor", ind.semi_axis_minor);
    r.emplace_back("indicatrix_degenerate", flag(ind.degenerate));
    if (ind.degenerate) {
        r.emplace_back("indicatrix_conic", "none");
        r.emplace_back("indicatrix_kind", "degenerate");
        r.emplace_back("characteristic_conic", "none");
        r.emplace_back("characteristic_kind", "degenerate");
    } else {
        const Conic q = indicatrix_conic(ind);
        const Conic ch = characteristic_conic(ind);
        r.emplace_back("indicatrix_conic", matrix_entries(q.m));
        r.emplace_back("indicatrix_kind", std::string(to_string(q.kind)));
        r.emplace_back("characteristic_conic", matrix_entries(ch.m));
        r.emplace_back("characteristic_kind", std::string(to_string(ch.kind)));
    }
    return r;
}

std::string format_record(const Record& record)
{
    std::string out;
    for (const auto& [key, value] : record)
        out += key + '=' + value + '\n';
    return out;
}

std::string grid_csv(const SurfaceSpec& surface, int res, const ToleranceSet& tol)
{
    const Grid grid = make_grid(surface.domain, res);
    LocalOptions opt;
    opt.strict = false;
    std::string out = "x,y,K,kappa,Delta,class\n";
    for (int j = 0; j < grid.res; ++j)
        for (int i = 0; i < grid.res; ++i) {
            const LocalInvariants inv = local_invariants(surface, grid.x(i), grid.y(j), opt);
            const PointClassification pc = classify_point(inv, tol);
            out += format_real(inv.x) + ',' + format_real(inv.y) + ',' + format_real(inv.K) + ',' +
                   format_real(inv.kappa) + ',' + format_real(inv.Delta) + ',' + pc.label() + '\n';
        }
    return out;
}

std::string trace_csv(const PolylineSet& set)
{
    std::string out = "polyline_id,vertex_id,x,y,delta_residual\n";
    for (std::size_t p = 0; p < set.polylines.size(); ++p) {
        const Polyline& line = set.polylines[p];
        for (std::size_t v = 0; v < line.points.size(); ++v)
            out += std::to_string(p) + ',' + std::to_string(v) + ',' + format_real(line.points[v](0)) + ',' +
                   format_real(line.points[v](1)) + ',' + format_real(line.residual[v]) + '\n';
    }
    return out;
}

std::string inflections_text(const std::vector<InflectionReport>& reports)
{
    std::string out;
    for (const InflectionReport& r : reports)
        out += format_real(r.location(0)) + ' ' + format_real(r.location(1)) + ' ' +
               std::string(to_string(r.type)) + ' ' + format_real(r.K) + ' ' + format_real(r.det_hessian_delta) +
               ' ' + format_real(r.residual) + '\n';
    return out;
}

SelfCheckSummary self_check(const SurfaceSpec& surface, int res)
{
    const Grid grid = make_grid(surface.domain, res);
    LocalOptions opt;
    opt.strict = false;
    SelfCheckSummary sum;

    for (int j = 0; j < grid.res; ++j) {
        for (int i = 0; i < grid.res; ++i) {
            const LocalInvariants inv = local_invariants(surface, grid.x(i), grid.y(j), opt);
            ++sum.points;
            const double s = inv.scale();
            const double s2 = s * s;

            auto check = [&](const char* name, double value, double limit) {
                ++sum.checks;
                if (!(value <= limit))
                    sum.failures.push_back({inv.x, inv.y, name, value, limit});
            };

            const double brioschi = brioschi_curvature_from_jets(inv.phi_jet, inv.psi_jet);
            check("K_hessian", relative_difference(inv.K, inv.K_hessian, s2), 1e-8);
            check("K_brioschi", relative_difference(inv.K, brioschi, s2), 1e-8);
            check("kappa_minors", relative_difference(inv.kappa, inv.kappa_minors, s2), 1e-9);
            check("Delta_det", relative_difference(inv.Delta, inv.Delta_det, s2 * s2), 1e-9);
            check("normal_gram", relative_difference(inv.Ehat * inv.Ghat - inv.Fhat * inv.Fhat, inv.W, inv.W), 1e-10);
            check("wintgen", -wintgen_gap(inv), 1e-10 * std::max(1.0, s2));

            if (std::abs(inv.kappa) > 1e-3) {
                const double area = indicatrix_polygon_area(inv);
                check("area_law", relative_difference(area, 0.5 * std::numbers::pi * inv.kappa, 0.0), 1e-3);
            }

            const Indicatrix ind = indicatrix(inv);
            if (!ind.degenerate && std::abs(inv.kappa) > 1e-3 * s2 && std::abs(inv.Delta) > 1e-6 * s2 * s2) {
                const Conic ch = characteristic_conic(ind);
                const ConicKind expected = inv.Delta > 0.0 ? ConicKind::Ellipse : ConicKind::Hyperbola;
                check("kommerell", ch.kind == expected ? 0.0 : 1.0, 0.0);
            }
        }
    }
    return sum;
}

} // namespace surf4
