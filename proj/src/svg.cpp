#include "surf4/svg.hpp"

#include <cmath>
#include <numbers>

#include "surf4/format.hpp"

namespace surf4 {

namespace {

constexpr double kCanvas = 800.0;

struct Sample
{
    int index;
    Vec2 point;
};

} // namespace

PlotData build_plot(const LocalInvariants& inv, const ToleranceSet& tol)
{
    PlotData plot;
    Vec2 lo = Vec2::Zero(), hi = Vec2::Zero();
    for (int k = 0; k < kIndicatrixSamples; ++k) {
        const Vec2 p = eta(inv, std::numbers::pi * k / kIndicatrixSamples);
        plot.indicatrix.push_back(p);
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
    }
    double size = (hi - lo).maxCoeff();
    if (!(size > 0.0))
        size = 1.0;
    const Vec2 centre = 0.5 * (lo + hi);
    const double half = 0.6 * size;
    plot.view_min = centre - Vec2::Constant(half);
    plot.view_max = centre + Vec2::Constant(half);

    try {
        for (const Binormal& b : binormals(inv, tol))
            plot.binormals.push_back(b.normal);
    } catch (const GeometryError& err) {
        if (err.reason() != GeometryError::Reason::Inflection)
            throw;
    }

    const Indicatrix ind = indicatrix(inv);
    if (ind.degenerate)
        return plot;

    const double clip = 1.5 * half;
    const double jump = 0.5 * half;
    std::vector<std::vector<Sample>> runs;
    bool open_run = false;
    for (int k = 0; k < kCharacteristicSamples; ++k) {
        Vec2 p;
        try {
            p = evolvent_point(inv, std::numbers::pi * k / kCharacteristicSamples);
        } catch (const GeometryError&) {
            open_run = false;
            continue;
        }
        if (!p.allFinite() || ((p - centre).cwiseAbs().maxCoeff() > clip)) {
            open_run = false;
            continue;
        }
        if (open_run && (p - runs.back().back().point).norm() > jump)
            open_run = false;
        if (!open_run)
            runs.emplace_back();
        runs.back().push_back({k, p});
        open_run = true;
    }

    // The parametrisation has period pi: join a run ending at the last
    // sample with one starting at the first.
    bool closed = false;
    if (runs.size() >= 1 && runs.front().front().index == 0 &&
        runs.back().back().index == kCharacteristicSamples - 1 &&
        (runs.back().back().point - runs.front().front().point).norm() <= jump) {
        if (runs.size() == 1) {
            closed = true;
        } else {
            auto& last = runs.back();
            last.insert(last.end(), runs.front().begin(), runs.front().end());
            runs.erase(runs.begin());
        }
    }
    for (const auto& run : runs) {
        if (run.size() < 2)
            continue;
        std::vector<Vec2> pts;
        for (const Sample& s : run)
            pts.push_back(s.point);
        plot.characteristic.push_back(std::move(pts));
        plot.characteristic_closed.push_back(closed);
    }
    return plot;
}

std::string render_svg(const PlotData& plot)
{
    const Vec2 span = plot.view_max - plot.view_min;
    auto map = [&](const Vec2& p) {
        return Vec2((p(0) - plot.view_min(0)) / span(0) * kCanvas, (plot.view_max(1) - p(1)) / span(1) * kCanvas);
    };
    auto coord = [](double v) { return format_short(v, 6); };
    auto points = [&](const std::vector<Vec2>& pts, bool close) {
        std::string out;
        for (const Vec2& p : pts) {
            const Vec2 q = map(p);
            if (!out.empty())
                out += ' ';
            out += coord(q(0)) + ',' + coord(q(1));
        }
        if (close && !pts.empty()) {
            const Vec2 q = map(pts.front());
            out += ' ' + coord(q(0)) + ',' + coord(q(1));
        }
        return out;
    };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    svg += "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"8\" "
           "markerHeight=\"8\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#2a7d2a\"/></marker></defs>\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n";

    const Vec2 origin = map(Vec2::Zero());
    svg += "<g class=\"axes\" stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
    svg += "<line x1=\"0\" y1=\"" + coord(origin(1)) + "\" x2=\"800\" y2=\"" + coord(origin(1)) + "\"/>\n";
    svg += "<line x1=\"" + coord(origin(0)) + "\" y1=\"0\" x2=\"" + coord(origin(0)) + "\" y2=\"800\"/>\n";
    svg += "</g>\n";

    svg += "<polyline class=\"indicatrix\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" points=\"" +
           points(plot.indicatrix, true) + "\"/>\n";

    for (std::size_t b = 0; b < plot.characteristic.size(); ++b)
        svg += "<polyline class=\"characteristic\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\" points=\"" +
               points(plot.characteristic[b], plot.characteristic_closed[b]) + "\"/>\n";

    const double arrow = 0.4 * span.maxCoeff();
    for (const Vec2& n : plot.binormals) {
        const Vec2 tip = map(arrow * n);
        svg += "<line class=\"binormal\" x1=\"" + coord(origin(0)) + "\" y1=\"" + coord(origin(1)) + "\" x2=\"" +
               coord(tip(0)) + "\" y2=\"" + coord(tip(1)) +
               "\" stroke=\"#2a7d2a\" stroke-width=\"2\" marker-end=\"url(#arrow)\"/>\n";
    }

    svg += "<circle class=\"origin\" cx=\"" + coord(origin(0)) + "\" cy=\"" + coord(origin(1)) +
           "\" r=\"4\" fill=\"black\"/>\n";
    svg += "</svg>\n";
    return svg;
}

} // namespace surf4
