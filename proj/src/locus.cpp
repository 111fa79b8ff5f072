#include "surf4/locus.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace surf4 {

namespace {

struct NodeSample
{
    double delta = 0.0;
    double kappa = 0.0;
    double scale = 0.0;
};

NodeSample sample_node(const SurfaceSpec& surface, double x, double y)
{
    const SecondForm<double> s = second_form_at(surface, x, y);
    return {delta_expanded(s), normal_curvature(s), frobenius_scale(s)};
}

std::vector<NodeSample> sample_grid(const SurfaceSpec& surface, const Grid& grid)
{
    std::vector<NodeSample> nodes(static_cast<std::size_t>(grid.res) * grid.res);
    for (int j = 0; j < grid.res; ++j)
        for (int i = 0; i < grid.res; ++i)
            nodes[static_cast<std::size_t>(j) * grid.res + i] = sample_node(surface, grid.x(i), grid.y(j));
    return nodes;
}

struct Crossing
{
    Vec2 point;
    double residual = 0.0;
};

class ParabolicTracer
{
public:
    ParabolicTracer(const SurfaceSpec& surface, const Grid& grid)
        : surface_(surface)
        , grid_(grid)
        , horizontal_(static_cast<std::int64_t>(grid.res) * (grid.res - 1))
    {}

    PolylineSet run()
    {
        PolylineSet out;
        out.grid = grid_;
        const std::vector<NodeSample> nodes = sample_grid(surface_, grid_);
        delta_.resize(nodes.size());
        double max_scale = 0.0;
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            delta_[k] = nodes[k].delta;
            max_scale = std::max(max_scale, nodes[k].scale);
        }
        out.tau_flat = 1e-12 * std::pow(max_scale, 4);

        const int n = grid_.res;
        for (int j = 0; j + 1 < n; ++j)
            for (int i = 0; i + 1 < n; ++i)
                process_cell(i, j, out);

        link(out);
        return out;
    }

private:
    double node(int i, int j) const { return delta_[static_cast<std::size_t>(j) * grid_.res + i]; }

    // Edges 0..3 of cell (i, j): bottom, right, top, left.
    std::int64_t edge_id(int i, int j, int side) const
    {
        const int n = grid_.res;
        switch (side) {
        case 0: return static_cast<std::int64_t>(j) * (n - 1) + i;
        case 1: return horizontal_ + static_cast<std::int64_t>(j) * n + (i + 1);
        case 2: return static_cast<std::int64_t>(j + 1) * (n - 1) + i;
        default: return horizontal_ + static_cast<std::int64_t>(j) * n + i;
        }
    }

    void process_cell(int i, int j, PolylineSet& out)
    {
        const double v[4] = {node(i, j), node(i + 1, j), node(i + 1, j + 1), node(i, j + 1)};
        if (flat_cell(i, j, v, out.tau_flat)) {
            out.degenerate_cells.push_back({i, j});
            return;
        }
        int mask = 0;
        for (int k = 0; k < 4; ++k)
            if (v[k] > 0.0)
                mask |= 1 << k;
        if (mask == 0 || mask == 15)
            return;

        auto crosses = [&](int side) {
            const int k0 = side, k1 = (side + 1) % 4;
            return ((mask >> k0) & 1) != ((mask >> k1) & 1);
        };

        if (mask == 5 || mask == 10) {
            const double centre = delta_at(surface_, 0.5 * (grid_.x(i) + grid_.x(i + 1)),
                                                0.5 * (grid_.y(j) + grid_.y(j + 1)));
            const bool centre_in = centre > 0.0;
            // Separate the corners that the centre does not join.
            const bool cut_odd = (mask == 5) == centre_in;
            if (cut_odd) {
                add_segment(i, j, 0, 1);
                add_segment(i, j, 2, 3);
            } else {
                add_segment(i, j, 3, 0);
                add_segment(i, j, 1, 2);
            }
            return;
        }
        int sides[2], count = 0;
        for (int side = 0; side < 4; ++side)
            if (crosses(side))
                sides[count++] = side;
        add_segment(i, j, sides[0], sides[1]);
    }

    // Corners alone can all sit on a zero curve; the centre and edge
    // midpoints must vanish too.
    bool flat_cell(int i, int j, const double* v, double tau) const
    {
        for (int k = 0; k < 4; ++k)
            if (std::abs(v[k]) > tau)
                return false;
        const double x0 = grid_.x(i), x1 = grid_.x(i + 1), y0 = grid_.y(j), y1 = grid_.y(j + 1);
        const double xm = 0.5 * (x0 + x1), ym = 0.5 * (y0 + y1);
        const double probes[5][2] = {{xm, ym}, {xm, y0}, {x1, ym}, {xm, y1}, {x0, ym}};
        for (const auto& p : probes)
            if (std::abs(delta_at(surface_, p[0], p[1])) > tau)
                return false;
        return true;
    }

    void add_segment(int i, int j, int side_a, int side_b)
    {
        const std::int64_t a = edge_id(i, j, side_a);
        const std::int64_t b = edge_id(i, j, side_b);
        crossing(i, j, side_a, a);
        crossing(i, j, side_b, b);
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }

    void crossing(int i, int j, int side, std::int64_t id)
    {
        if (crossings_.count(id))
            return;
        // Corner offsets of each side's endpoints.
        static constexpr int ends[4][4] = {{0, 0, 1, 0}, {1, 0, 1, 1}, {0, 1, 1, 1}, {0, 0, 0, 1}};
        const int ia = i + ends[side][0], ja = j + ends[side][1];
        const int ib = i + ends[side][2], jb = j + ends[side][3];

        Vec2 pa(grid_.x(ia), grid_.y(ja));
        Vec2 pb(grid_.x(ib), grid_.y(jb));
        const bool inside_a = node(ia, ja) > 0.0;
        for (int it = 0; it < 40; ++it) {
            const Vec2 mid = 0.5 * (pa + pb);
            if ((delta_at(surface_, mid(0), mid(1)) > 0.0) == inside_a)
                pa = mid;
            else
                pb = mid;
        }
        const Vec2 p = 0.5 * (pa + pb);
        crossings_[id] = {p, std::abs(delta_at(surface_, p(0), p(1)))};
    }

    void link(PolylineSet& out)
    {
        std::map<std::int64_t, bool> visited;
        for (const auto& [id, _] : crossings_)
            visited[id] = false;

        auto walk = [&](std::int64_t start) {
            Polyline line;
            std::int64_t prev = -1, cur = start;
            while (true) {
                visited[cur] = true;
                line.points.push_back(crossings_[cur].point);
                line.residual.push_back(crossings_[cur].residual);
                std::int64_t next = -1;
                for (std::int64_t nb : adjacency_[cur])
                    if (nb != prev && !visited[nb]) {
                        next = nb;
                        break;
                    }
                if (next < 0) {
                    for (std::int64_t nb : adjacency_[cur])
                        if (nb == start && nb != prev && line.points.size() > 2)
                            line.closed = true;
                    break;
                }
                prev = cur;
                cur = next;
            }
            return line;
        };

        auto keep = [&](Polyline&& line) {
            // Isolated zeros of Delta collapse a ring of crossings onto a point.
            Vec2 lo = line.points.front(), hi = line.points.front();
            for (const Vec2& p : line.points) {
                lo = lo.cwiseMin(p);
                hi = hi.cwiseMax(p);
            }
            if ((hi - lo).norm() > 1e-6 * grid_.cell_size())
                out.polylines.push_back(std::move(line));
        };

        for (const auto& [id, seen] : visited)
            if (!seen && adjacency_[id].size() == 1)
                keep(walk(id));
        for (const auto& [id, seen] : visited)
            if (!seen)
                keep(walk(id));
    }

    const SurfaceSpec& surface_;
    Grid grid_;
    std::int64_t horizontal_;
    std::vector<double> delta_;
    std::unordered_map<std::int64_t, Crossing> crossings_;
    std::unordered_map<std::int64_t, std::vector<std::int64_t>> adjacency_;
};

} // namespace

Grid make_grid(const Domain& domain, int res)
{
    if (res < kMinResolution || res > kMaxResolution)
        throw std::invalid_argument("grid resolution " + std::to_string(res) + " outside [" +
                                    std::to_string(kMinResolution) + ", " + std::to_string(kMaxResolution) + "]");
    return Grid{domain, res};
}

PolylineSet trace_parabolic(const SurfaceSpec& surface, int res)
{
    return ParabolicTracer(surface, make_grid(surface.domain, res)).run();
}

int branches_near(const PolylineSet& set, const Vec2& p, double radius)
{
    int runs = 0;
    for (const Polyline& line : set.polylines) {
        const std::size_t n = line.points.size();
        std::vector<bool> near(n);
        std::size_t count = 0;
        for (std::size_t k = 0; k < n; ++k) {
            near[k] = (line.points[k] - p).norm() <= radius;
            count += near[k];
        }
        if (count == 0)
            continue;
        if (count == n) {
            ++runs;
            continue;
        }
        for (std::size_t k = 0; k < n; ++k) {
            const bool before = k > 0 ? near[k - 1] : (line.closed && near[n - 1]);
            if (near[k] && !before)
                ++runs;
        }
    }
    return runs;
}

std::vector<InflectionReport> find_inflections(const SurfaceSpec& surface, int res, const InflectionOptions& opt)
{
    const Grid grid = make_grid(surface.domain, res);
    const int n = grid.res;
    const double reach = std::hypot(grid.dx(), grid.dy());

    std::vector<InflectionReport> reports;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const FieldGradients seed = field_gradients(surface, grid.x(i), grid.y(j));
            const double s2 = seed.scale * seed.scale;
            // A zero within one cell diagonal also qualifies: the fixed
            // thresholds alone depend on how fine the grid is.
            const double slack_delta = reach * std::hypot(seed.grad_Delta[0], seed.grad_Delta[1]);
            const double slack_kappa = reach * std::hypot(seed.grad_kappa[0], seed.grad_kappa[1]);
            if (!(seed.scale > 0.0) || std::abs(seed.Delta) > opt.seed_rel * s2 * s2 + slack_delta ||
                std::abs(seed.kappa) > opt.seed_rel * s2 + slack_kappa)
                continue;

            Vec2 p(grid.x(i), grid.y(j));
            bool accepted = false;
            FieldGradients fg;
            int it = 0;
            for (;; ++it) {
                fg = field_gradients(surface, p(0), p(1));
                const double sc = fg.scale;
                if (sc == 0.0)
                    break;
                const double sc2 = sc * sc;
                const double rd = std::abs(fg.Delta) / (sc2 * sc2);
                const double rk = std::abs(fg.kappa) / sc2;
                if (rd <= opt.accept_rel && rk <= opt.accept_rel) {
                    accepted = true;
                    break;
                }
                if (it == opt.max_iterations)
                    break;
                Mat2 jac;
                jac << fg.grad_Delta[0] / (sc2 * sc2), fg.grad_Delta[1] / (sc2 * sc2),
                       fg.grad_kappa[0] / sc2, fg.grad_kappa[1] / sc2;
                // Delta is singular wherever kappa also vanishes, so its zero
                // is double there: a doubled step keeps the convergence quadratic.
                const Vec2 rhs(-2.0 * fg.Delta / (sc2 * sc2), -fg.kappa / sc2);
                const Vec2 step = jac.completeOrthogonalDecomposition().solve(rhs);
                if (!step.allFinite())
                    break;
                p += step;
                if (!surface.domain.contains(p(0), p(1)))
                    break;
            }
            if (!accepted)
                continue;

            Eigen::Matrix<double, 3, 2> dn;
            for (int r = 0; r < 3; ++r)
                dn.row(r) << fg.nq[r].fx(), fg.nq[r].fy();
            const Eigen::JacobiSVD<Eigen::Matrix<double, 3, 2>> svd(dn);
            const auto sv = svd.singularValues();
            if (!(sv(0) > 0.0) || sv(1) <= opt.isolation_ratio * sv(0))
                continue;

            const bool duplicate = std::any_of(reports.begin(), reports.end(), [&](const InflectionReport& r) {
                return (r.location - p).norm() <= grid.cell_size();
            });
            if (duplicate)
                continue;

            InflectionReport rep;
            rep.location = p;
            rep.K = fg.K;
            rep.Delta = fg.Delta;
            rep.kappa = fg.kappa;
            rep.scale = fg.scale;
            const double sc2 = fg.scale * fg.scale;
            rep.residual = std::max(std::abs(fg.Delta) / (sc2 * sc2), std::abs(fg.kappa) / sc2);
            rep.iterations = it;
            const double tau_k = opt.tol.rel * sc2;
            rep.type = fg.K < -tau_k ? InflectionType::Real : fg.K > tau_k ? InflectionType::Imaginary
                                                                           : InflectionType::Flat;
            rep.det_hessian_delta = hessian_of_delta(surface, p(0), p(1)).determinant();
            reports.push_back(rep);
        }
    }
    return reports;
}

} // namespace surf4
