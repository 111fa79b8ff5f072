#pragma once

// Searches over the whole domain: the parabolic curve Delta = 0 and the
// inflection points where Delta = 0 and kappa = 0.

#include <algorithm>
#include <array>
#include <vector>

#include "surf4/classify.hpp"

namespace surf4 {

/// Nodes per axis of the sampling grid.
inline constexpr int kDefaultResolution = 256;
inline constexpr int kMinResolution = 16;
inline constexpr int kMaxResolution = 4096;

/// Regular res x res grid of nodes spanning the surface domain.
struct Grid
{
    Domain domain;
    int res = kDefaultResolution;

    double dx() const { return (domain.xmax - domain.xmin) / (res - 1); }
    double dy() const { return (domain.ymax - domain.ymin) / (res - 1); }
    double x(int i) const { return i == res - 1 ? domain.xmax : domain.xmin + i * dx(); }
    double y(int j) const { return j == res - 1 ? domain.ymax : domain.ymin + j * dy(); }
    double cell_size() const { return std::max(dx(), dy()); }
};

/// Throws std::invalid_argument unless res lies in [16, 4096].
Grid make_grid(const Domain& domain, int res = kDefaultResolution);

struct Polyline
{
    std::vector<Vec2> points;    ///< (x, y) parameter points
    std::vector<double> residual;  ///< |Delta| at each vertex
    bool closed = false;
};

struct PolylineSet
{
    std::vector<Polyline> polylines;
    /// Cells (i, j) whose four corners all satisfy |Delta| <= tau_flat.
    std::vector<std::array<int, 2>> degenerate_cells;
    double tau_flat = 0.0;
    Grid grid;
};

/// Marching squares on Delta sampled at the grid nodes. Crossings are
/// refined by 40 bisection steps; saddle cells use the sign at the centre.
PolylineSet trace_parabolic(const SurfaceSpec& surface, int res = kDefaultResolution);

/// Number of separate runs of polyline vertices within `radius` of `p`.
int branches_near(const PolylineSet& set, const Vec2& p, double radius);

struct InflectionReport
{
    Vec2 location = Vec2::Zero();
    InflectionType type = InflectionType::Flat;
    double K = 0.0;
    double det_hessian_delta = 0.0;
    double Delta = 0.0, kappa = 0.0, scale = 0.0;
    double residual = 0.0;  ///< max(|Delta| / s^4, |kappa| / s^2)
    int iterations = 0;
};

struct InflectionOptions
{
    double seed_rel = 1e-3;
    double accept_rel = 1e-12;
    int max_iterations = 25;
    /// Minimum sigma2 / sigma1 of the Jacobian of (n0, n1, n2); below it the
    /// zero is not isolated (a curve or region of inflections) and is dropped.
    double isolation_ratio = 1e-6;
    ToleranceSet tol;
};

/// Isolated inflection points found by Newton's method on (Delta, kappa)
/// from seeds on the grid.
std::vector<InflectionReport> find_inflections(const SurfaceSpec& surface, int res = kDefaultResolution,
                                               const InflectionOptions& options = {});

} // namespace surf4
