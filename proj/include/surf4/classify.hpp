#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "surf4/conics.hpp"

namespace surf4 {

enum class PointKind { Elliptic, Parabolic, Hyperbolic, Inflection };
enum class InflectionType { Real, Flat, Imaginary };

std::string_view to_string(PointKind kind);
std::string_view to_string(InflectionType type);

/// Thresholds are relative to s = |[[a,b,c],[e,f,g]]|_F: Delta is compared
/// against rel * s^4, kappa and K against rel * s^2.
struct ToleranceSet
{
    double rel = 1e-8;
    double rank_ratio = 1e-8;  ///< sigma2 / sigma1 below which rank M <= 1
    double shape = 1e-8;       ///< circle / minimal tests, relative to s
};

struct PointClassification
{
    PointKind kind = PointKind::Elliptic;
    std::optional<InflectionType> inflection_type;
    bool is_circle = false;
    bool is_minimal = false;
    bool is_umbilic = false;
    int rank_m = 0;
    double Delta = 0.0, kappa = 0.0, K = 0.0;
    double scale = 0.0;
    double tau_delta = 0.0, tau_kappa = 0.0;
    ToleranceSet tol;

    /// "elliptic", "hyperbolic", "parabolic", "inflection-real", ...,
    /// or "degenerate" for a planar point (rank M = 0).
    std::string label() const;
};

/// Numerical rank (0, 1 or 2) of the 2x3 coefficient matrix.
int coefficient_rank(const LocalInvariants& inv, double rank_ratio = 1e-8);

PointClassification classify_point(const LocalInvariants& inv, const ToleranceSet& tol = {});

/// Unit tangent directions in the (e1, e2) frame where N vanishes.
/// Throws GeometryError(Inflection) when N is identically zero.
std::vector<Vec2> asymptotic_directions(const LocalInvariants& inv, const ToleranceSet& tol = {});

struct Binormal
{
    Vec2 asymptotic;  ///< tangent direction in (e1, e2)
    Vec2 normal;      ///< binormal in (e3, e4)
    /// The indicatrix is a segment; the binormal comes from its endpoint
    /// rather than from a genuine tangent line.
    bool degenerate_indicatrix = false;
};

/// One binormal per asymptotic direction; empty at elliptic points.
std::vector<Binormal> binormals(const LocalInvariants& inv, const ToleranceSet& tol = {});

/// Hessian of the scalar field Delta(x, y), by Richardson-extrapolated
/// central differences of its exact gradient.
Mat2 hessian_of_delta(const SurfaceSpec& surface, double x, double y, double h = 1e-4);

} // namespace surf4
