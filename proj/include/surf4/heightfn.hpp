#pragma once

// Height functions f_b(p) = p . b for normal directions b at a surface point.
//
// A normal direction n = (n1, n2) is expressed in the (e3, e4) frame. Its
// coordinates in R^4 have last two components T n with
//   T = [[1/sqrt(Ehat), -Fhat/sqrt(Ehat W)], [0, Ehat/sqrt(Ehat W)]],
// and the Hessian of f_b in (x, y) is b3 Hess(phi) + b4 Hess(psi).

#include <optional>
#include <string_view>
#include <vector>

#include "surf4/classify.hpp"

namespace surf4 {

enum class HeightKind { NonDegenerate, Fold, CuspOrHigher, UmbilicOrHigher };

std::string_view to_string(HeightKind kind);

struct HeightHessian
{
    Mat2 parameter;    ///< in (x, y) coordinates
    Mat2 orthonormal;  ///< in the (e1, e2) frame: n1 [[a,b],[b,c]] + n2 [[e,f],[f,g]]
    double det_parameter = 0.0;
    double det_orthonormal = 0.0;
    /// (ac-b^2) n1^2 + (ag+ce-2bf) n1 n2 + (eg-f^2) n2^2
    double det_quadratic = 0.0;
};

HeightHessian height_hessian(const LocalInvariants& inv, const Vec2& n);

/// Normal directions at which f_b has a degenerate critical point; the count
/// is 2, 1, 0 as Delta < 0, = 0, > 0. Throws GeometryError(Inflection) when
/// the determinant quadratic vanishes identically.
std::vector<Vec2> degenerate_normals(const LocalInvariants& inv, const ToleranceSet& tol = {});

struct HeightSingularity
{
    Vec2 normal;
    HeightKind kind = HeightKind::NonDegenerate;
    std::optional<Vec2> kernel_direction;  ///< in (e1, e2)
    double third_order_coefficient = 0.0;  ///< d^3 f_b(k,k,k) / 6 along the kernel
    double threshold = 0.0;                ///< fold/cusp threshold used
};

/// Relative thresholds: Hessian rank tests against rel * jet_scale, the
/// fold/cusp split against cubic_rel * jet_scale^3, where jet_scale is the
/// largest second partial of phi and psi.
struct HeightTolerances
{
    double rel = 1e-8;
    double cubic_rel = 1e-8;
};

HeightSingularity classify_height(const LocalInvariants& inv, const Vec2& n, const HeightTolerances& tol = {});
HeightSingularity classify_height(const SurfaceSpec& surface, double x, double y, const Vec2& n,
                                  const HeightTolerances& tol = {});

/// Maps an orthonormal tangent direction to (dx, dy) parameter increments.
Mat2 tangent_frame_matrix(const LocalInvariants& inv);

/// Maps (e3, e4) coordinates of a normal vector to its (x3, x4) components.
Mat2 normal_frame_matrix(const LocalInvariants& inv);

} // namespace surf4
