#pragma once

// Curvature ellipse (indicatrix), characteristic conic, and the polarity in
// the unit circle of the normal plane that maps one to the other.
//
// Normal-plane points are written in the (e3, e4) frame; conics act on
// homogeneous coordinates (X, Y, 1).

#include <Eigen/Core>
#include <optional>
#include <string_view>
#include <vector>

#include "surf4/localgeom.hpp"

namespace surf4 {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

enum class ConicKind { Ellipse, Parabola, Hyperbola, Degenerate };

std::string_view to_string(ConicKind kind);

struct Conic
{
    Mat3 m = Mat3::Zero();
    ConicKind kind = ConicKind::Degenerate;
};

/// Scale `m` so its largest entry has magnitude 1, fix the sign (trace of
/// the 2x2 block non-negative), symmetrize, and classify.
Conic make_conic(const Mat3& m);

Conic unit_circle();

/// Band for the 2x2 minor, relative to the squared norm of the quadratic
/// block, inside which a conic reads as a parabola.
inline constexpr double kConicKindTol = 1e-9;

struct Indicatrix
{
    Vec2 center = Vec2::Zero();  ///< mean curvature vector H
    Mat2 map = Mat2::Zero();     ///< eta(theta) = center + map (cos 2t, sin 2t)
    double semi_axis_major = 0.0;
    double semi_axis_minor = 0.0;
    Vec2 major_direction = Vec2::UnitX();
    bool degenerate = true;
};

inline constexpr double kIndicatrixDegenerateTol = 1e-10;

Indicatrix indicatrix(const LocalInvariants& inv);

/// Image of the unit tangent vector at angle theta under II.
Vec2 eta(const LocalInvariants& inv, double theta);

/// d eta / d theta.
Vec2 eta_prime(const LocalInvariants& inv, double theta);

struct ConjugateRadii
{
    Vec2 xi;    ///< eta(theta) - H
    Vec2 zeta;  ///< conjugate radius, normal part of dv/ds
};

ConjugateRadii conjugate_radii(const LocalInvariants& inv, double theta);

/// Coefficients after rotating the tangent and normal frames so that b = 0,
/// e = g and (a - c)/2 >= |f|; (a-c)/2 and |f| are the semi-axes.
struct CanonicalCoefficients
{
    double a = 0.0, c = 0.0, e = 0.0, f = 0.0;
    double tangent_angle = 0.0;  ///< rotation of (e1, e2)
    double normal_angle = 0.0;   ///< rotation of (e3, e4)

    double gaussian_curvature() const { return a * c + e * e - f * f; }
    double normal_curvature() const { return (a - c) * f; }
    Vec2 mean_curvature() const { return {0.5 * (a + c), e}; }
};

inline constexpr double kUmbilicTol = 1e-10;

/// Throws GeometryError(Umbilic) at umbilic points.
CanonicalCoefficients canonical_coefficients(const LocalInvariants& inv);

/// Signed shoelace area of eta sampled at `samples` equally spaced angles in
/// [0, pi); tends to (pi / 2) kappa.
double indicatrix_polygon_area(const LocalInvariants& inv, int samples = 256);

/// |H|^2 - K - |kappa|: non-negative, zero exactly at circle points.
double wintgen_gap(const LocalInvariants& inv);

/// Conic through every eta(theta). Throws GeometryError(DegenerateIndicatrix).
Conic indicatrix_conic(const Indicatrix& ind);

/// Polar conjugate of the indicatrix in the unit circle: U adj(Q) U with
/// U = diag(1, 1, -1). Throws GeometryError(DegenerateIndicatrix).
Conic characteristic_conic(const Indicatrix& ind);

/// The normal vector n with n . eta(theta) = 1 and n . zeta(theta) = 0,
/// i.e. where the line n . eta = 1 touches its envelope. Throws
/// GeometryError(SingularSystem) when the tangent at eta(theta) passes
/// through the origin.
Vec2 evolvent_point(const LocalInvariants& inv, double theta);

/// Pole of the line l (l . (X,Y,1) = 0) with respect to the conic.
Vec2 pole(const Vec3& line, const Conic& conic);

/// Polar line of a point with respect to the conic.
Vec3 polar(const Vec2& point, const Conic& conic);

/// Adjugate of a 3x3 matrix (transpose of the cofactor matrix).
Mat3 adjugate(const Mat3& m);

/// |p^T m p| / (|m|_F |p|^2) with p = (X, Y, 1).
double conic_residual(const Conic& conic, const Vec2& point);

/// Tangency residual of a line: |l^T adj(m) l| / (|adj m|_F |l|^2).
double tangent_residual(const Conic& conic, const Vec3& line);

/// Directions of the points at infinity (real roots of the 2x2 block).
std::vector<Vec2> asymptote_directions(const Conic& conic);

/// Real roots (as unit directions) of the binary quadratic
/// q0 u^2 + q1 u v + q2 v^2, using the cancellation-free form of the
/// quadratic formula. `expected_roots` (0, 1 or 2) comes from the caller's
/// sign test; 1 returns the double root.
std::vector<Vec2> quadratic_directions(double q0, double q1, double q2, int expected_roots);

/// Directions are identified with their negatives; pick the representative
/// whose first nonzero component is positive.
Vec2 canonical_direction(Vec2 d);

} // namespace surf4
