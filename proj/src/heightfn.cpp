#include "surf4/heightfn.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace surf4 {

namespace {

Mat2 hessian_of(const Jet3& j)
{
    Mat2 h;
    h << j.fxx(), j.fxy(), j.fxy(), j.fyy();
    return h;
}

double cubic_along(const Jet3& j, const Vec2& k)
{
    const double u = k(0), v = k(1);
    return j.fxxx() * u * u * u + 3.0 * j.fxxy() * u * u * v + 3.0 * j.fxyy() * u * v * v + j.fyyy() * v * v * v;
}

double jet_scale(const LocalInvariants& inv)
{
    const auto& p = inv.phi_jet;
    const auto& q = inv.psi_jet;
    return std::max({std::abs(p.fxx()), std::abs(p.fxy()), std::abs(p.fyy()),
                     std::abs(q.fxx()), std::abs(q.fxy()), std::abs(q.fyy())});
}

} // namespace

std::string_view to_string(HeightKind kind)
{
    switch (kind) {
    case HeightKind::NonDegenerate: return "nondegenerate";
    case HeightKind::Fold: return "fold";
    case HeightKind::CuspOrHigher: return "cusp-or-higher";
    case HeightKind::UmbilicOrHigher: return "umbilic-or-higher";
    }
    return "?";
}

Mat2 tangent_frame_matrix(const LocalInvariants& inv)
{
    const double rew = std::sqrt(inv.E * inv.W);
    Mat2 p;
    p << 1.0 / std::sqrt(inv.E), -inv.F / rew,
         0.0, inv.E / rew;
    return p;
}

Mat2 normal_frame_matrix(const LocalInvariants& inv)
{
    const double rew = std::sqrt(inv.Ehat * inv.W);
    Mat2 t;
    t << 1.0 / std::sqrt(inv.Ehat), -inv.Fhat / rew,
         0.0, inv.Ehat / rew;
    return t;
}

HeightHessian height_hessian(const LocalInvariants& inv, const Vec2& n)
{
    HeightHessian out;
    const Vec2 b = normal_frame_matrix(inv) * n;
    out.parameter = b(0) * hessian_of(inv.phi_jet) + b(1) * hessian_of(inv.psi_jet);

    Mat2 m1, m2;
    m1 << inv.a, inv.b, inv.b, inv.c;
    m2 << inv.e, inv.f, inv.f, inv.g;
    out.orthonormal = n(0) * m1 + n(1) * m2;

    out.det_parameter = out.parameter.determinant();
    out.det_orthonormal = out.orthonormal.determinant();
    const auto& s = inv;
    out.det_quadratic = (s.a * s.c - s.b * s.b) * n(0) * n(0) +
                        (s.a * s.g + s.c * s.e - 2.0 * s.b * s.f) * n(0) * n(1) +
                        (s.e * s.g - s.f * s.f) * n(1) * n(1);
    return out;
}

std::vector<Vec2> degenerate_normals(const LocalInvariants& inv, const ToleranceSet& tol)
{
    const double p = inv.a * inv.c - inv.b * inv.b;
    const double q = inv.a * inv.g + inv.c * inv.e - 2.0 * inv.b * inv.f;
    const double r = inv.e * inv.g - inv.f * inv.f;
    const double s = inv.scale();
    const double tau2 = tol.rel * s * s;
    if (std::abs(p) <= tau2 && std::abs(q) <= tau2 && std::abs(r) <= tau2)
        throw GeometryError(GeometryError::Reason::Inflection,
                            "height Hessian determinant vanishes for every normal (inflection point)");
    const double tau4 = tol.rel * s * s * s * s;
    const int roots = inv.Delta < -tau4 ? 2 : inv.Delta > tau4 ? 0 : 1;
    return quadratic_directions(p, q, r, roots);
}

HeightSingularity classify_height(const LocalInvariants& inv, const Vec2& normal, const HeightTolerances& tol)
{
    HeightSingularity out;
    const Vec2 n = normal.normalized();
    out.normal = n;
    const double js = jet_scale(inv);
    out.threshold = tol.cubic_rel * js * js * js;

    const HeightHessian hh = height_hessian(inv, n);
    const Eigen::SelfAdjointEigenSolver<Mat2> eig(hh.orthonormal);
    const Vec2 ev = eig.eigenvalues();
    const int small = std::abs(ev(0)) <= std::abs(ev(1)) ? 0 : 1;
    const double lmin = std::abs(ev(small));
    const double lmax = std::abs(ev(1 - small));

    if (lmax <= tol.rel * js) {
        out.kind = HeightKind::UmbilicOrHigher;
        return out;
    }
    if (lmin > tol.rel * js) {
        out.kind = HeightKind::NonDegenerate;
        return out;
    }

    const Vec2 kernel = canonical_direction(eig.eigenvectors().col(small));
    out.kernel_direction = kernel;
    const Vec2 k_param = tangent_frame_matrix(inv) * kernel;
    const Vec2 b = normal_frame_matrix(inv) * n;
    out.third_order_coefficient = (b(0) * cubic_along(inv.phi_jet, k_param) +
                                   b(1) * cubic_along(inv.psi_jet, k_param)) / 6.0;
    out.kind = std::abs(out.third_order_coefficient) > out.threshold ? HeightKind::Fold : HeightKind::CuspOrHigher;
    return out;
}

HeightSingularity classify_height(const SurfaceSpec& surface, double x, double y, const Vec2& n,
                                  const HeightTolerances& tol)
{
    return classify_height(local_invariants(surface, x, y), n, tol);
}

} // namespace surf4
