#include "surf4/conics.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace surf4 {

namespace {


Mat2 indicatrix_map(const LocalInvariants& inv)
{
    Mat2 a;
    a << 0.5 * (inv.a - inv.c), inv.b, 0.5 * (inv.e - inv.g), inv.f;
    return a;
}

ConicKind classify_matrix(const Mat3& m)
{
    const double norm = m.norm();
    if (norm == 0.0)
        return ConicKind::Degenerate;
    if (std::abs(m.determinant()) <= 1e-12 * norm * norm * norm)
        return ConicKind::Degenerate;
    const double minor = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    const double block = m.topLeftCorner<2, 2>().norm();
    if (std::abs(minor) <= kConicKindTol * block * block)
        return ConicKind::Parabola;
    return minor > 0.0 ? ConicKind::Ellipse : ConicKind::Hyperbola;
}

} // namespace

std::string_view to_string(ConicKind kind)
{
    switch (kind) {
    case ConicKind::Ellipse: return "ellipse";
    case ConicKind::Parabola: return "parabola";
    case ConicKind::Hyperbola: return "hyperbola";
    case ConicKind::Degenerate: return "degenerate";
    }
    return "degenerate";
}

Conic make_conic(const Mat3& raw)
{
    Mat3 m = 0.5 * (raw + raw.transpose());
    const double biggest = m.cwiseAbs().maxCoeff();
    if (biggest > 0.0) {
        m /= biggest;
        const double trace = m(0, 0) + m(1, 1);
        double sign = 1.0;
        if (std::abs(trace) > 1e-14) {
            sign = trace > 0.0 ? 1.0 : -1.0;
        } else {
            for (int i = 0; i < 9; ++i)
                if (std::abs(m(i / 3, i % 3)) > 1e-14) {
                    sign = m(i / 3, i % 3) > 0.0 ? 1.0 : -1.0;
                    break;
                }
        }
        m *= sign;
        m += Mat3::Zero();  // clears negative zeros
    }
    return Conic{m, classify_matrix(m)};
}

Conic unit_circle() { return make_conic(Vec3(1.0, 1.0, -1.0).asDiagonal()); }

Indicatrix indicatrix(const LocalInvariants& inv)
{
    Indicatrix ind;
    ind.center = Vec2(inv.H[0], inv.H[1]);
    ind.map = indicatrix_map(inv);
    Eigen::JacobiSVD<Mat2> svd(ind.map, Eigen::ComputeFullU);
    ind.semi_axis_major = svd.singularValues()(0);
    ind.semi_axis_minor = svd.singularValues()(1);
    ind.major_direction = canonical_direction(svd.matrixU().col(0));
    const double norm2 = ind.map.squaredNorm();
    ind.degenerate = std::abs(ind.map.determinant()) <= kIndicatrixDegenerateTol * norm2;
    return ind;
}

Vec2 eta(const LocalInvariants& inv, double theta)
{
    const double c = std::cos(theta), s = std::sin(theta);
    return {inv.a * c * c + 2.0 * inv.b * c * s + inv.c * s * s,
            inv.e * c * c + 2.0 * inv.f * c * s + inv.g * s * s};
}

Vec2 eta_prime(const LocalInvariants& inv, double theta)
{
    return 2.0 * conjugate_radii(inv, theta).zeta;
}

ConjugateRadii conjugate_radii(const LocalInvariants& inv, double theta)
{
    const Mat2 a = indicatrix_map(inv);
    const double c2 = std::cos(2.0 * theta), s2 = std::sin(2.0 * theta);
    return {a * Vec2(c2, s2), a * Vec2(-s2, c2)};
}

CanonicalCoefficients canonical_coefficients(const LocalInvariants& inv)
{
    const Mat2 a = indicatrix_map(inv);
    const Vec2 h(inv.H[0], inv.H[1]);
    const double scale = inv.scale();

    Eigen::JacobiSVD<Mat2> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Mat2 u = svd.matrixU();
    Mat2 v = svd.matrixV();
    const double s1 = svd.singularValues()(0);
    const double s2 = svd.singularValues()(1);

    const bool circle = (s1 - s2) <= kUmbilicTol * scale;
    const bool minimal = h.norm() <= kUmbilicTol * scale;
    if (circle && minimal)
        throw GeometryError(GeometryError::Reason::Umbilic, "canonical frame undefined at an umbilic point");

    // Make both factors proper rotations; the sign of det(map) moves into
    // the minor semi-axis.
    const bool u_flip = u.determinant() < 0.0;
    const bool v_flip = v.determinant() < 0.0;
    if (u_flip)
        u.col(1) *= -1.0;
    if (v_flip)
        v.col(1) *= -1.0;
    const double orient = (u_flip == v_flip) ? 1.0 : -1.0;

    if (circle) {
        // Any axis works; align e3 with the centre direction.
        const Vec2 dir = h.normalized();
        Mat2 u_new;
        u_new << dir(0), -dir(1), dir(1), dir(0);
        const Mat2 r = u.transpose() * u_new;
        const Mat2 d = Vec2(1.0, orient).asDiagonal();
        v = v * (d * r * d);
        u = u_new;
    }

    Vec2 hc = u.transpose() * h;
    if (hc(0) < 0.0 || (hc(0) == 0.0 && hc(1) < 0.0)) {
        u = -u;
        v = -v;
        hc = -hc;
    }

    CanonicalCoefficients out;
    out.a = hc(0) + s1;
    out.c = hc(0) - s1;
    out.e = hc(1);
    out.f = orient * s2;
    out.normal_angle = std::atan2(u(1, 0), u(0, 0));
    out.tangent_angle = 0.5 * std::atan2(v(1, 0), v(0, 0));
    return out;
}

double indicatrix_polygon_area(const LocalInvariants& inv, int samples)
{
    double twice = 0.0;
    Vec2 prev = eta(inv, 0.0);
    for (int k = 1; k <= samples; ++k) {
        const Vec2 cur = eta(inv, std::numbers::pi * (k % samples) / samples);
        twice += prev(0) * cur(1) - prev(1) * cur(0);
        prev = cur;
    }
    return 0.5 * twice;
}

double wintgen_gap(const LocalInvariants& inv)
{
    return inv.mean_curvature_squared() - inv.K - std::abs(inv.kappa);
}

Conic indicatrix_conic(const Indicatrix& ind)
{
    if (ind.degenerate)
        throw GeometryError(GeometryError::Reason::DegenerateIndicatrix,
                            "degenerate indicatrix (normal curvature ~ 0): no full-rank conic");
    // (p - H)^T (A A^T)^{-1} (p - H) = 1
    const Mat2 m = (ind.map * ind.map.transpose()).inverse();
    const Vec2 mh = m * ind.center;
    Mat3 q;
    q.topLeftCorner<2, 2>() = m;
    q.topRightCorner<2, 1>() = -mh;
    q.bottomLeftCorner<1, 2>() = -mh.transpose();
    q(2, 2) = ind.center.dot(mh) - 1.0;
    return make_conic(q);
}

Conic characteristic_conic(const Indicatrix& ind)
{
    const Conic q = indicatrix_conic(ind);
    const Mat3 u = Vec3(1.0, 1.0, -1.0).asDiagonal();
    return make_conic(u * adjugate(q.m) * u);
}

Vec2 evolvent_point(const LocalInvariants& inv, double theta)
{
    const Vec2 e = eta(inv, theta);
    const Vec2 z = conjugate_radii(inv, theta).zeta;
    const double det = e(0) * z(1) - e(1) * z(0);
    if (std::abs(det) <= 1e-12)
        throw GeometryError(GeometryError::Reason::SingularSystem,
                            "singular evolvent system: the tangent to the indicatrix passes through the origin");
    // Rows (eta; zeta), right-hand side (1, 0).
    return Vec2(z(1), -z(0)) / det;
}

Mat3 adjugate(const Mat3& m)
{
    Mat3 adj;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            adj(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
        }
    return adj;
}

Vec2 pole(const Vec3& line, const Conic& conic)
{
    const double norm = conic.m.norm();
    if (std::abs(conic.m.determinant()) <= 1e-12 * norm * norm * norm)
        throw GeometryError(GeometryError::Reason::RankDeficientConic, "pole undefined for a rank-deficient conic");
    const Vec3 p = conic.m.fullPivLu().solve(line);
    if (std::abs(p(2)) <= 1e-12 * p.norm())
        throw GeometryError(GeometryError::Reason::PoleAtInfinity, "pole lies at infinity");
    return p.head<2>() / p(2);
}

Vec3 polar(const Vec2& point, const Conic& conic)
{
    const double norm = conic.m.norm();
    if (std::abs(conic.m.determinant()) <= 1e-12 * norm * norm * norm)
        throw GeometryError(GeometryError::Reason::RankDeficientConic, "polar undefined for a rank-deficient conic");
    return conic.m * Vec3(point(0), point(1), 1.0);
}

double conic_residual(const Conic& conic, const Vec2& point)
{
    const Vec3 p(point(0), point(1), 1.0);
    return std::abs(p.dot(conic.m * p)) / (conic.m.norm() * p.squaredNorm());
}

double tangent_residual(const Conic& conic, const Vec3& line)
{
    const Mat3 adj = adjugate(conic.m);
    return std::abs(line.dot(adj * line)) / (adj.norm() * line.squaredNorm());
}

std::vector<Vec2> asymptote_directions(const Conic& conic)
{
    const Mat3& m = conic.m;
    const int roots = conic.kind == ConicKind::Hyperbola ? 2 : conic.kind == ConicKind::Parabola ? 1 : 0;
    return quadratic_directions(m(0, 0), 2.0 * m(0, 1), m(1, 1), roots);
}

Vec2 canonical_direction(Vec2 d)
{
    const double n = d.norm();
    if (n == 0.0)
        return d;
    d /= n;
    if (d(0) < 0.0 || (d(0) == 0.0 && d(1) < 0.0))
        d = -d;
    return d + Vec2::Zero();  // clears negative zeros
}

std::vector<Vec2> quadratic_directions(double q0, double q1, double q2, int expected_roots)
{
    std::vector<Vec2> out;
    if (expected_roots <= 0)
        return out;
    if (expected_roots == 1) {
        // Double root: the tangent direction of the degenerate quadratic.
        const Vec2 d = std::abs(q0) >= std::abs(q2) ? Vec2(-q1, 2.0 * q0) : Vec2(2.0 * q2, -q1);
        if (d.norm() > 0.0)
            out.push_back(canonical_direction(d));
        return out;
    }
    const double disc = std::max(0.0, q1 * q1 - 4.0 * q0 * q2);
    const double q = -0.5 * (q1 + std::copysign(std::sqrt(disc), q1));
    // Roots of q0 t^2 + q1 t + q2 with t = u/v, written homogeneously.
    for (const Vec2& d : {Vec2(q, q0), Vec2(q2, q)}) {
        if (d.norm() == 0.0)
            continue;
        const Vec2 c = canonical_direction(d);
        const bool dup = std::any_of(out.begin(), out.end(),
                                     [&](const Vec2& o) { return std::abs(o(0) * c(1) - o(1) * c(0)) < 1e-14; });
        if (!dup)
            out.push_back(c);
    }
    return out;
}

} // namespace surf4
