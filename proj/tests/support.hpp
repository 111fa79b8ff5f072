#pragma once

// Shared fixtures and an independent reference implementation for the tests.
//
// The reference path never touches the jet arithmetic or the closed-form
// coefficient formulas: partials come from finite differences of the plain
// evaluator, the frame from a numerical orthonormalization in R^4.

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "surf4/localgeom.hpp"

namespace surf4::testing {

inline SurfaceSpec surface_a() { return make_surface("x^2", "y^2"); }
inline SurfaceSpec surface_b() { return make_surface("x^2 - y^2", "2*x*y", make_domain(-0.5, 0.5, -0.5, 0.5)); }
inline SurfaceSpec surface_c()
{
    return make_surface("x^2 + 3*y^2", "x^3/3 + x*y^2", make_domain(-0.5, 0.5, -0.5, 0.5));
}
inline SurfaceSpec surface_d() { return make_surface("x^2", "2*x*y"); }
inline SurfaceSpec surface_e() { return make_surface("x^2 + y^3", "2*x*y"); }
inline SurfaceSpec surface_g() { return make_surface("1.5*x^2 + 0.5*y^2", "2*x*y"); }
inline SurfaceSpec surface_h()
{
    return make_surface("x^2 - y^2", "x^3/3 + x*y^2", make_domain(-0.5, 0.5, -0.5, 0.5));
}
inline SurfaceSpec flat_plane() { return make_surface("0", "0"); }

struct ReferenceGeometry
{
    double a, b, c, e, f, g;
    double K;      ///< <II(e1,e1), II(e2,e2)> - |II(e1,e2)|^2
    double kappa;  ///< 2/pi times the signed area enclosed by the indicatrix
    double Delta;  ///< 1/4 of the Sylvester resultant determinant
    Eigen::Vector4d e1, e2, e3, e4;
};

/// Reference second-order geometry at (x, y) with step h.
inline ReferenceGeometry reference_geometry(const SurfaceSpec& s, double x, double y, double h = 1e-3)
{
    using V4 = Eigen::Vector4d;
    auto xi = [&](double u, double v) {
        return V4(u, v, evaluate(s.phi, u, v), evaluate(s.psi, u, v));
    };
    // Fourth-order central differences.
    auto d1 = [&](double dx, double dy) {
        return V4((-xi(x + 2 * dx, y + 2 * dy) + 8.0 * xi(x + dx, y + dy) - 8.0 * xi(x - dx, y - dy) +
                   xi(x - 2 * dx, y - 2 * dy)) /
                  (12.0 * h));
    };
    const V4 t1 = d1(h, 0.0);
    const V4 t2 = d1(0.0, h);
    const V4 c0 = xi(x, y);
    const V4 xx = (-xi(x + 2 * h, y) + 16.0 * xi(x + h, y) - 30.0 * c0 + 16.0 * xi(x - h, y) - xi(x - 2 * h, y)) /
                  (12.0 * h * h);
    const V4 yy = (-xi(x, y + 2 * h) + 16.0 * xi(x, y + h) - 30.0 * c0 + 16.0 * xi(x, y - h) - xi(x, y - 2 * h)) /
                  (12.0 * h * h);
    const V4 xy = (xi(x + h, y + h) - xi(x + h, y - h) - xi(x - h, y + h) + xi(x - h, y - h)) / (4.0 * h * h);

    ReferenceGeometry r;
    r.e1 = t1.normalized();
    r.e2 = (t2 - t2.dot(r.e1) * r.e1).normalized();

    // Normal space: the orthogonal complement of the tangent plane. e3 is
    // the unit normal with vanishing fourth component, e4 completes it.
    Eigen::Matrix<double, 2, 4> tangent;
    tangent.row(0) = t1.transpose();
    tangent.row(1) = t2.transpose();
    const Eigen::JacobiSVD<Eigen::Matrix<double, 2, 4>> svd(tangent, Eigen::ComputeFullV);
    const Eigen::Matrix<double, 4, 2> normal = svd.matrixV().rightCols<2>();
    // Combination of the two null vectors with zero fourth component.
    V4 n3 = normal.col(0) * normal(3, 1) - normal.col(1) * normal(3, 0);
    if (n3.norm() < 1e-12)
        n3 = normal(3, 0) == 0.0 ? V4(normal.col(0)) : V4(normal.col(1));
    r.e3 = n3.normalized();
    if (r.e3(2) < 0.0)
        r.e3 = -r.e3;
    V4 n4 = normal.col(0) - normal.col(0).dot(r.e3) * r.e3;
    if (n4.norm() < 1e-6)
        n4 = normal.col(1) - normal.col(1).dot(r.e3) * r.e3;
    r.e4 = n4.normalized();
    if (r.e4(3) < 0.0)
        r.e4 = -r.e4;

    // Parameter coordinates of e1 and e2.
    Eigen::Matrix<double, 4, 2> basis;
    basis << t1, t2;
    const Eigen::Vector2d p1 = basis.colPivHouseholderQr().solve(r.e1);
    const Eigen::Vector2d p2 = basis.colPivHouseholderQr().solve(r.e2);
    auto second = [&](const Eigen::Vector2d& u, const Eigen::Vector2d& v) {
        return V4(u(0) * v(0) * xx + (u(0) * v(1) + u(1) * v(0)) * xy + u(1) * v(1) * yy);
    };
    const V4 ii11 = second(p1, p1), ii12 = second(p1, p2), ii22 = second(p2, p2);
    r.a = ii11.dot(r.e3);
    r.b = ii12.dot(r.e3);
    r.c = ii22.dot(r.e3);
    r.e = ii11.dot(r.e4);
    r.f = ii12.dot(r.e4);
    r.g = ii22.dot(r.e4);

    auto normal_part = [&](const V4& v) { return V4(v.dot(r.e3) * r.e3 + v.dot(r.e4) * r.e4); };
    r.K = normal_part(ii11).dot(normal_part(ii22)) - normal_part(ii12).squaredNorm();

    // Signed area of the image of the unit circle, by the shoelace formula
    // on a fine polygon.
    const int n = 1 << 16;
    double twice = 0.0;
    Eigen::Vector2d prev;
    for (int k = 0; k <= n; ++k) {
        const double t = 2.0 * std::numbers::pi * k / n;
        const double ct = std::cos(t), st = std::sin(t);
        const double ka = r.a * ct * ct + 2 * r.b * ct * st + r.c * st * st;
        const double ke = r.e * ct * ct + 2 * r.f * ct * st + r.g * st * st;
        const Eigen::Vector2d cur(ka, ke);
        if (k > 0)
            twice += prev(0) * cur(1) - prev(1) * cur(0);
        prev = cur;
    }
    // The circle is traversed once, the ellipse twice.
    r.kappa = (2.0 / std::numbers::pi) * (0.25 * twice);

    Eigen::Matrix4d syl;
    syl << r.a, 2 * r.b, r.c, 0, r.e, 2 * r.f, r.g, 0, 0, r.a, 2 * r.b, r.c, 0, r.e, 2 * r.f, r.g;
    r.Delta = 0.25 * syl.determinant();
    return r;
}

/// Random smooth surfaces: a cubic polynomial plus one trigonometric term.
class RandomSurfaces
{
public:
    explicit RandomSurfaces(std::uint64_t seed)
        : rng_(seed)
    {}

    SurfaceSpec next()
    {
        return make_surface(component(), component(), make_domain(-1.0, 1.0, -1.0, 1.0));
    }

    double coordinate() { return std::uniform_real_distribution<double>(-1.0, 1.0)(rng_); }

private:
    std::string number(double lo, double hi)
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "(%.6f)", std::uniform_real_distribution<double>(lo, hi)(rng_));
        return buf;
    }

    std::string component()
    {
        static const char* monomials[] = {"x", "y", "x^2", "x*y", "y^2", "x^3", "x^2*y", "x*y^2", "y^3"};
        std::string out;
        for (const char* m : monomials) {
            if (!out.empty())
                out += " + ";
            out += number(-1.5, 1.5) + "*" + m;
        }
        const std::string amp = number(-0.5, 0.5);
        const std::string kx = number(-2.0, 2.0);
        const std::string ky = number(-2.0, 2.0);
        out += " + " + amp + "*sin(" + kx + "*x + " + ky + "*y)";
        return out;
    }

    std::mt19937_64 rng_;
};

/// Angle between two lines through the origin (directions up to sign).
inline double line_angle(const Eigen::Vector2d& u, const Eigen::Vector2d& v)
{
    const double cross = u(0) * v(1) - u(1) * v(0);
    return std::abs(std::atan2(cross, u.dot(v)));
}

inline double line_distance(const Eigen::Vector2d& u, const Eigen::Vector2d& v)
{
    const double t = line_angle(u, v);
    return std::min(t, std::numbers::pi - t);
}

} // namespace surf4::testing
