#include "surf4/classify.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace surf4 {

namespace {

Eigen::Matrix<double, 2, 3> coefficient_matrix(const LocalInvariants& inv)
{
    Eigen::Matrix<double, 2, 3> m;
    m << inv.a, inv.b, inv.c, inv.e, inv.f, inv.g;
    return m;
}

int expected_root_count(double delta, double tau)
{
    if (delta < -tau)
        return 2;
    if (delta > tau)
        return 0;
    return 1;
}

} // namespace

std::string_view to_string(PointKind kind)
{
    switch (kind) {
    case PointKind::Elliptic: return "elliptic";
    case PointKind::Parabolic: return "parabolic";
    case PointKind::Hyperbolic: return "hyperbolic";
    case PointKind::Inflection: return "inflection";
    }
    return "?";
}

std::string_view to_string(InflectionType type)
{
    switch (type) {
    case InflectionType::Real: return "real";
    case InflectionType::Flat: return "flat";
    case InflectionType::Imaginary: return "imaginary";
    }
    return "?";
}

std::string PointClassification::label() const
{
    if (rank_m == 0)
        return "degenerate";
    std::string out(to_string(kind));
    if (inflection_type)
        out += "-" + std::string(to_string(*inflection_type));
    return out;
}

int coefficient_rank(const LocalInvariants& inv, double rank_ratio)
{
    const Eigen::JacobiSVD<Eigen::Matrix<double, 2, 3>> svd(coefficient_matrix(inv));
    const auto sv = svd.singularValues();
    if (sv(0) == 0.0)
        return 0;
    return sv(1) / sv(0) <= rank_ratio ? 1 : 2;
}

PointClassification classify_point(const LocalInvariants& inv, const ToleranceSet& tol)
{
    PointClassification pc;
    pc.tol = tol;
    pc.Delta = inv.Delta;
    pc.kappa = inv.kappa;
    pc.K = inv.K;
    const double s = inv.scale();
    pc.scale = s;
    pc.tau_delta = tol.rel * s * s * s * s;
    pc.tau_kappa = tol.rel * s * s;
    pc.rank_m = coefficient_rank(inv, tol.rank_ratio);

    if (inv.Delta > pc.tau_delta) {
        pc.kind = PointKind::Elliptic;
    } else if (inv.Delta < -pc.tau_delta) {
        pc.kind = PointKind::Hyperbolic;
    } else if (std::abs(inv.kappa) <= pc.tau_kappa && pc.rank_m <= 1) {
        pc.kind = PointKind::Inflection;
        const double tau_k = tol.rel * s * s;
        if (inv.K < -tau_k)
            pc.inflection_type = InflectionType::Real;
        else if (inv.K > tau_k)
            pc.inflection_type = InflectionType::Imaginary;
        else
            pc.inflection_type = InflectionType::Flat;
    } else {
        pc.kind = PointKind::Parabolic;
    }

    const Indicatrix ind = indicatrix(inv);
    pc.is_circle = (ind.semi_axis_major - ind.semi_axis_minor) <= tol.shape * s;
    pc.is_minimal = ind.center.norm() <= tol.shape * s;
    pc.is_umbilic = pc.is_circle && pc.is_minimal;
    return pc;
}

std::vector<Vec2> asymptotic_directions(const LocalInvariants& inv, const ToleranceSet& tol)
{
    const double s = inv.scale();
    const double tau2 = tol.rel * s * s;
    if (std::abs(inv.nq0) <= tau2 && std::abs(inv.nq1) <= tau2 && std::abs(inv.nq2) <= tau2)
        throw GeometryError(GeometryError::Reason::Inflection,
                            "asymptotic quadratic vanishes identically: every direction is asymptotic (inflection point)");
    const int roots = expected_root_count(inv.Delta, tol.rel * s * s * s * s);
    return quadratic_directions(inv.nq0, inv.nq1, inv.nq2, roots);
}

std::vector<Binormal> binormals(const LocalInvariants& inv, const ToleranceSet& tol)
{
    const std::vector<Vec2> dirs = asymptotic_directions(inv, tol);
    const Indicatrix ind = indicatrix(inv);
    const double s = inv.scale();
    std::vector<Binormal> out;
    for (const Vec2& d : dirs) {
        const double theta = std::atan2(d(1), d(0));
        Vec2 span = eta(inv, theta);
        if (span.norm() <= tol.shape * s)
            span = eta_prime(inv, theta);  // origin on the ellipse: use its tangent
        Binormal bn;
        bn.asymptotic = d;
        bn.normal = canonical_direction(Vec2(-span(1), span(0)));
        bn.degenerate_indicatrix = ind.degenerate;
        out.push_back(bn);
    }
    return out;
}

Mat2 hessian_of_delta(const SurfaceSpec& surface, double x, double y, double h)
{
    auto grad = [&](double px, double py) {
        const FieldGradients fg = field_gradients(surface, px, py);
        return Vec2(fg.grad_Delta[0], fg.grad_Delta[1]);
    };
    auto central = [&](int axis, double step) {
        const Vec2 offset = axis == 0 ? Vec2(step, 0.0) : Vec2(0.0, step);
        return Vec2((grad(x + offset(0), y + offset(1)) - grad(x - offset(0), y - offset(1))) / (2.0 * step));
    };
    Mat2 hess;
    for (int axis = 0; axis < 2; ++axis) {
        const Vec2 coarse = central(axis, h);
        const Vec2 fine = central(axis, 0.5 * h);
        hess.col(axis) = (4.0 * fine - coarse) / 3.0;
    }
    return 0.5 * (hess + hess.transpose());
}

} // namespace surf4
