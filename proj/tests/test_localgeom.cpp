#include <gtest/gtest.h>

#include <cctype>
#include <cmath>

#include "support.hpp"
#include "surf4/localgeom.hpp"

namespace surf4 {
namespace {

using namespace surf4::testing;

struct Expected
{
    double a, b, c, e, f, g, K, kappa, Delta, H3, H4;
};

struct LocalGeomTest : ::testing::Test
{
    static void expect_matches(const LocalInvariants& inv, const Expected& want, double tol)
    {
        EXPECT_NEAR(inv.a, want.a, tol);
        EXPECT_NEAR(inv.b, want.b, tol);
        EXPECT_NEAR(inv.c, want.c, tol);
        EXPECT_NEAR(inv.e, want.e, tol);
        EXPECT_NEAR(inv.f, want.f, tol);
        EXPECT_NEAR(inv.g, want.g, tol);
        EXPECT_NEAR(inv.K, want.K, tol);
        EXPECT_NEAR(inv.kappa, want.kappa, tol);
        EXPECT_NEAR(inv.Delta, want.Delta, tol);
        EXPECT_NEAR(inv.H[0], want.H3, tol);
        EXPECT_NEAR(inv.H[1], want.H4, tol);
    }

    static void expect_reference(const ReferenceGeometry& ref, const Expected& want, double tol)
    {
        EXPECT_NEAR(ref.a, want.a, tol);
        EXPECT_NEAR(ref.b, want.b, tol);
        EXPECT_NEAR(ref.c, want.c, tol);
        EXPECT_NEAR(ref.e, want.e, tol);
        EXPECT_NEAR(ref.f, want.f, tol);
        EXPECT_NEAR(ref.g, want.g, tol);
        EXPECT_NEAR(ref.K, want.K, tol);
        EXPECT_NEAR(ref.kappa, want.kappa, tol);
        EXPECT_NEAR(ref.Delta, want.Delta, tol);
    }

    // Hand values at the origin.
    static constexpr Expected kA{2, 0, 0, 0, 0, 2, 0, 0, -4, 1, 1};
    static constexpr Expected kB{2, 0, -2, 0, 2, 0, -8, 8, 16, 0, 0};
    static constexpr Expected kC{2, 0, 6, 0, 0, 0, 12, 0, 0, 4, 0};
    static constexpr Expected kD{2, 0, 0, 0, 2, 0, -4, 4, 0, 1, 0};
    static constexpr Expected kG{3, 0, 1, 0, 2, 0, -1, 4, -12, 2, 0};
    static constexpr Expected kH{2, 0, -2, 0, 0, 0, -4, 0, 0, 0, 0};
};

TEST_F(LocalGeomTest, ReferenceConfirmsHandValues)
{
    expect_reference(reference_geometry(surface_a(), 0, 0), kA, 1e-6);
    expect_reference(reference_geometry(surface_b(), 0, 0), kB, 1e-6);
    expect_reference(reference_geometry(surface_c(), 0, 0), kC, 1e-6);
    expect_reference(reference_geometry(surface_d(), 0, 0), kD, 1e-6);
    expect_reference(reference_geometry(surface_g(), 0, 0), kG, 1e-6);
    expect_reference(reference_geometry(surface_h(), 0, 0), kH, 1e-6);
}

TEST_F(LocalGeomTest, FixtureValues)
{
    expect_matches(local_invariants(surface_a(), 0, 0), kA, 1e-12);
    expect_matches(local_invariants(surface_b(), 0, 0), kB, 1e-12);
    expect_matches(local_invariants(surface_c(), 0, 0), kC, 1e-12);
    expect_matches(local_invariants(surface_d(), 0, 0), kD, 1e-12);
    expect_matches(local_invariants(surface_g(), 0, 0), kG, 1e-12);
    expect_matches(local_invariants(surface_h(), 0, 0), kH, 1e-12);
}

TEST_F(LocalGeomTest, FlatPlaneIsZero)
{
    const LocalInvariants inv = local_invariants(flat_plane(), 0.3, -0.7);
    EXPECT_EQ(inv.W, 1.0);
    EXPECT_EQ(inv.K, 0.0);
    EXPECT_EQ(inv.kappa, 0.0);
    EXPECT_EQ(inv.Delta, 0.0);
    EXPECT_EQ(inv.scale(), 0.0);
    EXPECT_EQ(brioschi_curvature(flat_plane(), 0.3, -0.7), 0.0);
}

TEST_F(LocalGeomTest, MetricAwayFromOrigin)
{
    // Surface B at (x, y): phi_x = 2x, phi_y = -2y, psi_x = 2y, psi_y = 2x.
    const double x = 0.3, y = -0.2;
    const LocalInvariants inv = local_invariants(surface_b(), x, y);
    EXPECT_NEAR(inv.E, 1 + 4 * x * x + 4 * y * y, 1e-15);
    EXPECT_NEAR(inv.F, -4 * x * y + 4 * x * y, 1e-15);
    EXPECT_NEAR(inv.G, 1 + 4 * y * y + 4 * x * x, 1e-15);
    EXPECT_NEAR(inv.Ehat, 1 + 4 * x * x + 4 * y * y, 1e-15);
    EXPECT_NEAR(inv.Fhat, 4 * x * y - 4 * x * y, 1e-15);
}

TEST_F(LocalGeomTest, AgreesWithReferenceOnRandomSurfaces)
{
    RandomSurfaces gen(20240611);
    for (int s = 0; s < 8; ++s) {
        const SurfaceSpec surf = gen.next();
        for (int k = 0; k < 5; ++k) {
            const double x = 0.8 * gen.coordinate(), y = 0.8 * gen.coordinate();
            const LocalInvariants inv = local_invariants(surf, x, y);
            const ReferenceGeometry ref = reference_geometry(surf, x, y);
            const double tol = 1e-6 * std::max(1.0, inv.scale() * inv.scale());
            EXPECT_NEAR(inv.a, ref.a, tol);
            EXPECT_NEAR(inv.b, ref.b, tol);
            EXPECT_NEAR(inv.c, ref.c, tol);
            EXPECT_NEAR(inv.e, ref.e, tol);
            EXPECT_NEAR(inv.f, ref.f, tol);
            EXPECT_NEAR(inv.g, ref.g, tol);
            EXPECT_NEAR(inv.K, ref.K, tol);
            EXPECT_NEAR(inv.kappa, ref.kappa, tol);
            EXPECT_NEAR(inv.Delta, ref.Delta, tol * std::max(1.0, inv.scale() * inv.scale()));
        }
    }
}

TEST_F(LocalGeomTest, RedundantFormulasAgree)
{
    RandomSurfaces gen(7);
    for (int s = 0; s < 10; ++s) {
        const SurfaceSpec surf = gen.next();
        for (int k = 0; k < 20; ++k) {
            const double x = gen.coordinate(), y = gen.coordinate();
            LocalOptions opt;
            opt.strict = false;
            const LocalInvariants inv = local_invariants(surf, x, y, opt);
            EXPECT_TRUE(inv.warnings.empty()) << inv.warnings.front();
            const double s2 = inv.scale() * inv.scale();
            EXPECT_LE(relative_difference(inv.K, brioschi_curvature(surf, x, y), s2), 1e-8);
            EXPECT_LE(relative_difference(inv.Ehat * inv.Ghat - inv.Fhat * inv.Fhat, inv.W, inv.W), 1e-10);
        }
    }
}

std::string rotate_text(const std::string& text, double c, double s)
{
    char xr[96], yr[96];
    std::snprintf(xr, sizeof xr, "(%.17g*x - %.17g*y)", c, s);
    std::snprintf(yr, sizeof yr, "(%.17g*x + %.17g*y)", s, c);
    std::string out;
    for (std::size_t k = 0; k < text.size(); ++k) {
        const char ch = text[k];
        const bool alone = (k == 0 || !std::isalpha(static_cast<unsigned char>(text[k - 1]))) &&
                           (k + 1 == text.size() || !std::isalpha(static_cast<unsigned char>(text[k + 1])));
        if (alone && ch == 'x')
            out += xr;
        else if (alone && ch == 'y')
            out += yr;
        else
            out += ch;
    }
    return out;
}

TEST_F(LocalGeomTest, InvariantUnderRotationOfTheParameterPlane)
{
    const std::string phi = "x^2 + 0.3*x*y - y^3 + sin(x + 2*y)";
    const std::string psi = "0.5*x^2*y - y^2 + x^3/4";
    const SurfaceSpec base = make_surface(phi, psi);
    const double t = 0.7, c = std::cos(t), s = std::sin(t);
    const SurfaceSpec rotated = make_surface(rotate_text(phi, c, s), rotate_text(psi, c, s));
    const double x = 0.25, y = -0.4;
    // (u, v) with R (u, v) = (x, y).
    const double u = c * x + s * y, v = -s * x + c * y;
    const LocalInvariants p = local_invariants(base, x, y);
    const LocalInvariants q = local_invariants(rotated, u, v);
    EXPECT_NEAR(p.K, q.K, 1e-12);
    EXPECT_NEAR(p.kappa, q.kappa, 1e-12);
    EXPECT_NEAR(p.Delta, q.Delta, 1e-11);
    EXPECT_NEAR(p.mean_curvature_squared(), q.mean_curvature_squared(), 1e-12);
}

TEST_F(LocalGeomTest, GradientsMatchFiniteDifferences)
{
    const SurfaceSpec surf = make_surface("x^2 + 3*y^2 + x*y^2", "x^3/3 + x*y^2 + sin(y)");
    const double x = 0.2, y = 0.1, h = 1e-5;
    const FieldGradients fg = field_gradients(surf, x, y);
    EXPECT_NEAR(fg.grad_Delta[0], (delta_at(surf, x + h, y) - delta_at(surf, x - h, y)) / (2 * h), 1e-6);
    EXPECT_NEAR(fg.grad_Delta[1], (delta_at(surf, x, y + h) - delta_at(surf, x, y - h)) / (2 * h), 1e-6);
    auto kappa = [&](double u, double v) { return local_invariants(surf, u, v).kappa; };
    EXPECT_NEAR(fg.grad_kappa[0], (kappa(x + h, y) - kappa(x - h, y)) / (2 * h), 1e-6);
    EXPECT_NEAR(fg.grad_kappa[1], (kappa(x, y + h) - kappa(x, y - h)) / (2 * h), 1e-6);
}

TEST_F(LocalGeomTest, ResultantDeterminant)
{
    EXPECT_NEAR(delta_resultant(2, 0, -2, 0, 2, 0), 16.0, 1e-12);
    EXPECT_NEAR(delta_resultant(2, 0, 0, 0, 0, 2), -4.0, 1e-12);
    EXPECT_NEAR(delta_resultant(2, 0, 0, 0, 2, 0), 0.0, 1e-12);
}

TEST_F(LocalGeomTest, DomainValidation)
{
    EXPECT_THROW(make_domain(1, -1, 0, 1), std::invalid_argument);
    EXPECT_THROW(make_domain(0, 1, 2, 2), std::invalid_argument);
    EXPECT_NO_THROW(make_domain(-1, 1, -1, 1));
}

TEST_F(LocalGeomTest, EvaluationFailureNamesThePoint)
{
    const SurfaceSpec surf = make_surface("log(x)", "y");
    try {
        local_invariants(surf, -0.5, 0.25);
        FAIL() << "expected EvalError";
    } catch (const EvalError& err) {
        EXPECT_NE(std::string(err.what()).find("(-0.5, 0.25)"), std::string::npos) << err.what();
    }
}

} // namespace
} // namespace surf4
