#pragma once

// Pointwise second-order invariants of a surface (x, y, phi(x,y), psi(x,y))
// in R^4.
//
// Coefficients a..g are the second fundamental form in the orthonormal
// frame obtained from T1 = (1,0,phi_x,psi_x), T2 = (0,1,phi_y,psi_y) and
// N1 = (-phi_x,-phi_y,1,0), N2 = (-psi_x,-psi_y,0,1):
//
//   e1 = T1/sqrt(E)         e2 = (E T2 - F T1)/sqrt(E W)
//   e3 = N1/sqrt(Ehat)      e4 = (Ehat N2 - Fhat N1)/sqrt(Ehat W)
//
//   II = (a w1^2 + 2b w1 w2 + c w2^2) e3 + (e w1^2 + 2f w1 w2 + g w2^2) e4

#include <array>
#include <string>
#include <vector>

#include "surf4/expr.hpp"

namespace surf4 {

struct Domain
{
    double xmin = -1.0, xmax = 1.0, ymin = -1.0, ymax = 1.0;

    bool contains(double x, double y) const noexcept
    {
        return x >= xmin && x <= xmax && y >= ymin && y <= ymax;
    }
};

/// Throws std::invalid_argument unless xmin < xmax and ymin < ymax.
Domain make_domain(double xmin, double xmax, double ymin, double ymax);

struct SurfaceSpec
{
    Expr phi;
    Expr psi;
    Domain domain;
};

/// Surface from two expression strings; the domain defaults to [-1,1]^2.
SurfaceSpec make_surface(std::string_view phi, std::string_view psi, Domain domain = {});

/// Second fundamental form coefficients in the orthonormal frame.
template <class T>
struct SecondForm
{
    T a, b, c, e, f, g;
};

/// Metric data and second fundamental form computed from the first and
/// second partials of phi and psi. `T` is double or a Taylor2 jet, which
/// gives the coefficients together with their derivatives in (x,y).
template <class T>
struct MongeFrame
{
    T E, F, G, W;
    T Ehat, Fhat, Ghat;
    SecondForm<T> sff;
};

template <class T>
MongeFrame<T> monge_frame(const T& px, const T& py, const T& qx, const T& qy,
                          const T& pxx, const T& pxy, const T& pyy,
                          const T& qxx, const T& qxy, const T& qyy)
{
    using std::sqrt;
    MongeFrame<T> m;
    m.E = 1.0 + px * px + qx * qx;
    m.F = px * py + qx * qy;
    m.G = 1.0 + py * py + qy * qy;
    m.W = m.E * m.G - m.F * m.F;
    m.Ehat = 1.0 + px * px + py * py;
    m.Fhat = px * qx + py * qy;
    m.Ghat = 1.0 + qx * qx + qy * qy;

    const T& E = m.E;
    const T& F = m.F;
    const T& W = m.W;
    const T rEh = sqrt(m.Ehat);
    const T rW = sqrt(W);

    // Normal components of psi's Hessian after removing the N1 part.
    const T Pxx = m.Ehat * qxx - m.Fhat * pxx;
    const T Pxy = m.Ehat * qxy - m.Fhat * pxy;
    const T Pyy = m.Ehat * qyy - m.Fhat * pyy;

    auto& s = m.sff;
    s.a = pxx / (E * rEh);
    s.b = (E * pxy - F * pxx) / (E * rW * rEh);
    s.c = (E * E * pyy - 2.0 * E * F * pxy + F * F * pxx) / (E * W * rEh);
    s.e = Pxx / (E * rEh * rW);
    s.f = (E * Pxy - F * Pxx) / (E * W * rEh);
    s.g = (E * E * Pyy - 2.0 * E * F * Pxy + F * F * Pxx) / (E * W * rW * rEh);
    return m;
}

template <class T>
T gaussian_curvature(const SecondForm<T>& s)
{
    return (s.a * s.c - s.b * s.b) + (s.e * s.g - s.f * s.f);
}

template <class T>
T normal_curvature(const SecondForm<T>& s)
{
    return (s.a - s.c) * s.f - (s.e - s.g) * s.b;
}

/// Resultant of a x^2 + 2b xy + c y^2 and e x^2 + 2f xy + g y^2 in the
/// expanded form (ac - b^2)(eg - f^2) - (ag + ce - 2bf)^2 / 4.
template <class T>
T delta_expanded(const SecondForm<T>& s)
{
    const T q = s.a * s.g + s.c * s.e - 2.0 * s.b * s.f;
    return (s.a * s.c - s.b * s.b) * (s.e * s.g - s.f * s.f) - 0.25 * q * q;
}

/// Coefficients of the quadratic form N(x,y) = n0 x^2 + n1 xy + n2 y^2 whose
/// real roots are the asymptotic directions.
template <class T>
std::array<T, 3> asymptotic_quadratic(const SecondForm<T>& s)
{
    return {s.a * s.f - s.b * s.e, s.a * s.g - s.c * s.e, s.b * s.g - s.c * s.f};
}

struct LocalOptions
{
    /// Metric degeneracy threshold on W = EG - F^2.
    double eps_w = 1e-12;
    /// Throw GeometryError when the redundant formulas disagree; otherwise
    /// record the disagreement in LocalInvariants::warnings.
    bool strict = true;
    double tol_k = 1e-9;
    double tol_kappa = 1e-9;
    double tol_delta = 1e-9;
    double tol_w = 1e-10;
};

struct LocalInvariants
{
    double x = 0.0, y = 0.0;
    double E = 1.0, F = 0.0, G = 1.0, W = 1.0;
    double Ehat = 1.0, Fhat = 0.0, Ghat = 1.0;
    double a = 0.0, b = 0.0, c = 0.0, e = 0.0, f = 0.0, g = 0.0;

    double K = 0.0;          ///< (ac - b^2) + (eg - f^2)
    double K_hessian = 0.0;  ///< (Ehat H_psi - Fhat Q + Ghat H_phi) / W^2
    double kappa = 0.0;      ///< (a - c) f - (e - g) b
    double kappa_minors = 0.0;  ///< (E L - F M + G N) / W^2
    std::array<double, 2> H{};  ///< mean curvature vector in (e3, e4)
    double Delta = 0.0;         ///< expanded resultant
    double Delta_det = 0.0;     ///< 1/4 of the 4x4 Sylvester determinant
    double nq0 = 0.0, nq1 = 0.0, nq2 = 0.0;

    Jet3 phi_jet, psi_jet;

    std::vector<std::string> warnings;

    SecondForm<double> sff() const { return {a, b, c, e, f, g}; }

    /// Frobenius norm of [[a,b,c],[e,f,g]]; the natural scale of every
    /// curvature quantity at this point.
    double scale() const;

    double mean_curvature_squared() const { return H[0] * H[0] + H[1] * H[1]; }
};

LocalInvariants local_invariants(const SurfaceSpec& surface, double x, double y,
                                 const LocalOptions& options = {});

/// Same computation from jets already in hand.
LocalInvariants local_invariants_from_jets(const Jet3& phi, const Jet3& psi, double x, double y,
                                           const LocalOptions& options = {});

/// Intrinsic Gauss curvature from the first fundamental form alone
/// (Brioschi), with the metric's second derivatives taken from the jets.
double brioschi_curvature(const SurfaceSpec& surface, double x, double y, double eps_w = 1e-12);
double brioschi_curvature_from_jets(const Jet3& phi, const Jet3& psi, double eps_w = 1e-12);

/// One quarter of det [[a,2b,c,0],[e,2f,g,0],[0,a,2b,c],[0,e,2f,g]].
double delta_resultant(double a, double b, double c, double e, double f, double g);

/// |p - q| / max(|p|, |q|, scale), 0 when everything vanishes.
double relative_difference(double p, double q, double scale);

/// Order-1 jets of a..g at (x,y): values plus exact first derivatives.
SecondForm<Taylor2<1>> second_form_gradient(const SurfaceSpec& surface, double x, double y);

/// Exact gradient of Delta and kappa as scalar fields on the domain.
struct FieldGradients
{
    double Delta = 0.0, kappa = 0.0, K = 0.0;
    std::array<double, 2> grad_Delta{}, grad_kappa{};
    std::array<Taylor2<1>, 3> nq;  ///< asymptotic quadratic coefficients as order-1 jets
    double scale = 0.0;
};

FieldGradients field_gradients(const SurfaceSpec& surface, double x, double y);

/// Delta alone, for dense sampling.
double delta_at(const SurfaceSpec& surface, double x, double y);

/// a..g alone, without the redundant checks.
SecondForm<double> second_form_at(const SurfaceSpec& surface, double x, double y);

double frobenius_scale(const SecondForm<double>& s);

} // namespace surf4
