#include "surf4/localgeom.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "surf4/format.hpp"

namespace surf4 {

namespace {

std::string at_point(double x, double y)
{
    return " at (" + format_real(x) + ", " + format_real(y) + ")";
}

template <int N>
MongeFrame<double> frame_from_jets(const Taylor2<N>& phi, const Taylor2<N>& psi)
{
    return monge_frame<double>(phi.fx(), phi.fy(), psi.fx(), psi.fy(),
                               phi.fxx(), phi.fxy(), phi.fyy(),
                               psi.fxx(), psi.fxy(), psi.fyy());
}

void check_metric(double W, double eps_w, double x, double y)
{
    if (!(W > eps_w))
        throw GeometryError(GeometryError::Reason::DegenerateMetric,
                            "degenerate metric (W = " + format_real(W) + ")" + at_point(x, y));
}

void reconcile(LocalInvariants& inv, const LocalOptions& opt, const char* what,
               double p, double q, double scale, double tol)
{
    const double rel = relative_difference(p, q, scale);
    if (rel <= tol)
        return;
    std::string msg = std::string(what) + " formulas disagree: " + format_real(p) + " vs " +
                      format_real(q) + " (relative " + format_real(rel) + ")" + at_point(inv.x, inv.y);
    if (opt.strict)
        throw GeometryError(GeometryError::Reason::InconsistentFormulas, msg);
    inv.warnings.push_back(std::move(msg));
}

double det2(double a, double b, double c, double d) { return a * d - b * c; }

} // namespace

Domain make_domain(double xmin, double xmax, double ymin, double ymax)
{
    if (!(xmin < xmax))
        throw std::invalid_argument("empty interval: xmin must be less than xmax");
    if (!(ymin < ymax))
        throw std::invalid_argument("empty interval: ymin must be less than ymax");
    return Domain{xmin, xmax, ymin, ymax};
}

SurfaceSpec make_surface(std::string_view phi, std::string_view psi, Domain domain)
{
    return SurfaceSpec{parse_expression(phi), parse_expression(psi), domain};
}

double LocalInvariants::scale() const
{
    return std::sqrt(a * a + b * b + c * c + e * e + f * f + g * g);
}

double relative_difference(double p, double q, double scale)
{
    const double denom = std::max({std::abs(p), std::abs(q), std::abs(scale)});
    if (denom == 0.0)
        return 0.0;
    return std::abs(p - q) / denom;
}

double delta_resultant(double a, double b, double c, double e, double f, double g)
{
    Eigen::Matrix4d m;
    m << a, 2 * b, c, 0,
         e, 2 * f, g, 0,
         0, a, 2 * b, c,
         0, e, 2 * f, g;
    return 0.25 * m.determinant();
}

LocalInvariants local_invariants_from_jets(const Jet3& phi, const Jet3& psi, double x, double y,
                                           const LocalOptions& opt)
{
    LocalInvariants inv;
    inv.x = x;
    inv.y = y;
    inv.phi_jet = phi;
    inv.psi_jet = psi;

    const MongeFrame<double> m = frame_from_jets(phi, psi);
    check_metric(m.W, opt.eps_w, x, y);

    inv.E = m.E;
    inv.F = m.F;
    inv.G = m.G;
    inv.W = m.W;
    inv.Ehat = m.Ehat;
    inv.Fhat = m.Fhat;
    inv.Ghat = m.Ghat;
    inv.a = m.sff.a;
    inv.b = m.sff.b;
    inv.c = m.sff.c;
    inv.e = m.sff.e;
    inv.f = m.sff.f;
    inv.g = m.sff.g;

    const double pxx = phi.fxx(), pxy = phi.fxy(), pyy = phi.fyy();
    const double qxx = psi.fxx(), qxy = psi.fxy(), qyy = psi.fyy();
    const double W2 = m.W * m.W;

    inv.K = gaussian_curvature(m.sff);
    const double h_phi = det2(pxx, pxy, pxy, pyy);
    const double h_psi = det2(qxx, qxy, qxy, qyy);
    const double Q = det2(pxx, pxy, qxy, qyy) - det2(pxy, pyy, qxx, qxy);
    inv.K_hessian = (m.Ehat * h_psi - m.Fhat * Q + m.Ghat * h_phi) / W2;

    inv.kappa = normal_curvature(m.sff);
    const double L = det2(pxy, pyy, qxy, qyy);
    const double M = det2(pxx, pyy, qxx, qyy);
    const double N = det2(pxx, pxy, qxx, qxy);
    inv.kappa_minors = (m.E * L - m.F * M + m.G * N) / W2;

    inv.H = {0.5 * (inv.a + inv.c), 0.5 * (inv.e + inv.g)};
    inv.Delta = delta_expanded(m.sff);
    inv.Delta_det = delta_resultant(inv.a, inv.b, inv.c, inv.e, inv.f, inv.g);
    const auto nq = asymptotic_quadratic(m.sff);
    inv.nq0 = nq[0];
    inv.nq1 = nq[1];
    inv.nq2 = nq[2];

    const double s = inv.scale();
    reconcile(inv, opt, "Gaussian curvature", inv.K, inv.K_hessian, s * s, opt.tol_k);
    reconcile(inv, opt, "normal curvature", inv.kappa, inv.kappa_minors, s * s, opt.tol_kappa);
    reconcile(inv, opt, "Delta", inv.Delta, inv.Delta_det, s * s * s * s, opt.tol_delta);
    reconcile(inv, opt, "normal Gram determinant",
              m.Ehat * m.Ghat - m.Fhat * m.Fhat, m.W, m.W, opt.tol_w);
    return inv;
}

LocalInvariants local_invariants(const SurfaceSpec& surface, double x, double y, const LocalOptions& opt)
{
    return local_invariants_from_jets(eval_jet3(surface.phi, x, y), eval_jet3(surface.psi, x, y), x, y, opt);
}

double brioschi_curvature_from_jets(const Jet3& phi, const Jet3& psi, double eps_w)
{
    // First fundamental form as order-2 jets.
    const Taylor2<2> px = phi.dx(), py = phi.dy(), qx = psi.dx(), qy = psi.dy();
    const Taylor2<2> E = 1.0 + px * px + qx * qx;
    const Taylor2<2> F = px * py + qx * qy;
    const Taylor2<2> G = 1.0 + py * py + qy * qy;

    const double e = E.value(), f = F.value(), g = G.value();
    const double W = e * g - f * f;
    if (!(W > eps_w))
        throw GeometryError(GeometryError::Reason::DegenerateMetric,
                            "degenerate metric (W = " + format_real(W) + ")");

    Eigen::Matrix3d m1;
    m1 << -0.5 * E.fyy() + F.fxy() - 0.5 * G.fxx(), 0.5 * E.fx(), F.fx() - 0.5 * E.fy(),
          F.fy() - 0.5 * G.fx(), e, f,
          0.5 * G.fy(), f, g;
    Eigen::Matrix3d m2;
    m2 << 0.0, 0.5 * E.fy(), 0.5 * G.fx(),
          0.5 * E.fy(), e, f,
          0.5 * G.fx(), f, g;
    return (m1.determinant() - m2.determinant()) / (W * W);
}

double brioschi_curvature(const SurfaceSpec& surface, double x, double y, double eps_w)
{
    try {
        return brioschi_curvature_from_jets(eval_jet3(surface.phi, x, y), eval_jet3(surface.psi, x, y), eps_w);
    } catch (const GeometryError& err) {
        throw GeometryError(err.reason(), err.what() + at_point(x, y));
    }
}

SecondForm<Taylor2<1>> second_form_gradient(const SurfaceSpec& surface, double x, double y)
{
    const Jet3 phi = eval_jet3(surface.phi, x, y);
    const Jet3 psi = eval_jet3(surface.psi, x, y);
    const Taylor2<2> p1 = phi.dx(), p2 = phi.dy(), q1 = psi.dx(), q2 = psi.dy();
    const auto mf = monge_frame<Taylor2<1>>(
        p1.truncate<1>(), p2.truncate<1>(), q1.truncate<1>(), q2.truncate<1>(),
        p1.dx(), p1.dy(), p2.dy(), q1.dx(), q1.dy(), q2.dy());
    check_metric(mf.W.value(), 1e-12, x, y);
    return mf.sff;
}

FieldGradients field_gradients(const SurfaceSpec& surface, double x, double y)
{
    const SecondForm<Taylor2<1>> s = second_form_gradient(surface, x, y);
    const Taylor2<1> delta = delta_expanded(s);
    const Taylor2<1> kappa = normal_curvature(s);
    FieldGradients out;
    out.Delta = delta.value();
    out.kappa = kappa.value();
    out.K = gaussian_curvature(s).value();
    out.grad_Delta = {delta.fx(), delta.fy()};
    out.grad_kappa = {kappa.fx(), kappa.fy()};
    out.nq = asymptotic_quadratic(s);
    const double a = s.a.value(), b = s.b.value(), c = s.c.value();
    const double e = s.e.value(), f = s.f.value(), g = s.g.value();
    out.scale = std::sqrt(a * a + b * b + c * c + e * e + f * f + g * g);
    return out;
}

double delta_at(const SurfaceSpec& surface, double x, double y)
{
    return delta_expanded(second_form_at(surface, x, y));
}

SecondForm<double> second_form_at(const SurfaceSpec& surface, double x, double y)
{
    const Jet3 phi = eval_jet3(surface.phi, x, y);
    const Jet3 psi = eval_jet3(surface.psi, x, y);
    const MongeFrame<double> m = frame_from_jets(phi, psi);
    check_metric(m.W, 1e-12, x, y);
    return m.sff;
}

double frobenius_scale(const SecondForm<double>& s)
{
    return std::sqrt(s.a * s.a + s.b * s.b + s.c * s.c + s.e * s.e + s.f * s.f + s.g * s.g);
}

} // namespace surf4
