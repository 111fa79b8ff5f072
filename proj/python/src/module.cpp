#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "surf4/heightfn.hpp"
#include "surf4/report.hpp"
#include "surf4/surface_file.hpp"
#include "surf4/svg.hpp"

namespace py = pybind11;
using namespace surf4;

namespace {

py::tuple direction(const Vec2& v) { return py::make_tuple(v(0), v(1)); }

Domain domain_from(const py::object& obj)
{
    if (obj.is_none())
        return Domain{};
    const auto t = obj.cast<std::tuple<double, double, double, double>>();
    return make_domain(std::get<0>(t), std::get<1>(t), std::get<2>(t), std::get<3>(t));
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Second-order geometry of surfaces in R^4 given in Monge form";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", error.ptr());
    py::register_exception<EvalError>(m, "EvalError", error.ptr());
    py::register_exception<GeometryError>(m, "GeometryError", error.ptr());
    py::register_exception<SurfaceFileError>(m, "SurfaceFileError", error.ptr());

    py::class_<SurfaceSpec>(m, "Surface")
        .def(py::init([](const std::string& phi, const std::string& psi, const py::object& domain) {
                 return make_surface(phi, psi, domain_from(domain));
             }),
             py::arg("phi"), py::arg("psi"), py::arg("domain") = py::none())
        .def_property_readonly("phi", [](const SurfaceSpec& s) { return to_string(s.phi); })
        .def_property_readonly("psi", [](const SurfaceSpec& s) { return to_string(s.psi); })
        .def_property_readonly("domain", [](const SurfaceSpec& s) {
            return py::make_tuple(s.domain.xmin, s.domain.xmax, s.domain.ymin, s.domain.ymax);
        });

    m.def("parse_surface_text", &parse_surface_text, py::arg("text"));
    m.def("parse_surface_file", &parse_surface_file, py::arg("path"));
    m.def("evaluate", [](const std::string& expr, double x, double y) {
        return evaluate(parse_expression(expr), x, y);
    }, py::arg("expr"), py::arg("x"), py::arg("y"));

    py::class_<LocalInvariants>(m, "LocalInvariants")
        .def_readonly("x", &LocalInvariants::x)
        .def_readonly("y", &LocalInvariants::y)
        .def_readonly("E", &LocalInvariants::E)
        .def_readonly("F", &LocalInvariants::F)
        .def_readonly("G", &LocalInvariants::G)
        .def_readonly("W", &LocalInvariants::W)
        .def_readonly("Ehat", &LocalInvariants::Ehat)
        .def_readonly("Fhat", &LocalInvariants::Fhat)
        .def_readonly("Ghat", &LocalInvariants::Ghat)
        .def_readonly("a", &LocalInvariants::a)
        .def_readonly("b", &LocalInvariants::b)
        .def_readonly("c", &LocalInvariants::c)
        .def_readonly("e", &LocalInvariants::e)
        .def_readonly("f", &LocalInvariants::f)
        .def_readonly("g", &LocalInvariants::g)
        .def_readonly("K", &LocalInvariants::K)
        .def_readonly("K_hessian", &LocalInvariants::K_hessian)
        .def_readonly("kappa", &LocalInvariants::kappa)
        .def_readonly("kappa_minors", &LocalInvariants::kappa_minors)
        .def_property_readonly("H", [](const LocalInvariants& i) { return py::make_tuple(i.H[0], i.H[1]); })
        .def_readonly("Delta", &LocalInvariants::Delta)
        .def_readonly("Delta_det", &LocalInvariants::Delta_det)
        .def_property_readonly("nq", [](const LocalInvariants& i) { return py::make_tuple(i.nq0, i.nq1, i.nq2); })
        .def_readonly("warnings", &LocalInvariants::warnings)
        .def_property_readonly("scale", &LocalInvariants::scale);

    m.def("local_invariants", [](const SurfaceSpec& s, double x, double y, bool strict) {
        LocalOptions opt;
        opt.strict = strict;
        return local_invariants(s, x, y, opt);
    }, py::arg("surface"), py::arg("x"), py::arg("y"), py::arg("strict") = true);
    m.def("brioschi_curvature", [](const SurfaceSpec& s, double x, double y) {
        return brioschi_curvature(s, x, y);
    }, py::arg("surface"), py::arg("x"), py::arg("y"));

    py::class_<PointClassification>(m, "PointClassification")
        .def_property_readonly("kind", [](const PointClassification& p) { return std::string(to_string(p.kind)); })
        .def_property_readonly("inflection_type", [](const PointClassification& p) -> py::object {
            if (!p.inflection_type)
                return py::none();
            return py::str(std::string(to_string(*p.inflection_type)));
        })
        .def_readonly("is_circle", &PointClassification::is_circle)
        .def_readonly("is_minimal", &PointClassification::is_minimal)
        .def_readonly("is_umbilic", &PointClassification::is_umbilic)
        .def_readonly("rank_m", &PointClassification::rank_m)
        .def_property_readonly("label", &PointClassification::label);

    m.def("classify_point", [](const LocalInvariants& inv) { return classify_point(inv); }, py::arg("inv"));
    m.def("asymptotic_directions", [](const LocalInvariants& inv) {
        py::list out;
        for (const Vec2& d : asymptotic_directions(inv))
            out.append(direction(d));
        return out;
    }, py::arg("inv"));
    m.def("binormals", [](const LocalInvariants& inv) {
        py::list out;
        for (const Binormal& b : binormals(inv))
            out.append(py::make_tuple(direction(b.asymptotic), direction(b.normal)));
        return out;
    }, py::arg("inv"), "List of (asymptotic direction, binormal) pairs.");
    m.def("hessian_of_delta", &hessian_of_delta, py::arg("surface"), py::arg("x"), py::arg("y"),
          py::arg("h") = 1e-4);

    m.def("wintgen_gap", &wintgen_gap, py::arg("inv"));
    m.def("indicatrix_polygon_area", &indicatrix_polygon_area, py::arg("inv"), py::arg("samples") = 256);
    m.def("eta", &eta, py::arg("inv"), py::arg("theta"));
    m.def("evolvent_point", &evolvent_point, py::arg("inv"), py::arg("theta"));
    m.def("semi_axes", [](const LocalInvariants& inv) {
        const Indicatrix ind = indicatrix(inv);
        return py::make_tuple(ind.semi_axis_major, ind.semi_axis_minor);
    }, py::arg("inv"));
    m.def("indicatrix_conic", [](const LocalInvariants& inv) {
        const Conic c = indicatrix_conic(indicatrix(inv));
        return py::make_tuple(Mat3(c.m), std::string(to_string(c.kind)));
    }, py::arg("inv"), "(matrix, kind) of the curvature ellipse.");
    m.def("characteristic_conic", [](const LocalInvariants& inv) {
        const Conic c = characteristic_conic(indicatrix(inv));
        return py::make_tuple(Mat3(c.m), std::string(to_string(c.kind)));
    }, py::arg("inv"), "(matrix, kind) of the polar conjugate of the indicatrix.");
    m.def("canonical_coefficients", [](const LocalInvariants& inv) {
        const CanonicalCoefficients cc = canonical_coefficients(inv);
        return py::make_tuple(cc.a, cc.c, cc.e, cc.f);
    }, py::arg("inv"), "(a, c, e, f) in the canonical frame.");

    m.def("trace_parabolic", [](const SurfaceSpec& s, int res) {
        const PolylineSet set = trace_parabolic(s, res);
        py::list out;
        for (const Polyline& line : set.polylines) {
            py::list pts;
            for (const Vec2& p : line.points)
                pts.append(direction(p));
            out.append(py::dict(py::arg("points") = pts, py::arg("residual") = line.residual,
                                py::arg("closed") = line.closed));
        }
        return out;
    }, py::arg("surface"), py::arg("res") = kDefaultResolution);
    m.def("find_inflections", [](const SurfaceSpec& s, int res) {
        py::list out;
        for (const InflectionReport& r : find_inflections(s, res))
            out.append(py::dict(py::arg("x") = r.location(0), py::arg("y") = r.location(1),
                                py::arg("type") = std::string(to_string(r.type)), py::arg("K") = r.K,
                                py::arg("det_hessian_delta") = r.det_hessian_delta,
                                py::arg("residual") = r.residual));
        return out;
    }, py::arg("surface"), py::arg("res") = kDefaultResolution);

    m.def("degenerate_normals", [](const LocalInvariants& inv) {
        py::list out;
        for (const Vec2& n : degenerate_normals(inv))
            out.append(direction(n));
        return out;
    }, py::arg("inv"));
    m.def("classify_height", [](const SurfaceSpec& s, double x, double y, std::pair<double, double> n) {
        const HeightSingularity h = classify_height(s, x, y, Vec2(n.first, n.second));
        py::dict out;
        out["kind"] = std::string(to_string(h.kind));
        out["kernel_direction"] = h.kernel_direction ? py::object(direction(*h.kernel_direction)) : py::none();
        out["third_order_coefficient"] = h.third_order_coefficient;
        return out;
    }, py::arg("surface"), py::arg("x"), py::arg("y"), py::arg("normal"));

    m.def("analyze", [](const SurfaceSpec& s, double x, double y) { return analyze_record(s, x, y); },
          py::arg("surface"), py::arg("x"), py::arg("y"), "Ordered (key, value) pairs, as printed by the tool.");
    m.def("grid_csv", [](const SurfaceSpec& s, int res) { return grid_csv(s, res); }, py::arg("surface"),
          py::arg("res"));
    m.def("plot_svg", [](const SurfaceSpec& s, double x, double y) {
        return render_svg(build_plot(local_invariants(s, x, y)));
    }, py::arg("surface"), py::arg("x"), py::arg("y"));
}
