#include "hypend/cli.hpp"
#include "hypend/disks.hpp"
#include "hypend/ends.hpp"
#include "hypend/expression.hpp"
#include "hypend/horoballs.hpp"
#include "hypend/kp.hpp"
#include "hypend/lorentz.hpp"
#include "hypend/schwarzian.hpp"
#include "hypend/surfaces.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hypend;

// Ideal points are Python numbers, with None (or "inf") for infinity.
namespace pybind11::detail {
template <>
struct type_caster<IdealPoint> {
  PYBIND11_TYPE_CASTER(IdealPoint, const_name("complex | None"));

  bool load(handle src, bool convert) {
    if (src.is_none()) {
      value = IdealPoint::infinity();
      return true;
    }
    if (py::isinstance<py::str>(src)) {
      if (src.cast<std::string>() != "inf") return false;
      value = IdealPoint::infinity();
      return true;
    }
    make_caster<Complex> c;
    if (!c.load(src, convert)) return false;
    value = IdealPoint(cast_op<Complex>(c));
    return true;
  }

  static handle cast(const IdealPoint& z, return_value_policy, handle) {
    if (z.is_infinite()) return py::none().release();
    return PyComplex_FromDoubles(z.value().real(), z.value().imag());
  }
};
}  // namespace pybind11::detail

namespace {

py::object ideal_to_py(const IdealPoint& z) { return py::cast(z); }

std::vector<Complex> coefficients(const Jet& j) { return {j.coefficients().begin(), j.coefficients().end()}; }

HolomorphicField field_of(const std::string& text) {
  const Expression e = Expression::parse(text);
  return HolomorphicField::from_function([e](const Jet& z) { return e.evaluate(z); });
}

py::dict forms_dict(const SurfaceData& d) {
  py::dict out;
  out["I"] = d.I;
  out["II"] = d.II;
  out["III"] = d.III;
  out["A"] = d.A;
  out["K"] = d.K;
  return out;
}

}  // namespace

PYBIND11_MODULE(_hypend, m) {
  m.doc() = "Hyperbolic ends, Kulkarni-Pinkall forms and the Schwarzian calculus";

  py::register_exception<GeometryError>(m, "GeometryError", PyExc_ValueError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

  // Lorentz core
  py::class_<HPoint>(m, "HPoint")
      .def(py::init<const MinkowskiVec&, double>(), py::arg("vec"), py::arg("tol") = 1e-10)
      .def_static("basepoint", &HPoint::basepoint)
      .def_static("from_uhs", [](Complex w, double h) { return from_uhs({w, h}); }, py::arg("w"), py::arg("h"))
      .def_static("from_klein", &from_klein)
      .def_property_readonly("vec", &HPoint::vec)
      .def("to_uhs", [](const HPoint& x) {
        const UhsPoint p = to_uhs(x);
        return py::make_tuple(p.w, p.h);
      })
      .def("to_klein", [](const HPoint& x) { return to_klein(x); });

  m.def("minkowski_inner", &minkowski_inner);
  m.def("ideal_lift", &ideal_lift);
  m.def("ideal_point_of_null", &ideal_point_of_null, py::arg("v"), py::arg("tol") = 1e-13);
  m.def("hyperbolic_distance", &hyperbolic_distance);
  m.def("chordal_distance", &chordal_distance);
  m.def("geodesic_point", &geodesic_point, py::arg("x"), py::arg("v"), py::arg("t"), py::arg("tol") = 1e-10);
  m.def("horizon", &horizon, py::arg("x"), py::arg("v"), py::arg("tol") = 1e-10);
  m.def("tangent_unit", &tangent_unit);
  m.def("model_convert", [](const Eigen::Vector4d& p, const std::string& from, const std::string& to) {
    return model_convert(p, parse_model(from), parse_model(to));
  });

  py::class_<MobiusMap>(m, "MobiusMap")
      .def(py::init<Complex, Complex, Complex, Complex>())
      .def_static("identity", &MobiusMap::identity)
      .def_property_readonly("coefficients", [](const MobiusMap& f) { return py::make_tuple(f.a(), f.b(), f.c(), f.d()); })
      .def("__call__", [](const MobiusMap& f, const IdealPoint& z) { return f(z); })
      .def("__mul__", &MobiusMap::operator*)
      .def("inverse", &MobiusMap::inverse);
  m.def("mobius_lift", &mobius_lift);
  m.def("apply", &apply);

  // Disks and horoballs
  py::class_<OrientedDisk>(m, "OrientedDisk")
      .def(py::init<const MinkowskiVec&, double>(), py::arg("pole"), py::arg("tol") = 1e-10)
      .def_property_readonly("pole", &OrientedDisk::pole)
      .def("reversed", &OrientedDisk::reversed)
      .def("transformed", [](const OrientedDisk& D, const MobiusMap& f) { return D.transformed(mobius_lift(f)); })
      .def("describe", [](const OrientedDisk& D) {
        const CircleDescription c = describe(D);
        py::dict out;
        out["is_line"] = c.is_line;
        if (c.is_line) {
          out["line"] = c.line;
        } else {
          out["center"] = c.center;
          out["radius"] = c.radius;
          out["side"] = c.side == CircleSide::interior ? "interior" : "exterior";
        }
        return out;
      });
  m.def(
      "disk_from_circle",
      [](Complex center, double radius, bool exterior) {
        return disk_from_circle(center, radius, exterior ? CircleSide::exterior : CircleSide::interior);
      },
      py::arg("center"), py::arg("radius"), py::arg("exterior") = false);
  m.def("disk_from_line", &disk_from_line, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("positive_side") = true);
  m.def(
      "disk_contains", [](const OrientedDisk& D, const IdealPoint& z) { return to_string(disk_contains(D, z)); });
  m.def(
      "disk_relation", [](const OrientedDisk& a, const OrientedDisk& b) { return to_string(disk_relation(a, b)); });
  m.def("disk_geodesic_arc", &disk_geodesic_arc);
  m.def("disk_area_form", &disk_area_form);
  m.def("halfspace_signed_distance", &halfspace_signed_distance);

  py::class_<Horoball>(m, "Horoball")
      .def_property_readonly("centre", [](const Horoball& B) { return ideal_to_py(B.centre()); })
      .def_property_readonly("curvature", &Horoball::curvature)
      .def("level", [](const Horoball& B, const HPoint& x) { return horoball_level(B, x); });
  m.def("horoball_make", &horoball_make);
  m.def("inscribed_horoball", &inscribed_horoball);

  // Kulkarni-Pinkall form
  py::class_<FiniteComplementDomain>(m, "FiniteComplementDomain")
      .def(py::init([](const std::vector<IdealPoint>& P) { return FiniteComplementDomain(P); }))
      .def("__len__", &FiniteComplementDomain::size)
      .def("classify", [](const FiniteComplementDomain& d) { return to_string(kp_classify(d)); });
  m.def("kp_form", [](const FiniteComplementDomain& d, const IdealPoint& x) { return kp_form(d, x); });
  m.def("kp_max_disk", [](const FiniteComplementDomain& d, const IdealPoint& x) {
    const MaxDisk md = kp_max_disk(d, x);
    return py::make_tuple(md.disk, md.support, md.form);
  });

  // Ends
  py::class_<EndOverDomain>(m, "EndOverDomain")
      .def(py::init([](const std::vector<IdealPoint>& P) { return EndOverDomain(FiniteComplementDomain(P)); }))
      .def("height", [](const EndOverDomain& E, const HPoint& x) { return end_height(E, x); })
      .def("project",
           [](const EndOverDomain& E, const HPoint& x) {
             const EndProjection p = end_project(E, x);
             py::dict out;
             out["foot"] = p.foot;
             out["ideal"] = ideal_to_py(p.ideal);
             out["gradient"] = p.gradient;
             out["height"] = p.support.height;
             return out;
           })
      .def("trace",
           [](const EndOverDomain& E, const HPoint& x, const MinkowskiVec& v, double t_max, double dt) {
             const RayTrace tr = end_trace_geodesic(E, x, v, t_max, dt);
             py::list samples;
             for (const RaySample& s : tr.samples) {
               py::dict d;
               d["t"] = s.t;
               d["height"] = s.height;
               d["vertical_speed"] = s.vertical_speed;
               d["horizontal_speed"] = s.horizontal_speed;
               samples.append(d);
             }
             return samples;
           })
      .def("hessian_probe",
           [](const EndOverDomain& E, const HPoint& x, const MinkowskiVec& xi, double eps) {
             const HessianProbe p = end_hessian_probe(E, x, xi, eps);
             return py::make_tuple(p.value, p.ridge);
           })
      .def("horoball_check", [](const EndOverDomain& E, const HPoint& x) {
        const HoroballCheck c = end_horoball_check(E, x);
        py::dict out;
        out["inside"] = c.inside;
        out["level"] = c.level;
        out["centre"] = ideal_to_py(c.centre);
        out["curvature"] = c.curvature;
        return out;
      });

  // Schwarzian
  m.def(
      "taylor",
      [](const std::string& expr, Complex at, std::size_t order) {
        return coefficients(Expression::parse(expr).evaluate(Jet::variable(at, order)));
      },
      py::arg("expr"), py::arg("at"), py::arg("order") = 8);
  m.def(
      "schwarzian",
      [](const std::string& expr, Complex at, std::size_t order) {
        return coefficients(schwarzian_jet(Expression::parse(expr).evaluate(Jet::variable(at, order + 3))));
      },
      py::arg("expr"), py::arg("at"), py::arg("order") = 8);
  m.def(
      "schwarzian_solve",
      [](const std::string& field, const std::vector<Complex>& path, Complex z0, Complex value, Complex first,
         Complex second) {
        const SchwarzianSolution s = schwarzian_solve(field_of(field), path, {z0, value, first, second});
        py::list out;
        for (const PathSample& v : s.vertices) {
          py::dict d;
          d["z"] = v.z;
          d["phi"] = ideal_to_py(v.phi);
          d["wronskian_drift"] = v.wronskian_drift;
          out.append(d);
        }
        return out;
      },
      py::arg("field"), py::arg("path"), py::arg("z0"), py::arg("value"), py::arg("first"), py::arg("second"));

  // Surfaces
  py::class_<ExplicitSurface>(m, "ExplicitSurface")
      .def_static("plane_equidistant", &ExplicitSurface::plane_equidistant)
      .def_static("horosphere",
                  [](const Horoball& B, bool inward) {
                    return ExplicitSurface::horosphere(B, inward ? HoroOrientation::inward : HoroOrientation::outward);
                  },
                  py::arg("horoball"), py::arg("inward") = false)
      .def_static("cylinder", &ExplicitSurface::cylinder)
      .def_property_readonly("family", [](const ExplicitSurface& S) { return to_string(S.family()); })
      .def("transformed", &ExplicitSurface::transformed)
      .def("offset_by", &ExplicitSurface::offset_by)
      .def("point", &ExplicitSurface::point)
      .def("forms", [](const ExplicitSurface& S, const Eigen::Vector2d& u) { return forms_dict(surface_forms(S, u)); })
      .def("gauss_map", [](const ExplicitSurface& S, const Eigen::Vector2d& u) { return ideal_to_py(surface_gauss_map(S, u)); })
      .def(
          "schwarzian",
          [](const ExplicitSurface& S, const Eigen::Vector2d& u, std::size_t order) {
            return coefficients(surface_schwarzian(S, u, order));
          },
          py::arg("u"), py::arg("order") = 8)
      .def(
          "apriori_check",
          [](const ExplicitSurface& S, double r, std::size_t n_radial, std::size_t n_angular) {
            const AprioriReport rep = surface_apriori_check(S, equidistant_grid(S, n_radial, n_angular), r);
            py::dict out;
            out["curvature_ok"] = rep.curvature_ok;
            out["halfspace_ok"] = rep.halfspace_ok;
            out["horoball_ok"] = rep.horoball_ok;
            out["max_halfspace_excess"] = rep.max_halfspace_excess;
            out["max_full_disk_gap"] = rep.max_full_disk_gap;
            out["min_horoball_level"] = rep.min_horoball_level;
            return out;
          },
          py::arg("r"), py::arg("n_radial") = 10, py::arg("n_angular") = 10);
  m.def(
      "shape_flow",
      [](const Eigen::Matrix2d& A0, double t, const std::string& method) {
        if (method != "closed_form" && method != "rk4") throw std::invalid_argument("method must be closed_form or rk4");
        const ShapeFlowResult r = shape_flow(A0, t, method == "rk4" ? FlowMethod::rk4 : FlowMethod::closed_form);
        return py::make_tuple(r.A, r.K);
      },
      py::arg("A0"), py::arg("t"), py::arg("method") = "closed_form");

  // Command layer
  m.def(
      "execute",
      [](const std::string& request, std::optional<double> tol, std::optional<std::uint64_t> seed,
         std::optional<long long> samples) {
        const cli::Outcome o = cli::execute(request, {tol, seed, samples});
        return py::make_tuple(o.exit_code, o.output, o.csv);
      },
      py::arg("request"), py::arg("tol") = py::none(), py::arg("seed") = py::none(), py::arg("samples") = py::none());
  m.def("schema", &cli::schema);
}
