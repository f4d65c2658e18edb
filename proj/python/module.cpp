#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cremona/census.hpp"
#include "cremona/cli.hpp"
#include "cremona/text.hpp"

namespace py = pybind11;
using namespace cremona;

namespace {

py::object fraction(const mpq_class& q) { return py::module_::import("fractions").attr("Fraction")(q.get_str()); }

/// Accepts "1:2:3", "(1 : 2 : 3)" or a sequence of ints, Fractions or strings.
Vector to_point(const py::handle& obj, const Field& field) {
  if (py::isinstance<py::str>(obj)) return parse_point(obj.cast<std::string>(), field);
  std::string text;
  for (const auto& x : obj) {
    if (!text.empty()) text += ":";
    text += py::str(x).cast<std::string>();
  }
  return parse_point(text, field);
}

py::dict census_dict(const CensusReport& r) {
  py::dict d;
  d["mode"] = r.mode;
  d["n"] = r.n;
  d["d"] = r.d;
  d["p"] = r.p;
  d["total_classes"] = r.total_classes;
  d["examined"] = r.examined;
  d["birational"] = r.birational;
  py::dict strata;
  for (auto [deg, count] : r.strata) strata[py::int_(deg)] = count;
  d["strata"] = strata;
  d["certificate_failures"] = r.certificate_failures;
  d["partitions"] = r.partitions;
  if (r.seed) {
    d["seed"] = *r.seed;
    d["generator"] = r.generator;
  }
  d["seconds"] = r.seconds;
  return d;
}

ParametricFamily family_fixture(const std::string& name, const std::string& field, std::size_t n) {
  const Field f = Field::from_string(field);
  if (name == "pencil") return pencil_family(f, n);
  if (name == "nodal-cubic") return nodal_cubic_family(f, n);
  if (name == "nodal-lift") return nodal_cubic_pullback(f, n);
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(pycremona, m) {
  m.doc() = "Exact birational maps of projective space";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);

  py::class_<MapTuple>(m, "Tuple")
      .def(py::init([](const std::string& text, const std::string& field, std::size_t n) {
             return parse_tuple(text, Field::from_string(field), n);
           }),
           py::arg("text"), py::arg("field") = "q", py::arg("n") = 2)
      .def_property_readonly("n", &MapTuple::n)
      .def_property_readonly("degree", &MapTuple::degree)
      .def_property_readonly("field", [](const MapTuple& t) { return t.field().to_string(); })
      .def_property_readonly("components",
                             [](const MapTuple& t) {
                               std::vector<std::string> out;
                               for (const auto& c : t.components()) out.push_back(format_poly(c));
                               return out;
                             })
      .def("__eq__", [](const MapTuple& a, const MapTuple& b) { return a == b; })
      .def("__str__", &format_tuple)
      .def("__repr__", [](const MapTuple& t) { return "Tuple('" + format_tuple(t) + "')"; });

  py::class_<CremonaMap>(m, "CremonaMap")
      .def_property_readonly("forward", &CremonaMap::forward)
      .def_property_readonly("inverse", &CremonaMap::inverse)
      .def_property_readonly("cofactor", [](const CremonaMap& f) { return format_poly(f.certificate_cofactor()); })
      .def_property_readonly("inverse_cofactor", [](const CremonaMap& f) { return format_poly(f.inverse_cofactor()); })
      .def_property_readonly("degree", &CremonaMap::degree)
      .def_property_readonly("n", &CremonaMap::n)
      .def("verify", &CremonaMap::verify)
      .def("__eq__", [](const CremonaMap& a, const CremonaMap& b) { return a == b; })
      .def("__str__", [](const CremonaMap& f) { return format_tuple(f.forward()); })
      .def("__repr__", [](const CremonaMap& f) { return "CremonaMap('" + format_tuple(f.forward()) + "')"; });

  m.def("normalize", [](const MapTuple& t) {
    auto r = normalize(t);
    return py::make_tuple(r.reduced, format_poly(r.cofactor));
  });
  m.def("jacobian", [](const MapTuple& t) { return format_poly(jacobian_det(t.components())); });
  m.def("certify", &certify_birational, "Certified map with its inverse, or None");
  m.def("inverse", &inverse);
  m.def("compose", &compose, "f o g: apply g first");
  m.def("compose_tuples", [](const MapTuple& f, const MapTuple& g) { return substitute_tuple(f, g); });
  m.def("true_degree", py::overload_cast<const MapTuple&>(&true_degree));
  m.def("apply", [](const CremonaMap& f, const py::object& point) -> std::optional<std::string> {
    const auto img = apply_to_point(f, to_point(point, f.field()));
    if (!img) return std::nullopt;
    return format_point(*img);
  });
  m.def("distance_sq", [](const MapTuple& p, const MapTuple& q) { return fraction(distance_sq(p, q)); });
  m.def("fiber_distance_sq", [](const MapTuple& t, const MapTuple& g) { return fraction(fiber_distance_sq(t, g)); });

  py::class_<ParametricFamily>(m, "Family")
      .def(py::init([](const std::string& text, const std::string& field, std::size_t n) {
             return parse_family(text, Field::from_string(field), n);
           }),
           py::arg("text"), py::arg("field") = "q", py::arg("n") = 2)
      .def_static("fixture", &family_fixture, py::arg("name"), py::arg("field") = "q", py::arg("n") = 2)
      .def_property_readonly("param_count", &ParametricFamily::param_count)
      .def_property_readonly("degree", &ParametricFamily::degree)
      .def("specialize",
           [](const ParametricFamily& f, const py::object& point) { return specialize(f, to_point(point, f.field())); })
      .def("lift", [](const ParametricFamily& f,
                      const py::object& point) { return reduced_lift_at_point(f, to_point(point, f.field())); })
      .def("profile",
           [](const ParametricFamily& f, const py::list& points) {
             std::vector<Vector> pts;
             for (const auto& p : points) pts.push_back(to_point(p, f.field()));
             py::list out;
             for (const auto& e : degree_profile(f, pts).entries) {
               py::dict d;
               d["point"] = format_point(e.point);
               d["reduced_degree"] = e.reduced_degree;
               d["is_identity"] = e.is_identity;
               out.append(d);
             }
             return out;
           })
      .def("__str__", &ParametricFamily::to_string);

  m.def("phi_point", [](long u, long v) {
    const Field q = Field::rational();
    return format_point(phi_point(Scalar::from_int(q, u), Scalar::from_int(q, v)));
  });

  m.def(
      "enumerate_hd",
      [](std::size_t n, unsigned d, std::uint64_t p, unsigned partitions) {
        CensusReport r;
        {
          py::gil_scoped_release release;
          r = enumerate_hd(n, d, p, {.partitions = partitions});
        }
        return census_dict(r);
      },
      py::arg("n"), py::arg("d"), py::arg("p"), py::arg("partitions") = 1);
  m.def(
      "sample_random",
      [](std::size_t n, unsigned d, std::uint64_t p, std::uint64_t trials, std::uint64_t seed, unsigned partitions) {
        CensusReport r;
        {
          py::gil_scoped_release release;
          r = sample_random(n, d, p, trials, seed, {.partitions = partitions});
        }
        return census_dict(r);
      },
      py::arg("n"), py::arg("d"), py::arg("p"), py::arg("trials"), py::arg("seed"), py::arg("partitions") = 1);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
