#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "integra/charpoly.hpp"
#include "integra/errors.hpp"
#include "integra/families.hpp"
#include "integra/jsonio.hpp"
#include "integra/poly.hpp"
#include "integra/tree.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// mpz_class <-> Python int, round-tripped through decimal strings.
template <>
struct type_caster<integra::BigInt> {
 public:
  PYBIND11_TYPE_CASTER(integra::BigInt, const_name("int"));

  bool load(handle src, bool) {
    PyObject* ptr = src.ptr();
    if (!PyLong_Check(ptr)) return false;
    PyObject* str = PyObject_Str(ptr);
    if (!str) {
      PyErr_Clear();
      return false;
    }
    const char* text = PyUnicode_AsUTF8(str);
    if (!text) {
      Py_DECREF(str);
      PyErr_Clear();
      return false;
    }
    value = integra::BigInt(text, 10);
    Py_DECREF(str);
    return true;
  }

  static handle cast(const integra::BigInt& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

using namespace integra;

CsikvariParams c_params(std::vector<BigInt> radii) {
  return CsikvariParams::of(std::move(radii));
}

OddTreeParams t_params(BigInt r, BigInt r0, std::vector<BigInt> radii) {
  return OddTreeParams::of(std::move(r), std::move(r0), std::move(radii));
}

TreeFormat parse_format(const std::string& name) {
  if (name == "edge-list") return TreeFormat::edge_list;
  if (name == "dot") return TreeFormat::dot;
  throw param_error("unknown format '" + name + "' (expected edge-list or dot)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact spectra and certified integral trees of odd diameter";

  py::class_<RootedTree>(m, "RootedTree")
      .def_static("single", &RootedTree::single)
      .def_static("from_children", &RootedTree::from_children,
                  py::arg("children"), py::arg("root") = 0)
      .def_property_readonly("vertex_count", &RootedTree::vertex_count)
      .def_property_readonly("root", &RootedTree::root)
      .def("children",
           [](const RootedTree& t, RootedTree::Vertex v) {
             auto span = t.children(v);
             return std::vector<RootedTree::Vertex>(span.begin(), span.end());
           })
      .def("parent", &RootedTree::parent)
      .def("edges", &RootedTree::edges)
      .def("diameter", [](const RootedTree& t) { return diameter(t); })
      .def("root_height", [](const RootedTree& t) { return root_height(t); })
      .def("serialize",
           [](const RootedTree& t, const std::string& format) {
             return serialize(t, parse_format(format));
           },
           py::arg("format") = "edge-list")
      .def("delete_root", [](const RootedTree& t) { return delete_root(t); })
      .def(py::self == py::self)
      .def("__repr__", [](const RootedTree& t) {
        return "<RootedTree with " + std::to_string(t.vertex_count()) + " vertices>";
      });

  py::class_<IntPoly>(m, "IntPoly")
      .def(py::init([](const std::vector<BigInt>& coeffs) {
             return IntPoly(std::vector<BigInt>(coeffs));
           }),
           py::arg("coefficients"))
      .def_static("x", &IntPoly::x)
      .def_static("one", &IntPoly::one)
      .def_static("monomial", &IntPoly::monomial, py::arg("k"),
                  py::arg("coeff") = BigInt(1))
      .def_static("quadratic", &IntPoly::quadratic)
      .def_property_readonly("degree", &IntPoly::degree)
      .def("coefficients", [](const IntPoly& p) { return p.coeffs(); })
      .def("is_monic", &IntPoly::is_monic)
      .def("__call__", [](const IntPoly& p, const BigInt& v) { return p(v); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("pow", &IntPoly::pow)
      .def("shifted", &IntPoly::shifted)
      .def("__str__", &IntPoly::to_string)
      .def("__repr__",
           [](const IntPoly& p) { return "IntPoly(" + p.to_string() + ")"; });

  m.def("exact_div", &exact_div, py::arg("a"), py::arg("b"));
  m.def("integer_root_split", [](const IntPoly& p) {
    RootSplit s = integer_root_split(p);
    return py::make_tuple(s.roots, s.remainder);
  });
  m.def("is_perfect_square", [](const BigInt& v) -> std::optional<BigInt> {
    return is_perfect_square(v);
  });

  py::class_<FactoredSpectrum>(m, "FactoredSpectrum")
      .def(py::init<>())
      .def_static("x_power", &FactoredSpectrum::x_power)
      .def_static("quadratic", &FactoredSpectrum::quadratic, py::arg("rho"),
                  py::arg("e") = BigInt(1))
      .def_static("residual", &FactoredSpectrum::residual, py::arg("p"),
                  py::arg("e") = BigInt(1))
      .def_property_readonly("x_exp", &FactoredSpectrum::x_exp)
      .def("quad_factors",
           [](const FactoredSpectrum& f) {
             return std::map<BigInt, BigInt>(f.quad_factors());
           })
      .def("residuals",
           [](const FactoredSpectrum& f) { return f.residuals(); })
      .def("degree", &FactoredSpectrum::degree)
      .def("expandable", &FactoredSpectrum::expandable)
      .def("expand", &FactoredSpectrum::expand)
      .def("pow", &FactoredSpectrum::pow)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__str__", &FactoredSpectrum::to_string)
      .def("__repr__", [](const FactoredSpectrum& f) {
        return "FactoredSpectrum(" + f.to_string() + ")";
      });

  // tree construction
  m.def("attach", &attach, py::arg("t1"), py::arg("n"), py::arg("t2"),
        py::arg("max_vertices") = kDefaultMaxVertices);
  m.def("build_c",
        [](std::vector<BigInt> radii, std::size_t max_vertices) {
          return build_c(c_params(std::move(radii)), max_vertices);
        },
        py::arg("radii"), py::arg("max_vertices") = kDefaultMaxVertices);
  m.def("build_t",
        [](BigInt r, BigInt r0, std::vector<BigInt> radii, std::size_t max_vertices) {
          return build_t(t_params(std::move(r), std::move(r0), std::move(radii)),
                         max_vertices);
        },
        py::arg("r"), py::arg("r0"), py::arg("radii"),
        py::arg("max_vertices") = kDefaultMaxVertices);
  m.def("vertex_count_c", [](std::vector<BigInt> radii) {
    return vertex_count_c(c_params(std::move(radii)));
  });
  m.def("vertex_count_t", [](BigInt r, BigInt r0, std::vector<BigInt> radii) {
    return vertex_count_t(t_params(std::move(r), std::move(r0), std::move(radii)));
  });
  m.def("delete_root", &delete_root);
  m.def("diameter", &diameter);
  m.def("root_height", &root_height);
  m.def("serialize", [](const RootedTree& t, const std::string& format) {
    return serialize(t, parse_format(format));
  });

  // characteristic polynomials
  m.def("charpoly_join", &charpoly_join, py::arg("p1"), py::arg("p1_root_deleted"),
        py::arg("p2"), py::arg("p2_root_deleted"), py::arg("n"));
  m.def("charpoly_c_factored", [](std::vector<BigInt> radii) {
    return charpoly_c_factored(c_params(std::move(radii)));
  });
  m.def("charpoly_c_root_deleted", [](std::vector<BigInt> radii) {
    return charpoly_c_root_deleted(c_params(std::move(radii)));
  });
  m.def("f_of_c", [](std::vector<BigInt> radii) {
    return f_of_c(c_params(std::move(radii)));
  });
  m.def("psi_odd", &psi_odd);
  m.def("psi_even", &psi_even);
  m.def("charpoly_t_factored", [](BigInt r, BigInt r0, std::vector<BigInt> radii) {
    return charpoly_t_factored(t_params(std::move(r), std::move(r0), std::move(radii)));
  });
  m.def("oracle_charpoly", &oracle_charpoly, py::arg("tree"),
        py::arg("max_vertices") = kDefaultOracleMaxVertices);
  m.def("distinct_eigenvalues", [](std::vector<BigInt> radii) {
    return distinct_eigenvalues(c_params(std::move(radii)));
  });

  py::class_<SpectrumReport>(m, "SpectrumReport")
      .def_readonly("integral", &SpectrumReport::integral)
      .def_property_readonly("multiplicities",
                             [](const SpectrumReport& r) {
                               return std::map<BigInt, BigInt>(r.multiplicities);
                             })
      .def_property_readonly("residual_factors",
                             [](const SpectrumReport& r) {
                               return r.residual_factors;
                             })
      .def_readonly("degree", &SpectrumReport::degree)
      .def("to_json", [](const SpectrumReport& r) { return report_json(r).dump(); })
      .def("__repr__", [](const SpectrumReport& r) {
        return std::string("<SpectrumReport integral=") +
               (r.integral ? "True" : "False") + " degree=" + r.degree.get_str() +
               ">";
      });
  m.def("spectrum_report", &spectrum_report, py::arg("factored"),
        py::arg("expected_degree"));

  // families
  m.def("pell_solutions", [](std::size_t count) {
    std::vector<std::pair<BigInt, BigInt>> out;
    for (const auto& s : pell_solutions(count)) out.emplace_back(s.x, s.y);
    return out;
  });
  m.def("valid_a_values", &valid_a_values);
  m.def("pick_squares", &pick_squares, py::arg("lo"), py::arg("hi"), py::arg("count"));
  m.def("count_squares_between", &count_squares_between);

  py::class_<FamilyInstance>(m, "FamilyInstance")
      .def_property_readonly("family",
                             [](const FamilyInstance& f) {
                               return f.family == Family::diameter_4k1 ? "4k+1"
                                                                       : "4k+3";
                             })
      .def_readonly("parameter", &FamilyInstance::parameter)
      .def_readonly("n", &FamilyInstance::n)
      .def_property_readonly("diameter", &FamilyInstance::diameter)
      .def_property_readonly("r",
                             [](const FamilyInstance& f) { return f.params.r; })
      .def_property_readonly("r0",
                             [](const FamilyInstance& f) { return f.params.r0; })
      .def_property_readonly("radii",
                             [](const FamilyInstance& f) { return f.params.radii; })
      .def("__repr__", [](const FamilyInstance& f) {
        return "<FamilyInstance diameter=" + std::to_string(f.diameter()) +
               " parameter=" + f.parameter.get_str() + ">";
      });

  m.def("family_4k1", &family_4k1, py::arg("k"), py::arg("n"));
  m.def("family_4k3", &family_4k3, py::arg("a"), py::arg("n"));
  m.def("instance_for_diameter", &instance_for_diameter, py::arg("diameter"),
        py::arg("index"));

  py::class_<Certificate>(m, "Certificate")
      .def_readonly("instance", &Certificate::instance)
      .def_readonly("vertices", &Certificate::vertices)
      .def_readonly("spectrum", &Certificate::spectrum)
      .def_readonly("diameter_checked", &Certificate::diameter_checked)
      .def_readonly("certified", &Certificate::certified)
      .def_readonly("failure", &Certificate::failure)
      .def("to_json", [](const Certificate& c) { return certificate_json(c).dump(); })
      .def("__repr__", [](const Certificate& c) {
        return std::string("<Certificate certified=") +
               (c.certified ? "True" : "False") + " vertices=" +
               c.vertices.get_str() + ">";
      });
  m.def("certify", &certify, py::arg("instance"),
        py::arg("max_vertices") = kDefaultMaxVertices);

  py::register_exception<budget_error>(m, "BudgetError", PyExc_RuntimeError);
}
