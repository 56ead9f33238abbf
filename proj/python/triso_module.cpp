// Thin bindings; rationals cross the boundary as "p/q" strings.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "triso/errors.hpp"
#include "triso/io.hpp"
#include "triso/multi_isolate.hpp"
#include "triso/oracle.hpp"

namespace py = pybind11;

namespace {

py::dict to_dict(const triso::MultiIsolation& m, const std::vector<std::string>& vars) {
  py::list sols;
  for (const auto& s : m.solutions) {
    py::list box;
    for (const auto& iv : s.box.coords()) box.append(py::make_tuple(triso::to_string(iv.lo), triso::to_string(iv.hi)));
    py::dict d;
    d["box"] = box;
    d["multiplicity"] = s.multiplicity;
    d["exponents"] = s.exponents;
    d["branch"] = s.branch_id;
    sols.append(d);
  }
  py::list branches;
  for (const auto& b : m.branches) {
    std::vector<std::string> polys;
    for (const auto& p : b.system.polys()) polys.push_back(triso::render(p.primitive(), vars));
    branches.append(polys);
  }
  py::dict out;
  out["variables"] = vars;
  out["solutions"] = sols;
  out["branches"] = branches;
  return out;
}

triso::Rational precision_of(const std::string& s) {
  triso::Rational p = triso::parse_rational(s);
  if (triso::sign(p) <= 0) throw std::invalid_argument("precision must be positive");
  return p;
}

py::dict isolate(const std::vector<std::string>& equations, const std::vector<std::string>& vars,
                 const std::string& precision, unsigned threads) {
  std::vector<triso::MPoly> polys;
  for (const auto& e : equations) polys.push_back(triso::parse_poly(e, vars));
  triso::TriangularSystem t(std::move(polys));
  triso::Rational p = precision_of(precision);
  triso::MultiIsolation m;
  {
    py::gil_scoped_release release;
    m = triso::multi_isolate(t, p, threads);
  }
  return to_dict(m, vars);
}

py::dict isolate_document(const std::string& text, const std::string& precision, unsigned threads) {
  triso::SystemDocument doc = triso::parse_system_document(text);
  triso::TriangularSystem t = triso::to_system(doc);
  triso::Rational p = precision_of(precision);
  triso::MultiIsolation m;
  {
    py::gil_scoped_release release;
    m = triso::multi_isolate(t, p, threads);
  }
  return to_dict(m, doc.var_order);
}

// Re-runs the derivative oracle and the certificate on every solution.
bool verify(const std::vector<std::string>& equations, const std::vector<std::string>& vars,
            const std::string& precision) {
  std::vector<triso::MPoly> polys;
  for (const auto& e : equations) polys.push_back(triso::parse_poly(e, vars));
  triso::TriangularSystem t(std::move(polys));
  triso::MultiIsolation m = triso::multi_isolate(t, precision_of(precision));
  for (const auto& s : m.solutions) {
    const auto& branch = m.branches[s.branch_id];
    if (!triso::verify_solution(t, s, branch)) return false;
    triso::AlgebraicPoint pt = triso::branch_point(branch, s.box);
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (triso::mult_by_derivatives(t, pt, k) != s.exponents[k]) return false;
    }
  }
  return true;
}

}  // namespace

PYBIND11_MODULE(_triso, m) {
  m.doc() = "Real solutions with multiplicities of triangular polynomial systems";

  auto error = py::register_exception<triso::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<triso::PositiveDimension>(m, "PositiveDimension", error.ptr());
  // ParseError and NotTriangular are bad input, so they derive from ValueError too.
  py::object value_error = py::reinterpret_borrow<py::object>(PyExc_ValueError);
  py::object parse_error = py::reinterpret_steal<py::object>(
      PyErr_NewException("triso._triso.ParseError", py::make_tuple(error, value_error).ptr(), nullptr));
  py::object not_triangular = py::reinterpret_steal<py::object>(
      PyErr_NewException("triso._triso.NotTriangular", py::make_tuple(error, value_error).ptr(), nullptr));
  m.attr("ParseError") = parse_error;
  m.attr("NotTriangular") = not_triangular;
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const triso::ParseError& e) {
      py::object cls = py::module_::import("triso._triso").attr("ParseError");
      PyErr_SetObject(cls.ptr(), py::make_tuple(e.what(), e.position()).ptr());
    } catch (const triso::NotTriangular& e) {
      py::object cls = py::module_::import("triso._triso").attr("NotTriangular");
      PyErr_SetString(cls.ptr(), e.what());
    }
  });

  m.attr("POSITIVE_DIMENSION_MESSAGE") = triso::kPositiveDimensionMessage;
  m.def("isolate", &isolate, py::arg("equations"), py::arg("variables"), py::arg("precision") = "1/64",
        py::arg("threads") = 0u);
  m.def("isolate_document", &isolate_document, py::arg("text"), py::arg("precision") = "1/64",
        py::arg("threads") = 0u);
  m.def("verify", &verify, py::arg("equations"), py::arg("variables"), py::arg("precision") = "1/64");
  m.def(
      "normalize",
      [](const std::string& expr, const std::vector<std::string>& vars) {
        return triso::render(triso::parse_poly(expr, vars), vars);
      },
      py::arg("expr"), py::arg("variables"));
}
