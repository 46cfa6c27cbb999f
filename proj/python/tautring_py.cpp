#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tautring/errors.hpp"
#include "tautring/kimura.hpp"
#include "tautring/motives.hpp"

namespace py = pybind11;
using namespace tautring;

namespace {

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(r.numerator().get_str())), py::int_(py::str(r.denominator().get_str())));
}

Rational from_python(const py::object& value) {
  return Rational::parse(py::str(value).cast<std::string>());
}

TautClass parse(const std::string& text, int m, const ModelParams& params) { return parse_class(text, m, params); }

py::dict check_report(const CheckReport& report) {
  py::list items;
  for (const auto& item : report.items) {
    py::dict d;
    d["identity"] = item.identity;
    d["passed"] = item.passed;
    d["offending"] = item.offending;
    items.append(d);
  }
  py::dict out;
  out["passed"] = report.passed();
  out["items"] = items;
  return out;
}

}  // namespace

PYBIND11_MODULE(_tautring, m) {
  m.doc() = "Exact tautological ring of powers of Y: products, pairings, projector checks";

  py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
  py::register_exception<InconsistentSystemError>(m, "InconsistentSystemError", PyExc_ArithmeticError);

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init([](int n, int d, int b, const py::object& delta) {
             if (delta.is_none()) return ModelParams(n, d, b);
             return ModelParams(n, d, b, from_python(delta));
           }),
           py::arg("n"), py::arg("d"), py::arg("b"), py::arg("delta") = py::none())
      .def_property_readonly("n", &ModelParams::n)
      .def_property_readonly("d", &ModelParams::d)
      .def_property_readonly("b", &ModelParams::b)
      .def_property_readonly("delta", [](const ModelParams& p) { return to_fraction(p.delta()); })
      .def("__repr__", [](const ModelParams& p) { return "ModelParams(" + to_string(p) + ")"; });

  m.def(
      "normalize",
      [](const std::string& x, int factors, const ModelParams& p) { return format_class(parse(x, factors, p), p); },
      py::arg("x"), py::arg("m"), py::arg("params"), "Canonical form of a class given in the monomial grammar.");
  m.def(
      "multiply",
      [](const std::string& x, const std::string& y, int factors, const ModelParams& p) {
        return format_class(multiply(parse(x, factors, p), parse(y, factors, p), p), p);
      },
      py::arg("x"), py::arg("y"), py::arg("m"), py::arg("params"));
  m.def(
      "pair",
      [](const std::string& x, const std::string& y, int factors, const ModelParams& p) {
        return to_fraction(pair(parse(x, factors, p), parse(y, factors, p), p));
      },
      py::arg("x"), py::arg("y"), py::arg("m"), py::arg("params"));
  m.def(
      "integrate",
      [](const std::string& x, int factors, const ModelParams& p) { return to_fraction(integrate(parse(x, factors, p), p)); },
      py::arg("x"), py::arg("m"), py::arg("params"));
  m.def(
      "enumerate_basis",
      [](const ModelParams& p, int factors, int codim) {
        std::vector<std::string> out;
        for (const auto& mono : enumerate_basis(p, factors, codim)) out.push_back(mono.to_string());
        return out;
      },
      py::arg("params"), py::arg("m"), py::arg("codim"));
  m.def(
      "gram",
      [](const ModelParams& p, int factors, int codim, unsigned threads) {
        GramReport g = [&] {
          py::gil_scoped_release release;
          return gram(p, factors, codim, GramOptions{threads});
        }();
        py::dict out;
        std::vector<std::string> basis, kernel;
        for (const auto& mono : g.basis) basis.push_back(mono.to_string());
        for (const auto& k : g.kernel_basis) kernel.push_back(format_class(k, p));
        out["basis"] = basis;
        out["rank"] = g.rank;
        out["kernel"] = kernel;
        py::list rows;
        for (std::size_t i = 0; i < g.gram.rows(); ++i) {
          py::list row;
          for (std::size_t j = 0; j < g.gram.cols(); ++j) row.append(to_fraction(g.gram(i, j)));
          rows.append(row);
        }
        out["gram"] = rows;
        return out;
      },
      py::arg("params"), py::arg("m"), py::arg("codim"), py::arg("threads") = 1);
  m.def(
      "is_zero_in_cohomology",
      [](const std::string& x, int factors, const ModelParams& p) { return is_zero_in_cohomology(parse(x, factors, p), p); },
      py::arg("x"), py::arg("m"), py::arg("params"));

  m.def(
      "ck_projectors",
      [](const ModelParams& p) {
        std::map<int, std::string> out;
        for (const auto& [i, pi] : ck_projectors(p).projectors) out[i] = format_class(pi.cls(), p);
        return out;
      },
      py::arg("params"));
  m.def(
      "verify_ck", [](const ModelParams& p) { return check_report(verify_ck(ck_projectors(p))); }, py::arg("params"));
  m.def(
      "verify_mck",
      [](const ModelParams& p) {
        CheckReport report = [&] {
          py::gil_scoped_release release;
          return verify_mck(p);
        }();
        return check_report(report);
      },
      py::arg("params"));
  m.def(
      "small_diagonal", [](const ModelParams& p) { return format_class(small_diagonal(p), p); }, py::arg("params"));
  m.def(
      "lemma_ok",
      [](const ModelParams& p, int factor) {
        const DiagonalTimesH r = expand_diagonal_times_h(p, factor - 1);
        return py::make_tuple(format_class(r.lhs, p), format_class(r.rhs, p), r.equal());
      },
      py::arg("params"), py::arg("factor") = 1, "(lhs, rhs, equal) for Delta * h on factor 1 or 2.");
  m.def(
      "solve_gamma3",
      [](const ModelParams& p) {
        const Gamma3Solution sol = solve_gamma3(p);
        py::dict coefficients;
        for (const auto& [key, a] : sol.coefficients) coefficients[py::make_tuple(key[0], key[1], key[2])] = to_fraction(a);
        py::dict out;
        out["coefficients"] = coefficients;
        out["residual"] = format_class(sol.residual, p);
        out["symmetric"] = sol.symmetric();
        return out;
      },
      py::arg("params"));
  m.def(
      "euler_char", [](const ModelParams& p) { return to_fraction(euler_char(p)); }, py::arg("params"));

  m.def(
      "kimura_element",
      [](const ModelParams& p, int cap_b) { return format_class(kimura_element(p, KimuraLimits{cap_b}).cls, p); },
      py::arg("params"), py::arg("cap_b") = 7);
  m.def(
      "falling_factorial_pairing",
      [](int b, const py::object& delta) { return to_fraction(falling_factorial_pairing(b, from_python(delta))); },
      py::arg("b"), py::arg("delta"));
  m.def(
      "verify_kimura_vanishing",
      [](const ModelParams& p) {
        KimuraReport r = [&] {
          py::gil_scoped_release release;
          return verify_kimura_vanishing(p);
        }();
        py::dict out;
        out["vanishing"] = r.vanishing;
        out["cross_check"] = r.cross_check;
        out["falling_factorial"] = to_fraction(r.falling_factorial);
        out["terms"] = r.element.cls.size();
        return out;
      },
      py::arg("params"));
  m.def(
      "scan_injectivity",
      [](const ModelParams& p, int m_max) {
        ScanResult scan = [&] {
          py::gil_scoped_release release;
          return scan_injectivity(p, m_max);
        }();
        py::list rows;
        for (const auto& row : scan.rows) {
          py::dict d;
          d["m"] = row.m;
          d["codim"] = row.codim;
          d["basis_size"] = row.basis_size;
          d["rank"] = row.rank;
          d["deficiency"] = row.deficiency;
          rows.append(d);
        }
        return rows;
      },
      py::arg("params"), py::arg("m_max"));
}
