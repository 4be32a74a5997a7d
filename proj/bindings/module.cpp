#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

#include "radconvex/common.hpp"
#include "radconvex/funcspec.hpp"
#include "radconvex/integral.hpp"
#include "radconvex/oracle.hpp"
#include "radconvex/pointwise.hpp"
#include "radconvex/radical.hpp"
#include "radconvex/report_json.hpp"

namespace py = pybind11;
namespace rc = radconvex;

namespace {

// Value wrapper: pybind11 holders do not support shared_ptr-to-const.
struct PySpec {
    rc::SpecPtr ptr;
    const rc::FunctionSpec& get() const { return *ptr; }
};

PySpec parse_checked(const std::string& text) {
    auto result = rc::parse(text);
    if (auto* err = std::get_if<rc::ParseError>(&result))
        throw py::value_error("parse error at offset " + std::to_string(err->position) + ": " +
                              err->message);
    return PySpec{std::get<rc::SpecPtr>(result)};
}

py::object json_to_py(const nlohmann::ordered_json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_radconvex, m) {
    m.doc() = "Radical-convexity classification and inequality verification";

    py::register_exception<rc::NumericError>(m, "NumericError", PyExc_ArithmeticError);

    py::class_<PySpec>(m, "FunctionSpec")
        .def_property_readonly("domain_end",
                               [](const PySpec& f) { return f.get().domain_end(); })
        .def("__call__", [](const PySpec& f, double x) { return rc::evaluate(f.get(), x); })
        .def("__repr__",
             [](const PySpec& f) { return "FunctionSpec(\"" + rc::format(f.get()) + "\")"; })
        .def("__str__", [](const PySpec& f) { return rc::format(f.get()); });

    m.def("parse", &parse_checked, py::arg("text"),
          "Parse a DSL expression like 'pow(2) + 3*exptrunc(1)'.");
    m.def("format", [](const PySpec& f) { return rc::format(f.get()); }, py::arg("f"));
    m.def("evaluate", [](const PySpec& f, double x) { return rc::evaluate(f.get(), x); },
          py::arg("f"), py::arg("x"));
    m.def("inverse",
          [](const PySpec& f, double y, double x_hi) { return rc::inverse(f.get(), y, x_hi); },
          py::arg("f"), py::arg("y"), py::arg("x_hi"));

    m.def("is_p_radical",
          [](const PySpec& f, double p, int grid_n, double x_max, double tol) {
              return json_to_py(rc::to_json(rc::is_p_radical(f.get(), p, grid_n, x_max, tol)));
          },
          py::arg("f"), py::arg("p"), py::arg("grid_n") = rc::kDefaultGridN,
          py::arg("x_max") = 10.0, py::arg("tol") = rc::kDefaultTol);
    m.def("max_radical_order",
          [](const PySpec& f, double p_cap, int iters, int grid_n, double x_max, double tol) {
              double u = x_max > 0.0 ? x_max : rc::default_u_max(f.get(), p_cap);
              return json_to_py(
                  rc::to_json(rc::max_radical_order(f.get(), p_cap, iters, grid_n, u, tol)));
          },
          py::arg("f"), py::arg("p_cap") = rc::kDefaultPCap, py::arg("iters") = rc::kDefaultIters,
          py::arg("grid_n") = rc::kDefaultGridN, py::arg("x_max") = 0.0,
          py::arg("tol") = rc::kDefaultTol);
    m.def("necessary_condition",
          [](const PySpec& f, double p, const std::vector<double>& xs) {
              py::list out;
              for (const auto& c : rc::necessary_condition(f.get(), p, xs)) {
                  py::dict d;
                  d["p"] = c.p;
                  d["x"] = c.x;
                  d["lhs"] = c.lhs;
                  d["rhs"] = c.rhs;
                  d["pass"] = c.pass;
                  out.append(d);
              }
              return out;
          },
          py::arg("f"), py::arg("p"), py::arg("xs"));

    m.def("jensen2_refined",
          [](const PySpec& f, double a, double b, double t) {
              return json_to_py(rc::to_json(rc::jensen2_refined(f.get(), a, b, t)));
          },
          py::arg("f"), py::arg("a"), py::arg("b"), py::arg("t"));
    m.def("jensen_n_chain",
          [](const PySpec& f, const std::vector<double>& w, const std::vector<double>& x) {
              return json_to_py(rc::to_json(rc::jensen_n_chain(f.get(), w, x)));
          },
          py::arg("f"), py::arg("w"), py::arg("x"));
    m.def("upper_curve",
          [](const PySpec& f, double t) {
              rc::UpperCurve c = rc::upper_curve(f.get(), t);
              return py::make_tuple(c.lhs, c.mid, c.rhs);
          },
          py::arg("f"), py::arg("t"));
    m.def("amgm_refined",
          [](const PySpec& f, const std::vector<double>& w, const std::vector<double>& x,
             double x_hi) {
              return json_to_py(rc::to_json(rc::amgm_refined(f.get(), w, x, x_hi)));
          },
          py::arg("f"), py::arg("w"), py::arg("x"), py::arg("x_hi"));
    m.def("superadditivity_refined",
          [](const PySpec& f, double a, double b) {
              return json_to_py(rc::to_json(rc::superadditivity_refined(f.get(), a, b)));
          },
          py::arg("f"), py::arg("a"), py::arg("b"));
    m.def("mradical_bound",
          [](const PySpec& f, int m_order, double a, double b, double t) {
              return json_to_py(rc::to_json(rc::mradical_bound(f.get(), m_order, a, b, t)));
          },
          py::arg("f"), py::arg("m"), py::arg("a"), py::arg("b"), py::arg("t"));
    m.def("fourradical_bound",
          [](const PySpec& f, double a, double b, double t) {
              return json_to_py(rc::to_json(rc::fourradical_bound(f.get(), a, b, t)));
          },
          py::arg("f"), py::arg("a"), py::arg("b"), py::arg("t"));

    m.def("hh_first",
          [](const PySpec& f, double a, double b) {
              return json_to_py(rc::to_json(rc::hh_first(f.get(), a, b)));
          },
          py::arg("f"), py::arg("a"), py::arg("b"));
    m.def("hh_second",
          [](const PySpec& f, double a, double b) {
              return json_to_py(rc::to_json(rc::hh_second(f.get(), a, b)));
          },
          py::arg("f"), py::arg("a"), py::arg("b"));
    m.def("unit_interval_chain",
          [](const PySpec& f) {
              return json_to_py(rc::to_json(rc::unit_interval_chain(f.get())));
          },
          py::arg("f"));
    m.def("split_interval_bound",
          [](const PySpec& f) {
              return json_to_py(rc::to_json(rc::split_interval_bound(f.get())));
          },
          py::arg("f"));
    m.def("hh_general",
          [](const PySpec& f, double a, double b) {
              return json_to_py(rc::to_json(rc::hh_general(f.get(), a, b)));
          },
          py::arg("f"), py::arg("a"), py::arg("b"));
    m.def("continuous_jensen",
          [](const PySpec& f, const std::function<double(double)>& g, double a, double b) {
              return json_to_py(rc::to_json(rc::continuous_jensen(f.get(), g, a, b)));
          },
          py::arg("f"), py::arg("g"), py::arg("a"), py::arg("b"));
    m.def("hardy_finite",
          [](const PySpec& f, double p, double alpha, double beta) {
              return json_to_py(rc::to_json(rc::hardy_finite(f.get(), p, alpha, beta)));
          },
          py::arg("f"), py::arg("p"), py::arg("alpha"), py::arg("beta"));
    m.def("average_value_report",
          [](const PySpec& f, double p, double x) {
              return json_to_py(rc::to_json(rc::average_value_report(f.get(), p, x)));
          },
          py::arg("f"), py::arg("p"), py::arg("x"));

    m.def("riemann",
          [](const std::function<double(double)>& f, double a, double b, long panels) {
              return rc::oracle::riemann(f, a, b, panels);
          },
          py::arg("f"), py::arg("a"), py::arg("b"),
          py::arg("panels") = rc::oracle::kDefaultPanels);

    m.attr("__version__") = "0.1.0";
}
