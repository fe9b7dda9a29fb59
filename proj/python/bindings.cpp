#include <pybind11/functional.h>
#include <pybind11/iostream.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qapprox/analysis.hpp"
#include "qapprox/cli.hpp"
#include "qapprox/statconv.hpp"

namespace py = pybind11;
using namespace qapprox;

namespace {

py::dict report_dict(const BoundReport& r) {
  py::dict d;
  d["theorem"] = r.theorem;
  d["pass"] = r.pass;
  d["sup_lhs"] = r.sup_lhs;
  d["sup_rhs"] = r.sup_rhs;
  d["min_margin"] = r.min_margin;
  py::list xs, lhs, rhs;
  for (const auto& p : r.points) {
    xs.append(p.x);
    lhs.append(p.lhs);
    rhs.append(p.rhs);
  }
  d["x"] = xs;
  d["lhs"] = lhs;
  d["rhs"] = rhs;
  for (const auto& [k, v] : r.extras) d[py::str(k)] = v;
  return d;
}

}  // namespace

PYBIND11_MODULE(_qapprox, m) {
  m.doc() = "q-Favard-Szasz-Chlodowsky operators";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<TruncationError>(m, "TruncationError", base.ptr());
  py::register_exception<EvaluationError>(m, "EvaluationError", base.ptr());

  m.def("q_integer", [](long r, double q) { return q_integer(r, QValue(q)); });
  m.def("q_factorial", [](int n, double q) { return q_factorial(n, QValue(q)); });
  m.def("q_binomial",
        [](int n, int k, double q) { return q_binomial(n, k, QValue(q)); });
  m.def("q_derivative", [](const RealFunction& f, double x, double q) {
    return q_derivative(f, x, QValue(q));
  });
  m.def("q_exp", [](double x, double q, double tol) {
    return q_exp(x, QValue(q), tol);
  }, py::arg("x"), py::arg("q"), py::arg("tol") = kDefaultTol);
  m.def("q_exp_entire", [](double x, double q, double tol) {
    return q_exp_entire(x, QValue(q), tol);
  }, py::arg("x"), py::arg("q"), py::arg("tol") = kDefaultTol);

  py::class_<AppellFamily>(m, "AppellFamily")
      .def(py::init(&AppellFamily::parse), py::arg("spec"))
      .def_property_readonly("coeffs", &AppellFamily::coeffs)
      .def_property_readonly("name", &AppellFamily::name);
  m.def("appell_weight", [](const AppellFamily& f, int k, double y, double q) {
    return appell_weight(f, k, y, QValue(q));
  });
  m.def("appell_power_sum",
        [](const AppellFamily& f, double y, double q, int power) {
          return appell_power_sum(f, y, QValue(q), power);
        });

  py::class_<OperatorInstance>(m, "Operator")
      .def(py::init([](int n, double q, double b_n, const std::string& family) {
             return OperatorInstance(n, QValue(q), b_n,
                                     AppellFamily::parse(family));
           }),
           py::arg("n"), py::arg("q"), py::arg("b_n"), py::arg("family") = "one")
      .def_property_readonly("n", &OperatorInstance::n)
      .def_property_readonly("q", [](const OperatorInstance& op) {
        return op.q().value();
      })
      .def_property_readonly("b_n", &OperatorInstance::b_n)
      .def_property_readonly("x_max", &OperatorInstance::x_max)
      .def("evaluate", [](const OperatorInstance& op, const std::string& f,
                          double x) {
        return evaluate(op, TargetFunction::parse(f), x);
      })
      .def("moment", [](const OperatorInstance& op, int i, double x) {
        return moment_closed(op, i, x);
      })
      .def("moment_series", [](const OperatorInstance& op, int i, double x) {
        return moment_series(op, i, x);
      })
      .def("moment_printed", [](const OperatorInstance& op, int i, double x) {
        return moment_printed(op, i, x);
      })
      .def("central_moment2", &central_moment2);

  m.def("classical_evaluate",
        [](int n, double b_n, const std::string& f, double x) {
          return classical_evaluate(n, b_n, TargetFunction::parse(f), x);
        });

  m.def("check_rate_theorem", [](const OperatorInstance& op,
                                 const std::string& f, double lo, double hi,
                                 int points) {
    return report_dict(
        check_rate_theorem(op, TargetFunction::parse(f), GridSpec(lo, hi, points)));
  });
  m.def("check_local_theorem", [](const OperatorInstance& op,
                                  const std::string& f, double lo, double hi,
                                  int points) {
    const auto r =
        check_local_theorem(op, TargetFunction::parse(f), GridSpec(lo, hi, points));
    auto d = report_dict(r.report);
    d["k_hat"] = r.k_hat;
    return d;
  });

  m.def("is_perfect_square", &is_perfect_square);
  m.def("square_density", [](std::int64_t horizon) {
    return natural_density(is_perfect_square, horizon);
  });
  m.def("schedule_q", [](const std::string& name, std::int64_t n) {
    return ScheduleSpec::parse(name).q(n);
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<std::string> argv = {"qapprox"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::vector<char*> ptrs;
    for (auto& a : argv) ptrs.push_back(a.data());
    py::scoped_ostream_redirect redirect;
    return cli::main_entry(static_cast<int>(ptrs.size()), ptrs.data());
  });
}
