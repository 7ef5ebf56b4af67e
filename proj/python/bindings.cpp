#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "commands.hpp"

namespace py = pybind11;
using lorhol::Rational;
using lorhol::cli::CommandOptions;

namespace {

std::pair<int, std::string> run(const std::string& name, const std::optional<std::string>& input,
                                const std::optional<std::string>& module, const std::optional<std::string>& a,
                                const std::optional<std::string>& c, std::optional<int> n,
                                const std::optional<std::string>& expect_kind, std::optional<std::size_t> expect_dim,
                                std::optional<bool> expect_feasible) {
  CommandOptions o;
  o.name = name;
  if (input) {
    try {
      o.input = lorhol::cli::json::parse(*input);
    } catch (const lorhol::cli::json::parse_error& e) {
      throw py::value_error(std::string("malformed JSON: ") + e.what());
    }
  }
  o.module = module;
  if (a) o.a = Rational::parse(*a);
  if (c) o.c = Rational::parse(*c);
  o.n = n;
  o.expect_kind = expect_kind;
  o.expect_dim = expect_dim;
  o.expect_feasible = expect_feasible;
  const auto r = lorhol::cli::run_command(o);
  return {r.exit_code, r.report.dump()};
}

}  // namespace

PYBIND11_MODULE(_lorhol, m) {
  m.doc() = "Exact holonomy and homogeneous-structure computations in so(1, n+1)";
  m.def("commands", &lorhol::cli::command_names, "Names of the available commands.");
  m.def("run", &run, py::arg("command"), py::arg("input") = py::none(), py::kw_only(), py::arg("module") = py::none(),
        py::arg("a") = py::none(), py::arg("c") = py::none(), py::arg("n") = py::none(),
        py::arg("expect_kind") = py::none(), py::arg("expect_dim") = py::none(),
        py::arg("expect_feasible") = py::none(),
        "Run a command on a JSON input string; returns (exit code, JSON report string).");
}
