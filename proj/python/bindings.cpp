#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "eopkit/cli.hpp"
#include "eopkit/exceptional.hpp"

namespace py = pybind11;
using namespace eop;

namespace {

Family family_from(const std::string& name) {
  if (name == "hermite") return Family::Hermite;
  if (name == "laguerre") return Family::Laguerre;
  if (name == "jacobi") return Family::Jacobi;
  throw SpecError(Rule::Parse, "unknown family '" + name + "'");
}

EopType type_from(const std::string& name) {
  if (auto t = parse_type(name)) return *t;
  throw SpecError(Rule::Parse, "unknown type '" + name + "'");
}

std::vector<std::string> coefficient_strings(const Poly<Rat>& p) {
  std::vector<std::string> out;
  for (const Rat& c : p.coefficients()) out.push_back(c.to_string());
  return out;
}

std::vector<std::string> classical(const std::string& family, int n, const std::string& alpha,
                                   const std::string& beta) {
  const Rat a = Rat::parse(alpha), b = Rat::parse(beta);
  switch (family_from(family)) {
    case Family::Hermite: return coefficient_strings(monic_hermite<Rat>(n));
    case Family::Laguerre: return coefficient_strings(monic_laguerre(n, a));
    case Family::Jacobi: return coefficient_strings(monic_jacobi(n, a, b));
  }
  return {};
}

std::vector<std::string> exceptional(const std::string& family, const std::string& type, int m, int n,
                                     const std::string& alpha, const std::string& beta) {
  const EopSpec spec = EopSpec::make(family_from(family), type_from(type), m, n);
  return coefficient_strings(build_eop(spec, Rat::parse(alpha), Rat::parse(beta)));
}

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = run_cli(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_eopkit, m) {
  m.doc() = "Exact exceptional orthogonal polynomials.";
  py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
  m.def("classical", &classical, py::arg("family"), py::arg("n"), py::arg("alpha") = "0",
        py::arg("beta") = "0", "Ascending coefficients of a monic classical polynomial, as strings.");
  m.def("exceptional", &exceptional, py::arg("family"), py::arg("type"), py::arg("m"), py::arg("n"),
        py::arg("alpha") = "0", py::arg("beta") = "0",
        "Ascending coefficients of a monic exceptional polynomial, as strings.");
  m.def("run_cli", &run, py::arg("args"), "Runs the command-line tool in-process: (exit code, stdout, stderr).");
}
