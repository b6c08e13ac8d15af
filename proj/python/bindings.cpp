#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tcalg/cli/commands.hpp"
#include "tcalg/cli/interpreter.hpp"
#include "tcalg/cli/parser.hpp"
#include "tcalg/cli/report.hpp"
#include "tcalg/cli/suites.hpp"
#include "tcalg/errors.hpp"

namespace py = pybind11;
using namespace tcalg;
using namespace tcalg::cli;

namespace {

Session make_session(std::size_t n, std::size_t N, const std::string& backend, const std::string& variety,
                     const std::string& ring) {
  if (backend != "cend" && backend != "cur") throw std::invalid_argument("backend must be cend or cur");
  if (variety != "free" && variety != "assoc") throw std::invalid_argument("variety must be free or assoc");
  Session s;
  s.n = n;
  s.N = N;
  s.backend = backend == "cur" ? BackendKind::CurPoly : BackendKind::CendWeyl;
  s.variety = variety == "assoc" ? Variety::Assoc : Variety::Free;
  s.ring = ring;
  return s;
}

#define SESSION_ARGS                                                                                   \
  py::arg("n") = 1, py::arg("N") = 1, py::arg("backend") = "cend", py::arg("variety") = "free", \
  py::arg("ring") = "rational"

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations with Weyl, Hopf and conformal algebras, formal distributions and operads";

  auto base = py::register_exception<Error>(m, "TcalgError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base.ptr());
  py::register_exception<TypeMismatch>(m, "TypeMismatch", base.ptr());
  py::register_exception<IndexOutOfRange>(m, "IndexOutOfRange", base.ptr());
  py::register_exception<SessionError>(m, "SessionError", base.ptr());
  py::register_exception<InconsistentTable>(m, "InconsistentTable", base.ptr());
  py::register_exception<NotReconstructible>(m, "NotReconstructible", base.ptr());

  m.def(
      "format_expr",
      [](const std::string& src, std::size_t n, std::size_t N, const std::string& b, const std::string& v,
         const std::string& r) { return format(parse(src, make_session(n, N, b, v, r))); },
      "Parse an expression and print it with minimal parentheses.", py::arg("source"), SESSION_ARGS);

  m.def(
      "evaluate",
      [](const std::string& src, std::size_t n, std::size_t N, const std::string& b, const std::string& v,
         const std::string& r) {
        Session s = make_session(n, N, b, v, r);
        return format_value(evaluate(src, s), s);
      },
      "Evaluate an expression to its canonical text.", py::arg("source"), SESSION_ARGS);

  m.def(
      "evaluate_json",
      [](const std::string& src, std::size_t n, std::size_t N, const std::string& b, const std::string& v,
         const std::string& r) {
        Session s = make_session(n, N, b, v, r);
        return value_to_json(evaluate(src, s), s).dump();
      },
      "Evaluate an expression to its JSON serialization.", py::arg("source"), SESSION_ARGS);

  m.def(
      "type_of",
      [](const std::string& src, std::size_t n, std::size_t N, const std::string& b, const std::string& v,
         const std::string& r) { return type_name(evaluate(src, make_session(n, N, b, v, r))); },
      "Type tag of the value of an expression.", py::arg("source"), SESSION_ARGS);

  m.def("suite_names", &suite_names);

  m.def(
      "run_suite",
      [](const std::string& name, std::size_t n, std::size_t N, const std::string& backend,
         const std::string& variety, const std::string& ring, std::uint64_t seed,
         std::optional<std::uint64_t> degree_bound, std::optional<std::size_t> samples) {
        Session s = make_session(n, N, backend, variety, ring);
        SuiteOptions o;
        o.n = s.n;
        o.N = s.N;
        o.backend = s.backend;
        o.variety = s.variety;
        o.ring = ring;
        o.seed = seed;
        o.degree_bound = degree_bound;
        o.samples = samples;
        py::list out;
        for (const auto& c : run_suite(name, o)) {
          py::dict d;
          d["identity"] = c.identity;
          d["passed"] = c.passed;
          d["cases"] = c.cases;
          d["certificate"] = c.certificate;
          out.append(d);
        }
        return out;
      },
      "Run a verification suite; one dict per identity.", py::arg("name"), py::arg("n") = 1, py::arg("N") = 1,
      py::arg("backend") = "cend", py::arg("variety") = "free", py::arg("ring") = "all", py::arg("seed") = 1,
      py::arg("degree_bound") = py::none(), py::arg("samples") = py::none());

  m.def(
      "dim",
      [](std::size_t arity, const std::string& variety) {
        return dim_CI(arity, make_session(1, 1, "cend", variety, "rational").variety);
      },
      "Dimension of the arity component of the free or associative operad.", py::arg("arity"),
      py::arg("variety") = "free");

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "Run a tcalg command line; returns (exit code, stdout, stderr).", py::arg("args"));
}
