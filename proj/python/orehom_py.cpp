#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "orehom/bridge.hpp"
#include "orehom/cli.hpp"
#include "orehom/dsl.hpp"

namespace py = pybind11;
using namespace orehom;

namespace {

std::pair<int, std::string> run(const std::vector<std::string>& args) {
  std::ostringstream out;
  int code = run_cli(args, out);
  return {code, out.str()};
}

std::string roundtrip(const std::string& text) {
  return serialize_document(parse_document(text));
}

bool datum_ok(const std::string& text, const std::string& name) {
  Document doc = parse_document(text);
  const DslDatum& d = doc.datum(name);
  return check_datum(d.sigma, d.s).ok;
}

py::object solve_w_count(const std::string& text, const std::string& name,
                         int varsigma, const std::string& alpha) {
  Document doc = parse_document(text);
  const DslDatum& d = doc.datum(name);
  HomotheticDatum datum = make_datum(d.sigma, d.s);
  AlgebraPtr A = datum.algebra();
  LinMap a = alpha == "zero" ? LinMap::zero(A, A)
             : alpha == "id" ? LinMap::identity(A)
                             : doc.map(alpha).value;
  WSolveResult res = solve_endo_ext(datum, a, A->ring.from_int(varsigma));
  if (res.kind == WSolveResult::Kind::Indeterminate) return py::none();
  return py::int_(res.points.size());
}

std::string ore_mul_str(const std::string& text, const std::string& lhs,
                        const std::string& rhs) {
  Document doc = parse_document(text);
  return ore_str(ore_mul(doc.orepoly(lhs).value, doc.orepoly(rhs).value));
}

bool bridge_verify_ok(const std::string& text, const std::string& name,
                      std::size_t degree_cap) {
  Document doc = parse_document(text);
  BridgeContext ctx = make_bridge_context(doc.quintuple(name).resolve(),
                                          degree_cap);
  return verify_diagram(ctx).ok();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact computer algebra for homothetic extensions, extended skew "
            "derivations and Ore polynomials";
  m.def("run", &run, py::arg("args"),
        "Run a CLI command; returns (exit_code, output).");
  m.def("roundtrip", &roundtrip, py::arg("text"),
        "Parse a document and serialize it back to canonical form.");
  m.def("datum_ok", &datum_ok, py::arg("text"), py::arg("name"),
        "Whether the named datum entry satisfies the homothetic-datum axioms.");
  m.def("solve_w_count", &solve_w_count, py::arg("text"), py::arg("name"),
        py::arg("varsigma"), py::arg("alpha") = "zero",
        "Number of w solving the endomorphism extension conditions, or None "
        "when the solution set cannot be enumerated.");
  m.def("ore_mul_str", &ore_mul_str, py::arg("text"), py::arg("lhs"),
        py::arg("rhs"), "Product of two named Ore polynomials, rendered.");
  m.def("bridge_verify_ok", &bridge_verify_ok, py::arg("text"),
        py::arg("name"), py::arg("degree_cap") = 6,
        "Whether the embedding diagram verifies up to the degree cap.");
}
