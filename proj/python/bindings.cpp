#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isopar/cli.hpp"
#include "isopar/forms.hpp"
#include "isopar/geometry.hpp"
#include "isopar/io.hpp"
#include "isopar/pencil.hpp"

namespace py = pybind11;
using namespace isopar;

namespace {

ShapeBlocks blocks_for(ExampleId id) { return shape_blocks(ot_expand(polynomial_for(id), frame_for(id))); }

std::string build_polynomial(const std::string& example) {
  return poly_to_json(polynomial_for(parse_example(example))).dump();
}

py::dict verify_cm_json(const std::string& poly, unsigned g, unsigned m1, unsigned m2) {
  const auto r = verify_cm(poly_from_json(json::parse(poly)), g, m1, m2);
  py::dict d;
  d["gradient_ok"] = r.gradient_ok;
  d["laplacian_ok"] = r.laplacian_ok;
  d["gradient_residual_terms"] = r.gradient_residual_terms;
  d["laplacian_residual_terms"] = r.laplacian_residual_terms;
  d["pass"] = r.pass();
  return d;
}

py::dict forms(const std::string& example) {
  const ExampleId id = parse_example(example);
  const auto f = ot_expand(polynomial_for(id), frame_for(id));
  const auto names = f.variable_names();
  std::vector<std::string> p, q;
  for (const auto& v : f.p) p.push_back(v.to_string(names));
  for (const auto& v : f.q) q.push_back(v.to_string(names));
  py::dict d;
  d["m1"] = f.m1;
  d["m2"] = f.m2;
  d["residual_ok"] = f.residual_ok;
  d["variables"] = names;
  d["p"] = p;
  d["q"] = q;
  return d;
}

std::string blocks_json(const std::string& example) {
  const auto b = blocks_for(parse_example(example));
  json j{{"m1", b.m1}, {"m2", b.m2}, {"A", json::array()}, {"B", json::array()}, {"C", json::array()}};
  for (std::size_t a = 0; a < b.m1; ++a) {
    j["A"].push_back(matrix_to_json(b.A[a]));
    j["B"].push_back(matrix_to_json(b.B[a]));
    j["C"].push_back(matrix_to_json(b.C[a]));
  }
  return j.dump();
}

std::string suite_json(const std::string& name, const std::string& example, std::uint64_t seed,
                       std::size_t samples, bool with_timing) {
  return run_suite(name, example, seed, samples).to_json(with_timing).dump();
}

std::size_t pencil_nullity(const std::string& example, const std::vector<cdouble>& c, double rel_tol) {
  const auto b = blocks_for(parse_example(example));
  if (c.size() != b.m1 + 1) throw DimensionError("expected m1 + 1 coefficients");
  return nullity(pencil_matrix(std::span<const cdouble>(c), b), rel_tol);
}

std::map<long, std::size_t> scan(const std::string& example, std::size_t n, std::uint64_t seed) {
  const auto b = blocks_for(parse_example(example));
  return r_lambda_scan(b, sample_hyperquadric(b.m1, n, seed)).histogram;
}

}  // namespace

PYBIND11_MODULE(_isopar, m) {
  m.doc() = "exact isoparametric quartic toolkit";
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);

  m.def("build_polynomial", &build_polynomial, py::arg("example"));
  m.def("verify_cm", &verify_cm_json, py::arg("poly_json"), py::arg("g"), py::arg("m1"), py::arg("m2"));
  m.def("forms", &forms, py::arg("example"));
  m.def("blocks_json", &blocks_json, py::arg("example"));
  m.def("suite_json", &suite_json, py::arg("name"), py::arg("example"), py::arg("seed") = 0,
        py::arg("samples") = 1000, py::arg("with_timing") = true);
  m.def("nullity", &pencil_nullity, py::arg("example"), py::arg("c"), py::arg("rel_tol") = 1e-9);
  m.def("scan", &scan, py::arg("example"), py::arg("samples") = 1000, py::arg("seed") = 0);
}
