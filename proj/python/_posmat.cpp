// Python bindings. Values cross the boundary as the JSON documents used by
// the CLI; the Python wrapper decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "posmat/suites.hpp"

namespace py = pybind11;
using namespace posmat;

namespace {

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

std::string decompose_json(const std::string& description, std::uint64_t seed, int words, bool force_k) {
  const AutomorphismDescription desc = description_from_json(parse(description));
  auto ob = obfuscated_oracle(desc, seed);
  DecomposeConfig cfg;
  cfg.seed = seed;
  cfg.word_count = words;
  cfg.force_k_normalize = force_k;
  DecompositionReport r;
  {
    py::gil_scoped_release nogil;
    r = decompose(ob.oracle, cfg);
  }
  return to_json(r).dump();
}

std::string factor_json(const std::string& matrix) {
  return to_json(factor_monomial(require_monomial(matrix_from_json(parse(matrix))))).dump();
}

std::string verify_json(const std::string& suite, const std::string& ring, int n, int trials, std::uint64_t seed) {
  const SuiteConfig cfg{parse_ring(ring), n, trials, seed};
  SuiteReport r;
  {
    py::gil_scoped_release nogil;
    r = run_suite(suite, cfg);
  }
  return to_json(r).dump();
}

std::string gen_word_json(int n, const std::string& ring, int length, std::uint64_t seed) {
  Rng rng(seed);
  return to_json(random_word(n, parse_ring(ring), length, rng)).dump();
}

std::string gen_oracle_json(int n, const std::string& ring, std::uint64_t seed) {
  Rng rng(seed);
  return to_json(random_description(n, parse_ring(ring), rng)).dump();
}

RingElement element(const std::string& text) { return element_from_json(parse(text)); }

}  // namespace

PYBIND11_MODULE(_posmat, m) {
  m.doc() = "Exact ordered rings and automorphism decomposition for G_n(R)";

  // Translators run newest first, so the base class goes in before the rest.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NotMonomial>(m, "NotMonomial", PyExc_ValueError);
  py::register_exception<NotAUnit>(m, "NotAUnit", PyExc_ArithmeticError);
  py::register_exception<UnsupportedRing>(m, "UnsupportedRing", PyExc_ValueError);

  m.def("decompose", &decompose_json, py::arg("description"), py::arg("seed") = 0, py::arg("words") = 50,
        py::arg("force_k") = false);
  m.def("factor", &factor_json, py::arg("matrix"));
  m.def("verify", &verify_json, py::arg("suite"), py::arg("ring") = "Q", py::arg("n") = 3, py::arg("trials") = 100,
        py::arg("seed") = 0);
  m.def("gen_word", &gen_word_json, py::arg("n"), py::arg("ring"), py::arg("length"), py::arg("seed") = 0);
  m.def("gen_oracle", &gen_oracle_json, py::arg("n"), py::arg("ring"), py::arg("seed") = 0);
  m.def("suite_names", &suite_names);

  m.def("add", [](const std::string& a, const std::string& b) { return to_json(element(a) + element(b)).dump(); });
  m.def("mul", [](const std::string& a, const std::string& b) { return to_json(element(a) * element(b)).dump(); });
  m.def("neg", [](const std::string& a) { return to_json(-element(a)).dump(); });
  m.def("sign", [](const std::string& a) { return element(a).sign(); });
  m.def("inverse", [](const std::string& a) { return to_json(element(a).inverse()).dump(); });
  m.def("to_string", [](const std::string& a) { return element(a).str(); });
}
