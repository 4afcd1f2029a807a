#include "uas/classify.hpp"
#include "uas/config.hpp"
#include "uas/growth.hpp"
#include "uas/ideal_spec.hpp"
#include "uas/json_io.hpp"
#include "uas/pi_eval.hpp"
#include "uas/rep.hpp"
#include "uas/truncation.hpp"
#include "uas/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace uas;

namespace {

// Big integers cross the boundary as decimal text.
py::int_ to_python(const Integer& z) { return py::int_(py::module_::import("builtins").attr("int")(z.get_str())); }

std::string dumps(const Json& j) { return j.dump(); }

EvalMode eval_mode(const std::string& mode, std::uint64_t seed, std::size_t samples) {
  if (mode == "auto") return {EvalMode::Kind::automatic, seed, samples};
  if (mode == "deterministic") return {EvalMode::Kind::deterministic, seed, samples};
  if (mode == "montecarlo") return EvalMode::montecarlo(seed, samples);
  throw std::invalid_argument("mode must be auto, deterministic or montecarlo");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
  py::register_exception<WindowExceeded>(m, "WindowExceeded", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  m.def("configure", [](int window, std::uint64_t cap, std::uint64_t seed, int threads, bool arity7) {
    Settings s{window, cap, seed, threads, arity7};
    validate(s);
    set_settings(s);
  }, py::arg("window") = 6, py::arg("cap") = 1'000'000, py::arg("seed") = 20240611, py::arg("threads") = 1,
        py::arg("arity7") = false);
  m.def("settings", [] { return format_settings(settings()); });

  m.def("gamma", [](int n) { return to_python(gamma(n)); });
  m.def("truncation_dim", [](int k, int n) { return to_python(truncation_dim(k, n)); });
  m.def("truncation_kernel_dim", [](int k, int n) { return truncation_kernel(k, n).dim(); });

  m.def("parse_ideal", [](const std::string& text) { return parse_ideal_spec(text).str(); });
  m.def("ideal_json", [](const std::string& text, int window) { return dumps(to_json(window_of(parse_ideal_spec(text), window))); },
        py::arg("spec"), py::arg("window") = -1);
  m.def("series_json", [](const std::string& text) {
    return dumps(to_json(gamma_series_of_quotient(window_of(parse_ideal_spec(text)))));
  });
  m.def("gen_degree_json", [](const std::string& text) { return dumps(to_json(gen_degree(window_of(parse_ideal_spec(text))))); });
  m.def("character_json", [](const std::string& text, int n, bool top) {
    require_window(n, "character");
    Subspace comp = ideal_component(presentation_of(parse_ideal_spec(text)), n);
    if (top) comp = intersect(comp, truncation_kernel(n, n));
    return dumps(to_json(decompose_subspace(comp, n)));
  }, py::arg("spec"), py::arg("n"), py::arg("top") = false);

  m.def("classify_json", [](int gkdim) {
    Json out = Json::array();
    for (const auto& c : classify_gkdim(gkdim)) out.push_back(to_json(c));
    return dumps(out);
  });
  m.def("catalog", [](int grade) {
    std::vector<std::string> out;
    for (const auto& s : catalog(grade)) out.push_back(s.str());
    return out;
  });

  m.def("codim_json", [](const std::string& algebra, int n, const std::string& mode, std::uint64_t seed, std::size_t samples) {
    const Codimension c = codim(FiniteAlgebra::resolve(algebra), n, eval_mode(mode, seed, samples));
    Json j;
    j["n"] = c.n;
    j["value"] = c.value.get_str();
    j["status"] = c.status;
    j["exact"] = c.exact;
    return dumps(j);
  }, py::arg("algebra"), py::arg("n"), py::arg("mode") = "auto", py::arg("seed") = 0, py::arg("samples") = 0);

  m.def("suites", &verify_suite_ids);
  m.def("verify_json", [](const std::string& id) {
    py::gil_scoped_release release;
    return dumps(run_verify(id).json());
  });
  m.def("verify_schema", [] { return verify_report_schema(); });
}
