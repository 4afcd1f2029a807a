#include "uas/json_io.hpp"

#include "uas/symmetric.hpp"
#include "uas/truncation.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace uas {

namespace {

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
  return z.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

Json rows_json(const Subspace& s) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Json row = Json::array();
    for (const auto& x : s.scaled_row(i)) row.push_back(integer_json(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t arity_dim(int n) { return SymmetricGroup::get(n).order(); }

Subspace module_from_json(const Json& j, int arity) {
  const std::size_t d = arity_dim(arity);
  if (j.contains("labels")) {
    const std::string text = j.at("labels").get<std::string>();
    if (text == "0") return Subspace::zero(d);
    return components_by_label(truncation_kernel(arity, arity), arity, parse_irreducible_labels(text));
  }
  if (j.contains("generators")) {
    Subspace s = Subspace::zero(d);
    for (const auto& g : j.at("generators")) {
      OperadElement e = OperadElement::parse(g.get<std::string>(), arity);
      if (e.arity() != arity) throw std::invalid_argument("generator " + g.get<std::string>() + " has the wrong arity");
      s = sum(s, cyclic_span(e));
    }
    return s;
  }
  if (j.contains("rows")) {
    std::vector<IntVector> rows;
    for (const auto& r : j.at("rows")) {
      IntVector row;
      for (const auto& x : r) row.push_back(integer_from_json(x));
      if (row.size() != d) throw std::invalid_argument("module row of length " + std::to_string(row.size()) + " at arity " + std::to_string(arity));
      rows.push_back(std::move(row));
    }
    return span(rows, d);
  }
  throw std::invalid_argument("a module needs \"labels\", \"generators\" or \"rows\"");
}

}  // namespace

Json to_json(const Subspace& s) {
  Json j;
  j["ambient"] = s.ambient_dim();
  j["dim"] = s.dim();
  j["rows"] = rows_json(s);
  return j;
}

Subspace subspace_from_json(const Json& j) {
  const std::size_t ambient = j.at("ambient").get<std::size_t>();
  std::vector<IntVector> rows;
  for (const auto& r : j.at("rows")) {
    IntVector row;
    for (const auto& x : r) row.push_back(integer_from_json(x));
    if (row.size() != ambient) throw std::invalid_argument("subspace row has the wrong length");
    rows.push_back(std::move(row));
  }
  return span(rows, ambient);
}

Json to_json(const Decomposition& d) {
  Json j;
  j["arity"] = d.n;
  j["label"] = type_label(d);
  j["dimension"] = integer_json(d.dimension());
  Json mult = Json::object();
  for (const auto& [lambda, m] : d.multiplicity) {
    if (m != 0) mult[lambda.label()] = m;
  }
  j["multiplicities"] = std::move(mult);
  return j;
}

Json to_json(const GammaSeries& s) {
  Json j;
  Json gamma = Json::array();
  for (const auto& g : s.gamma()) gamma.push_back(integer_json(g));
  j["gamma"] = std::move(gamma);
  j["series"] = s.str();
  j["closed_form"] = s.closed_form();
  if (!s.is_zero()) {
    j["gkdim"] = s.gkdim();
    j["grade"] = s.grade();
    j["lambda"] = to_string(s.leading_lambda());
  }
  return j;
}

Json to_json(const GenDegree& g) {
  Json j;
  j["gen_degree"] = g.value;
  j["tested_to"] = g.bound;
  j["bound_from_gkdim"] = g.assumed_bound;
  if (!g.note.empty()) j["note"] = g.note;
  return j;
}

Json to_json(const IdealWindow& w, bool components) {
  Json j;
  j["ideal"] = w.provenance;
  j["window"] = w.window;
  if (w.tail) {
    j["tail"] = *w.tail;
  } else {
    j["tail"] = nullptr;
  }
  Json comps = Json::array();
  for (int n = 0; n <= w.window; ++n) {
    Json c;
    c["arity"] = n;
    c["dim"] = w.at(n).dim();
    c["codim"] = w.at(n).ambient_dim() - w.at(n).dim();
    c["top_dim"] = w.top(n).dim();
    if (components) c["rows"] = rows_json(w.at(n));
    comps.push_back(std::move(c));
  }
  j["components"] = std::move(comps);
  return j;
}

Json to_json(const AdmissibleSequence& seq) {
  Json j;
  j["m"] = seq.m;
  Json modules = Json::array();
  for (int a = seq.start(); a <= seq.m; ++a) {
    Json mod;
    mod["arity"] = a;
    mod["labels_hint"] = type_label(decompose_subspace(seq.at(a), a));
    mod["rows"] = rows_json(seq.at(a));
    modules.push_back(std::move(mod));
  }
  j["modules"] = std::move(modules);
  return j;
}

AdmissibleSequence sequence_from_json(const Json& j) {
  AdmissibleSequence seq;
  seq.m = j.at("m").get<int>();
  const Json& modules = j.at("modules");
  if (!modules.is_array() || modules.empty()) throw std::invalid_argument("\"modules\" must be a non-empty array");
  const int start = seq.m - static_cast<int>(modules.size()) + 1;
  for (std::size_t i = 0; i < modules.size(); ++i) {
    const int arity = start + static_cast<int>(i);
    if (modules[i].contains("arity") && modules[i].at("arity").get<int>() != arity) {
      throw std::invalid_argument("modules must run over consecutive arities ending at m");
    }
    if (arity < 1) throw std::invalid_argument("module arity below 1");
    seq.modules.push_back(module_from_json(modules[i], arity));
  }
  return seq;
}

AdmissibleSequence read_sequence(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot read sequence file " + file.string());
  try {
    return sequence_from_json(Json::parse(in));
  } catch (const Json::exception& e) {
    throw std::invalid_argument("sequence file " + file.string() + ": " + e.what());
  }
}

Json to_json(const ClassifiedIdeal& c) {
  Json j;
  j["kind"] = c.kind;
  j["label"] = c.label;
  j["series"] = to_json(c.series);
  j["u"] = c.series.is_zero() ? Json(0) : integer_json(c.series.gamma().back());
  return j;
}

Json to_json(const PairRow& r) {
  Json j;
  j["M4"] = type_label(r.m4);
  j["M5"] = type_label(r.m5);
  j["unique"] = r.unique;
  j["gen_degrees"] = r.gen_degrees;
  j["realizations"] = r.realizations;
  return j;
}

}  // namespace uas
