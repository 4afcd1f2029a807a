#include "uas/classify.hpp"
#include "uas/config.hpp"
#include "uas/growth.hpp"
#include "uas/ideal.hpp"
#include "uas/ideal_spec.hpp"
#include "uas/json_io.hpp"
#include "uas/pi_eval.hpp"
#include "uas/rep.hpp"
#include "uas/truncation.hpp"
#include "uas/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace uas;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFail = 2;

struct Options {
  bool json = false;
  std::string config;
  std::optional<int> window;
  std::optional<std::uint64_t> cap;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  bool arity7 = false;
};

Settings effective_settings(const Options& o) {
  Settings s;
  if (!o.config.empty()) s = load_settings(o.config, s);
  if (o.arity7) s.arity7 = true;
  if (o.window) s.window = *o.window;
  if (o.cap) s.cap = *o.cap;
  if (o.seed) s.seed = *o.seed;
  if (o.threads) s.threads = *o.threads;
  validate(s);
  return s;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

// ---- subcommands ----

int cmd_verify(const Options& o, const std::string& suite, bool timings, bool schema) {
  if (schema) {
    std::cout << verify_report_schema();
    return kExitOk;
  }
  std::vector<std::string> ids;
  if (suite == "all") {
    ids = verify_suite_ids();
  } else {
    ids.push_back(resolve_suite(suite));
  }
  bool all_pass = true;
  Json reports = Json::array();
  for (const auto& id : ids) {
    VerifyReport r = run_verify(id);
    all_pass = all_pass && r.pass();
    if (o.json) {
      reports.push_back(r.json(timings));
    } else {
      std::cout << r.text();
      if (timings) std::cout << "seconds: " << r.seconds << "\n";
      if (ids.size() > 1) std::cout << "\n";
    }
  }
  if (o.json) emit(ids.size() == 1 ? reports[0] : reports);
  return all_pass ? kExitOk : kExitFail;
}

int cmd_truncation(const Options& o, int k, int n, bool basis) {
  require_window(n, "truncation");
  Subspace u = truncation_kernel(k, n);
  Decomposition d = decompose_subspace(u, n);
  if (o.json) {
    Json j;
    j["k"] = k;
    j["n"] = n;
    j["dim"] = u.dim();
    j["formula_dim"] = to_string(truncation_dim(k, n));
    j["character"] = to_json(d);
    if (k == n) j["gamma"] = to_string(gamma(n));
    if (basis && k == n) {
      Json b = Json::array();
      for (const auto& [index, element] : specht_basis(n)) b.push_back(index.str());
      j["specht_basis"] = b;
    }
    emit(j);
    return kExitOk;
  }
  std::cout << "U(" << k << ")(" << n << "): dim " << u.dim() << " (closed form " << truncation_dim(k, n) << ")\n";
  std::cout << "character: " << d.str() << "\n";
  if (basis && k == n) {
    std::cout << "Specht basis:\n";
    for (const auto& [index, element] : specht_basis(n)) std::cout << "  " << index.str() << "\n";
  }
  return kExitOk;
}

int cmd_character(const Options& o, const std::string& text, int n, bool top) {
  require_window(n, "character");
  IdealSpec spec = parse_ideal_spec(text);
  Subspace comp = ideal_component(presentation_of(spec), n);
  if (top) comp = intersect(comp, truncation_kernel(n, n));
  Decomposition d = decompose_subspace(comp, n);
  if (o.json) {
    Json j;
    j["ideal"] = spec.str();
    j["arity"] = n;
    j["top"] = top;
    j["character"] = to_json(d);
    emit(j);
  } else {
    std::cout << (top ? "top of " : "") << spec.str() << " at arity " << n << ": dim " << comp.dim() << "\n";
    std::cout << "character: " << d.str() << "\n";
  }
  return kExitOk;
}

int cmd_ideal_dim(const Options& o, const std::string& text, int window, bool rows) {
  IdealSpec spec = parse_ideal_spec(text);
  IdealWindow w = window_of(spec, window);
  if (o.json) {
    emit(to_json(w, rows));
    return kExitOk;
  }
  std::cout << "ideal " << spec.str() << "\n";
  std::cout << pad("n", 4) << pad("dim I(n)", 12) << pad("codim", 10) << "top\n";
  for (int n = 0; n <= w.window; ++n) {
    std::cout << pad(std::to_string(n), 4) << pad(std::to_string(w.at(n).dim()), 12)
              << pad(std::to_string(w.at(n).ambient_dim() - w.at(n).dim()), 10) << w.top(n).dim() << "\n";
  }
  if (w.tail) std::cout << "contains U(" << *w.tail << ")\n";
  return kExitOk;
}

int cmd_gen_degree(const Options& o, const std::string& text) {
  IdealSpec spec = parse_ideal_spec(text);
  IdealWindow w = window_of(spec);
  GenDegree g = gen_degree(w);
  if (o.json) {
    Json j = to_json(g);
    j["ideal"] = spec.str();
    emit(j);
  } else {
    std::cout << g.value << "\n";
    if (!g.note.empty()) std::cout << "# " << g.note << "\n";
  }
  return kExitOk;
}

Json pair_table_json(int samples) {
  const Settings& s = settings();
  std::optional<std::filesystem::path> file;
  if (auto dir = cache_directory()) {
    file = *dir / ("pairs-samples" + std::to_string(samples) + "-seed" + std::to_string(s.seed) + ".json");
    if (std::filesystem::exists(*file)) {
      std::ifstream in(*file);
      return Json::parse(in);
    }
  }
  Json rows = Json::array();
  for (const auto& r : gkdim6_pair_table(samples, s.seed)) rows.push_back(to_json(r));
  if (file) {
    std::filesystem::create_directories(file->parent_path());
    std::ofstream(*file) << rows.dump(2) << "\n";
  }
  return rows;
}

int cmd_classify(const Options& o, int d, bool pairs, int samples) {
  if (pairs) {
    if (d != 6) throw std::invalid_argument("--pairs needs --gkdim 6");
    Json rows = pair_table_json(samples);
    if (o.json) {
      emit(rows);
      return kExitOk;
    }
    std::map<std::string, std::pair<int, bool>> counts;
    for (const auto& r : rows) {
      auto& c = counts[r.at("M4").get<std::string>()];
      ++c.first;
      c.second = c.second || !r.at("unique").get<bool>();
    }
    std::cout << "M5 choices per M4\n";
    for (const auto& [m4, c] : counts) std::cout << "  " << pad(m4, 32) << (c.second ? "infinitely many" : std::to_string(c.first)) << "\n";
    std::cout << "generating degrees\n";
    for (const auto& r : rows) {
      std::string gd;
      for (const auto& v : r.at("gen_degrees")) gd += (gd.empty() ? "" : " or ") + std::to_string(v.get<int>());
      std::cout << "  " << pad(r.at("M4").get<std::string>(), 32) << pad(r.at("M5").get<std::string>(), 48) << gd << "\n";
    }
    return kExitOk;
  }
  if (d == 6) {
    auto series = series_of_gkdim(6);
    if (o.json) {
      Json j = Json::array();
      for (const auto& s : series) j.push_back(to_json(s));
      emit(j);
    } else {
      std::cout << series.size() << " series\n";
      for (const auto& s : series) std::cout << "  " << s.str() << "\n";
    }
    return kExitOk;
  }
  auto ideals = classify_gkdim(d);
  if (o.json) {
    Json j = Json::array();
    for (const auto& c : ideals) {
      Json row = to_json(c);
      row["gen_degree"] = classified_gen_degree(c).value;
      j.push_back(std::move(row));
    }
    emit(j);
    return kExitOk;
  }
  std::map<std::string, int> kinds;
  for (const auto& c : ideals) ++kinds[c.kind];
  std::cout << ideals.size() << " ideals";
  std::string breakdown;
  for (const auto& [k, n] : kinds) breakdown += (breakdown.empty() ? "" : ", ") + std::to_string(n) + " " + k;
  std::cout << " (" << breakdown << ")\n";
  for (const auto& c : ideals) {
    std::cout << "  " << pad(c.kind, 12) << pad(c.label, 52) << pad(c.series.str(), 20) << "gd " << classified_gen_degree(c).value << "\n";
  }
  return kExitOk;
}

int cmd_codim_series(const Options& o, std::optional<int> grade, const std::string& ideal, const std::string& format) {
  std::vector<GammaSeries> series;
  if (!ideal.empty()) {
    series.push_back(gamma_series_of_quotient(window_of(parse_ideal_spec(ideal))));
  } else if (grade) {
    series = catalog(*grade);
  } else {
    throw std::invalid_argument("codim-series needs --grade or --ideal");
  }
  if (format == "csv") {
    std::cout << catalog_csv(series);
  } else if (format == "json" || o.json) {
    Json j = Json::array();
    for (const auto& s : series) j.push_back(to_json(s));
    emit(j);
  } else {
    std::cout << series.size() << " series\n";
    for (const auto& s : series) {
      std::cout << "  " << pad(s.str(), 20) << s.closed_form();
      if (!s.is_zero()) std::cout << "   lambda " << to_string(s.leading_lambda());
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_pi(const Options& o, const std::string& algebra, int n, const std::string& mode_name, std::size_t samples,
           const std::string& against) {
  require_window(n, "pi");
  FiniteAlgebra a = FiniteAlgebra::resolve(algebra);
  EvalMode mode;
  if (mode_name == "deterministic") {
    mode = EvalMode::deterministic();
  } else if (mode_name == "montecarlo") {
    mode = EvalMode::montecarlo(0, samples);
  } else if (mode_name != "auto") {
    throw std::invalid_argument("--mode must be auto, deterministic or montecarlo");
  }
  if (mode_name == "auto") mode.samples = samples;
  Json j;
  j["algebra"] = a.name();
  j["dim"] = a.dim();
  Json rows = Json::array();
  bool all_equal = true;
  std::optional<IdealWindow> ideal;
  if (!against.empty()) ideal = window_of(parse_ideal_spec(against), n);
  for (int k = 0; k <= n; ++k) {
    Json row;
    row["n"] = k;
    if (ideal) {
      CrossCheck c = cross_check(a, *ideal, k, mode);
      row["codim"] = SymmetricGroup::get(k).order() - c.identities_dim;
      row["identities_dim"] = c.identities_dim;
      row["ideal_dim"] = c.ideal_dim;
      row["verdict"] = c.verdict;
      row["status"] = c.status;
      all_equal = all_equal && c.equal;
    } else {
      Codimension c = codim(a, k, mode);
      row["codim"] = to_string(c.value);
      row["status"] = c.status;
    }
    rows.push_back(std::move(row));
  }
  j["rows"] = rows;
  if (o.json) {
    emit(j);
  } else {
    std::cout << "algebra " << a.name() << " (dim " << a.dim() << ")\n";
    for (const auto& r : rows) {
      std::cout << pad(std::to_string(r.at("n").get<int>()), 4) << "c_n = " << pad(r.at("codim").dump(), 8);
      if (ideal) std::cout << pad(r.at("verdict").get<std::string>(), 28);
      std::cout << r.at("status").get<std::string>() << "\n";
    }
  }
  return all_equal ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"uaswb: operadic ideals of unital associative algebras"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--config", o.config, "Settings file (key = value lines)");
  app.add_option("--window", o.window, "Largest arity to compute");
  app.add_option("--cap", o.cap, "Deterministic work budget");
  app.add_option("--seed", o.seed, "Seed for randomized steps");
  app.add_option("--threads", o.threads, "Worker threads");
  app.add_flag("--arity7", o.arity7, "Allow window 7");

  std::string suite;
  bool timings = false, schema = false;
  auto* verify = app.add_subcommand("verify", "Recompute a table and compare with the embedded expected values");
  verify->add_option("suite", suite, "Suite id, alias, or 'all'");
  verify->add_flag("--timings", timings, "Include timings");
  verify->add_flag("--schema", schema, "Print the JSON schema of the report");
  auto* list = app.add_subcommand("list-suites", "List verify suites");

  int k = 0, n = 0;
  bool basis = false;
  auto* trunc = app.add_subcommand("truncation", "Truncation ideal component U(k)(n)");
  trunc->add_option("--k", k, "Truncation index")->required();
  trunc->add_option("--n", n, "Arity")->required();
  trunc->add_flag("--basis", basis, "List the Specht basis (k = n)");

  std::string ideal_text;
  bool top = false;
  auto* character = app.add_subcommand("character", "Irreducible decomposition of an ideal component");
  character->add_option("--ideal", ideal_text, "Ideal expression")->required();
  character->add_option("--n", n, "Arity")->required();
  character->add_flag("--top", top, "Intersect with U(n)(n) first");

  int window = -1;
  bool rows = false;
  auto* idim = app.add_subcommand("ideal-dim", "Component dimensions of an ideal");
  idim->add_option("--ideal", ideal_text, "Ideal expression")->required();
  idim->add_option("--upto", window, "Largest arity (default: the window)");
  idim->add_flag("--rows", rows, "Include basis rows in JSON output");

  auto* gd = app.add_subcommand("gen-degree", "Generating degree of an ideal");
  gd->add_option("--ideal", ideal_text, "Ideal expression")->required();

  int gkdim = 5, samples = 1;
  bool pairs = false;
  auto* classify = app.add_subcommand("classify", "Ideals by the GK dimension of the quotient");
  classify->add_option("--gkdim", gkdim, "GK dimension (at most 6)")->required();
  classify->add_flag("--pairs", pairs, "Admissible pairs and generating degrees (GK dimension 6)");
  classify->add_option("--samples", samples, "Random realizations per family row");

  std::optional<int> grade;
  std::string format = "text";
  auto* series = app.add_subcommand("codim-series", "Codimension series catalogue");
  series->add_option("--grade", grade, "Grade (at most 5)");
  series->add_option("--ideal", ideal_text, "Series of a single quotient");
  series->add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));

  std::string algebra, mode = "auto", against;
  std::size_t pi_samples = 0;
  auto* pi = app.add_subcommand("pi", "Codimensions of a finite-dimensional algebra");
  pi->add_option("--algebra", algebra, "builtin:NAME[:K] or a JSON file")->required();
  pi->add_option("--n", n, "Largest arity")->required();
  pi->add_option("--mode", mode, "auto, deterministic or montecarlo");
  pi->add_option("--samples", pi_samples, "Monte Carlo samples (default 3 n!)");
  pi->add_option("--cross-check", against, "Compare the identities with this ideal");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }

  try {
    ScopedSettings scope(effective_settings(o));
    if (*verify) return cmd_verify(o, suite.empty() ? "all" : suite, timings, schema);
    if (*list) {
      for (const auto& id : verify_suite_ids()) {
        Json t = expected_table(id);
        std::cout << pad(id, 28) << t.value("title", "") << "\n";
      }
      return kExitOk;
    }
    if (*trunc) return cmd_truncation(o, k, n, basis);
    if (*character) return cmd_character(o, ideal_text, n, top);
    if (*idim) return cmd_ideal_dim(o, ideal_text, window, rows);
    if (*gd) return cmd_gen_degree(o, ideal_text);
    if (*classify) return cmd_classify(o, gkdim, pairs, samples);
    if (*series) return cmd_codim_series(o, grade, ideal_text, format);
    if (*pi) return cmd_pi(o, algebra, n, mode, pi_samples, against);
  } catch (const SpecError& e) {
    std::cerr << "uaswb: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "uaswb: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
