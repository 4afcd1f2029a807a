#include "uas/verify.hpp"

#include "uas/classify.hpp"
#include "uas/growth.hpp"
#include "uas/ideal.hpp"
#include "uas/ideal_spec.hpp"
#include "uas/operad.hpp"
#include "uas/pi_eval.hpp"
#include "uas/rep.hpp"
#include "uas/truncation.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <sstream>
#include <thread>

namespace uas {

namespace detail {
const std::map<std::string, std::string>& expected_tables();
}

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  std::string name;
  std::function<Json()> run;
};

struct Suite {
  std::string id;
  std::function<std::vector<Check>()> checks;
};

template <class F>
auto lazy(F f) {
  return std::async(std::launch::deferred, std::move(f)).share();
}

Json character_json(const Decomposition& d) { return to_json(d)["multiplicities"]; }

Json string_set(const std::set<Integer>& s) {
  Json out = Json::array();
  for (const auto& v : s) out.push_back(v.get_si());
  return out;
}

// ---- named elements ----

OperadElement specht4_combination(const std::vector<int>& coefs) {
  const auto basis = specht_basis(4);
  OperadElement z(4);
  for (std::size_t i = 0; i < coefs.size(); ++i) z += Rational(coefs[i]) * basis[i].second;
  return z;
}

// Coefficients of the component generators on the arity-4 Specht basis.
const std::map<std::string, std::vector<int>>& zeta_coefficients() {
  static const std::map<std::string, std::vector<int>> table = {
      {"1^4", {2, -2, 2, -1, 1, 1, -1, -1, 1}},
      {"2^2", {2, 4, 2, -1, 1, -2, 2, -1, 1}},
      {"3,1", {0, 0, 0, 1, 3, -2, 2, -3, -1}},
      {"2,1^2", {0, 0, 0, 1, -1, -1, 1, 1, -1}},
  };
  return table;
}

OperadElement zeta(const std::string& label) { return specht4_combination(zeta_coefficients().at(label)); }

OperadElement zeta_sum(const std::vector<std::string>& labels) {
  OperadElement z(4);
  for (const auto& l : labels) z += zeta(l);
  return z;
}

Permutation reversal(int n) {
  std::vector<int> seq;
  for (int i = n; i >= 1; --i) seq.push_back(i);
  return Permutation(seq);
}

OperadElement beta5() { return act(tau_composite({2, 3}), reversal(5)) + act(tau_n(5), reversal(5)); }

OperadElement beta6() {
  return act(tau_composite({2, 2, 2}), Permutation({2, 1, 4, 3, 6, 5})) + act(tau_composite({2, 4}), reversal(6)) +
         act(tau_composite({3, 3}), Permutation({3, 2, 1, 6, 5, 4})) + act(tau_n(6), reversal(6));
}

OperadElement zeta4() { return act(tau_composite({2, 2}), Permutation({2, 1, 4, 3})) + act(tau_n(4), reversal(4)); }

OperadElement alpha() { return iota(0, 3, tau_n(3)) + alternating_sum(6); }

// A proper submodule of U(4)(4) with its generator: arity-4 rows use Σζ,
// arity-5 rows lift it by one input and add β5, arity-6 rows by two and add
// the lifted β5 and β6. For the zero module the lifted β5 is still needed:
// β6 lies in U(6) and cannot generate U(5).
struct TypeOneRow {
  std::vector<std::string> labels;
  int generator_arity;
};

const std::vector<TypeOneRow>& type_one_rows() {
  static const std::vector<TypeOneRow> rows = {
      {{"1^4", "3,1", "2,1^2"}, 4}, {{"1^4", "2^2", "3,1"}, 4},   {{"1^4", "3,1"}, 4},
      {{"1^4", "2^2", "2,1^2"}, 5}, {{"1^4", "2,1^2"}, 5},        {{"1^4", "2^2"}, 5},
      {{"1^4"}, 5},                 {{"2^2", "3,1", "2,1^2"}, 6}, {{"2^2", "2,1^2"}, 6},
      {{"3,1", "2,1^2"}, 6},        {{"2^2", "3,1"}, 6},          {{"3,1"}, 6},
      {{"2,1^2"}, 6},               {{"2^2"}, 6},                 {{}, 6},
  };
  return rows;
}

std::vector<Partition> partitions_of(const std::vector<std::string>& labels) {
  std::vector<Partition> out;
  for (const auto& l : labels) out.push_back(Partition::parse(l));
  std::sort(out.begin(), out.end());
  return out;
}

std::string module_label(const std::vector<std::string>& labels) {
  const auto parts = partitions_of(labels);
  if (parts.empty()) return "0";
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "+") + irreducible_label(p);
  return out;
}

std::string gt1_label(const std::vector<std::string>& labels) { return "GT1(4; " + module_label(labels) + ")"; }

Subspace top4_module(const std::vector<std::string>& labels) {
  return components_by_label(truncation_kernel(4, 4), 4, partitions_of(labels));
}

OperadElement type_one_generator(const TypeOneRow& row) {
  switch (row.generator_arity) {
    case 4: return zeta_sum(row.labels);
    case 5: return iota(0, 1, zeta_sum(row.labels)) + beta5();
    default: return iota(0, 2, zeta_sum(row.labels)) + iota(0, 1, beta5()) + beta6();
  }
}

// Generating identities written as polynomials in left-normed commutators.
OperadElement specht4_identity(const std::vector<std::string>& labels) {
  static const std::vector<std::vector<std::vector<int>>> h = {
      {{2, 1}, {4, 3}}, {{3, 1}, {4, 2}}, {{3, 2}, {4, 1}}, {{4, 1, 2, 3}}, {{4, 1, 3, 2}},
      {{4, 2, 1, 3}},   {{4, 2, 3, 1}},   {{4, 3, 1, 2}},   {{4, 3, 2, 1}}};
  OperadElement f(4);
  for (const auto& l : labels) {
    const auto& c = zeta_coefficients().at(l);
    for (std::size_t i = 0; i < h.size(); ++i) f += Rational(c[i]) * proper_polynomial(h[i]);
  }
  return f;
}

OperadElement g5_identity() { return proper_polynomial({{5, 4}, {3, 2, 1}}) + proper_polynomial({{5, 4, 3, 2, 1}}); }

OperadElement g6_identity() {
  return proper_polynomial({{2, 1}, {4, 3}, {6, 5}}) + proper_polynomial({{6, 5}, {4, 3, 2, 1}}) +
         proper_polynomial({{3, 2, 1}, {6, 5, 4}}) + proper_polynomial({{6, 5, 4, 3, 2, 1}});
}

OperadElement type_one_identity(const TypeOneRow& row) {
  switch (row.generator_arity) {
    case 4: return specht4_identity(row.labels);
    case 5: return iota(0, 1, specht4_identity(row.labels)) + g5_identity();
    default: return iota(0, 2, specht4_identity(row.labels)) + iota(0, 1, g5_identity()) + g6_identity();
  }
}

// [x3,x1,x2]x4x5x6 + Σ sgn(σ) x_σ(1)⋯x_σ(6), assembled word by word.
OperadElement commutator_cube_identity() {
  MultilinearPolynomial f(6);
  const auto& sym = SymmetricGroup::get(6);
  for (std::size_t r = 0; r < sym.order(); ++r) {
    const Permutation s = sym.element(r);
    f.add_term(s.seq(), Rational(s.sign()));
  }
  return iota(0, 3, proper_polynomial({{3, 1, 2}})) + psi(f);
}

IdealPresentation t3() { return IdealPresentation::module(3, truncation_kernel(3, 3)); }
IdealPresentation t3_u5() { return t3() + IdealPresentation::truncation(5); }
IdealPresentation top_generated(int k) { return IdealPresentation::module(k, truncation_kernel(k, k)); }

// ---- suites ----

std::vector<Check> commutator_cube() {
  auto t3_6 = lazy([] { return ideal_component(t3(), 6); });
  auto both_6 = lazy([] { return ideal_component(t3_u5(), 6); });
  return {
      {"dim T(3)(6)", [=] { return Json(t3_6.get().dim()); }},
      {"dim (T(3)+U(5))(6)", [=] { return Json(both_6.get().dim()); }},
      {"quotient dim at arity 6", [=] { return Json(both_6.get().ambient_dim() - both_6.get().dim()); }},
      {"U(5)(6) inside T(3)(6)", [=] { return Json(t3_6.get().contains(truncation_kernel(5, 6))); }},
  };
}

std::vector<Check> tau4_generators() {
  std::vector<Check> out;
  for (const auto& [label, coefs] : zeta_coefficients()) {
    const std::string name = irreducible_label(Partition::parse(label));
    out.push_back({"zeta " + name + " lies in its component", [label] {
                     Subspace comp = isotypic_component(truncation_kernel(4, 4), 4, Partition::parse(label));
                     return Json(comp.contains(zeta(label).dense()));
                   }});
    out.push_back({"zeta " + name + " generates its component", [label] {
                     Subspace comp = isotypic_component(truncation_kernel(4, 4), 4, Partition::parse(label));
                     return Json(cyclic_span(zeta(label)) == comp);
                   }});
  }
  out.push_back({"tau4 from zeta4", [] {
                   const OperadElement z = zeta4();
                   const OperadElement x = z + act(z, Permutation({2, 1, 3, 4}));
                   const std::vector<std::pair<int, std::vector<int>>> terms = {
                       {1, {1, 4, 2, 3}}, {-1, {1, 3, 2, 4}}, {1, {2, 3, 1, 4}}, {-1, {2, 4, 1, 3}}, {-2, {3, 4, 1, 2}}};
                   OperadElement rhs(4);
                   for (const auto& [c, p] : terms) rhs += Rational(c) * act(x, Permutation(p));
                   rhs *= Rational(1, 4);
                   return Json(rhs == tau_n(4));
                 }});
  out.push_back({"zeta4 generates U(4)(4)", [] { return Json(cyclic_span(zeta4()) == truncation_kernel(4, 4)); }});
  return out;
}

std::vector<Check> type1_generating_degrees() {
  std::vector<Check> out;
  for (const auto& row : type_one_rows()) {
    auto window = lazy([labels = row.labels] { return gt_type1(4, top4_module(labels)); });
    const std::string label = gt1_label(row.labels);
    out.push_back({"gd " + label, [window] { return Json(gen_degree(window.get()).value); }});
    out.push_back({"generator of " + label, [window, row] { return Json(generates(type_one_generator(row), window.get())); }});
  }
  auto both = lazy([] { return ideal_window(t3_u5()); });
  out.push_back({"gd T(3)+U(5)", [both] { return Json(gen_degree(both.get()).value); }});
  out.push_back({"alpha generates T(3)+U(5)", [both] { return Json(generates(alpha(), both.get())); }});
  out.push_back({"beta5 generates U(5)(5)", [] { return Json(cyclic_span(beta5()) == truncation_kernel(5, 5)); }});
  out.push_back({"beta6 generates U(6)(6)", [] { return Json(cyclic_span(beta6()) == truncation_kernel(6, 6)); }});
  out.push_back({"beta6 alone generates GT1(4; 0)", [] { return Json(generates(beta6(), gt_type1(4, top4_module({})))); }});
  out.push_back({"beta6 generates U(6)", [] { return Json(generates(beta6(), ideal_window(IdealPresentation::truncation(6)))); }});
  return out;
}

std::vector<Check> gkdim5_identities() {
  std::vector<Check> out;
  for (const auto& row : type_one_rows()) {
    const std::string label = gt1_label(row.labels);
    out.push_back({"identity generates " + label, [row] {
                     return Json(generates(type_one_identity(row), gt_type1(4, top4_module(row.labels))));
                   }});
  }
  out.push_back({"g6 alone generates GT1(4; 0)", [] { return Json(generates(g6_identity(), gt_type1(4, top4_module({})))); }});
  out.push_back({"identity generates T(3)+U(5)", [] { return Json(generates(commutator_cube_identity(), ideal_window(t3_u5()))); }});
  out.push_back({"commutator generates U(2)", [] {
                   return Json(generates(proper_polynomial({{1, 2}}), ideal_window(IdealPresentation::truncation(2))));
                 }});
  out.push_back({"identity generates U(3)", [] {
                   OperadElement f = proper_polynomial({{2, 1}, {4, 3}}) + proper_polynomial({{4, 3, 2, 1}}) +
                                     iota(0, 1, proper_polynomial({{3, 2, 1}}));
                   return Json(generates(f, ideal_window(IdealPresentation::truncation(3))));
                 }});
  out.push_back({"identity generates U(4)", [] {
                   OperadElement f = proper_polynomial({{2, 1}, {4, 3}}) + proper_polynomial({{4, 3, 2, 1}});
                   return Json(generates(f, ideal_window(IdealPresentation::truncation(4))));
                 }});
  const std::vector<std::pair<std::string, IdealPresentation>> quotients = {
      {"U(3)", IdealPresentation::truncation(3)}, {"U(4)", IdealPresentation::truncation(4)}, {"T(3)+U(5)", t3_u5()}};
  for (const auto& [name, pres] : quotients) {
    out.push_back({"codimensions of " + name + " for n=0..6", [pres] {
                     IdealWindow w = ideal_window(pres);
                     Json c = Json::array();
                     for (int n = 0; n <= 6; ++n) c.push_back(w.at(n).ambient_dim() - w.at(n).dim());
                     return c;
                   }});
  }
  return out;
}

std::vector<Check> gkdim5_classification() {
  auto ideals = lazy([] { return classify_gkdim(5); });
  auto count_kind = [ideals](const std::string& kind) {
    return [ideals, kind] {
      return Json(std::count_if(ideals.get().begin(), ideals.get().end(), [&](const auto& c) { return c.kind == kind; }));
    };
  };
  std::vector<Check> out = {
      {"ideal count", [ideals] { return Json(ideals.get().size()); }},
      {"truncation ideals", count_kind("truncation")},
      {"type I ideals", count_kind("type I")},
      {"type II ideals", count_kind("type II")},
      {"4-admissible pairs", [] {
         std::size_t pairs = 0;
         for (const auto& c : admissible_classes(4)) {
           if (c.type_one()) continue;
           pairs += c.count().value_or(1000000);
         }
         return Json(pairs);
       }},
      {"type II ideal equals T(3)+U(5)", [ideals] {
         IdealWindow both = ideal_window(t3_u5());
         for (const auto& c : ideals.get()) {
           if (c.kind != "type II") continue;
           for (int n = 0; n <= both.window; ++n) {
             if (!(c.ideal.at(n) == both.at(n))) return Json(false);
           }
           return Json(true);
         }
         return Json(false);
       }},
      {"series of the type II quotient", [ideals] {
         for (const auto& c : ideals.get()) {
           if (c.kind == "type II") return Json(c.series.str());
         }
         return Json(nullptr);
       }},
  };
  // Locate each classified type-I ideal by the type of its module.
  auto by_module = lazy([ideals] {
    std::map<std::string, const ClassifiedIdeal*> found;
    for (const auto& c : ideals.get()) {
      if (c.kind == "truncation") found["0"] = &c;
      if (c.kind == "type I") found[type_label(decompose_subspace(c.sequence.modules.back(), 4))] = &c;
    }
    return found;
  });
  for (const auto& row : type_one_rows()) {
    const std::string key = type_label(decompose_subspace(top4_module(row.labels), 4));
    const std::string label = gt1_label(row.labels);
    out.push_back({"u of " + label, [by_module, key] {
                     auto it = by_module.get().find(key);
                     if (it == by_module.get().end()) return Json(nullptr);
                     const auto& g = it->second->series.gamma();
                     return Json(g.size() == 5 ? g[4].get_si() : -1);
                   }});
    out.push_back({"gd of " + label, [by_module, key] {
                     auto it = by_module.get().find(key);
                     if (it == by_module.get().end()) return Json(nullptr);
                     return Json(classified_gen_degree(*it->second).value);
                   }});
  }
  return out;
}

std::vector<Check> maximal_ideals() {
  auto windows = lazy([] {
    std::map<std::string, IdealWindow> named;
    for (const auto& c : classify_gkdim(5)) {
      std::string name = c.kind == "type II" ? "T(3)+U(5)"
                         : c.kind == "truncation"
                             ? "U(5)"
                             : "GT1(4; " + type_label(decompose_subspace(c.sequence.modules.back(), 4)) + ")";
      named.emplace(name, c.ideal);
    }
    return named;
  });
  std::vector<Check> out = {
      {"maximal ideals", [windows] {
         std::vector<IdealWindow> all;
         for (const auto& [name, w] : windows.get()) all.push_back(w);
         Json names = Json::array();
         for (const auto& [name, w] : windows.get()) {
           if (maximal_wrt_gkdim(w, all)) names.push_back(name);
         }
         return names;
       }},
  };
  const std::vector<std::vector<std::string>> modules = {
      {"1^4", "2,1^2", "3,1"}, {"1^4", "2^2", "3,1"}, {"1^4", "2^2", "2,1^2"}, {"2^2", "2,1^2", "3,1"}};
  for (const auto& labels : modules) {
    const std::string name = gt1_label(labels);
    out.push_back({name + " inside T(3)+U(5)", [windows, name] {
                     const auto& w = windows.get();
                     return Json(contains_ideal(w.at("T(3)+U(5)"), w.at(name)));
                   }});
  }
  out.push_back({"T(3)+U(5) inside " + gt1_label(modules.back()), [windows, name = gt1_label(modules.back())] {
                   const auto& w = windows.get();
                   return Json(contains_ideal(w.at(name), w.at("T(3)+U(5)")));
                 }});
  return out;
}

std::vector<Check> gkdim6_pairs() {
  auto classes = lazy([] {
    std::vector<AdmissibleClass> out;
    for (auto& c : admissible_classes(5)) {
      if (c.start == 4) out.push_back(std::move(c));
    }
    return out;
  });
  auto table = lazy([] { return gkdim6_pair_table(1, settings().seed); });
  std::vector<Check> out;
  const std::vector<std::vector<std::string>> m4s = {
      {"1^4", "3,1", "2,1^2"}, {"1^4", "2^2", "3,1"}, {"1^4", "3,1"},   {"1^4", "2^2", "2,1^2"}, {"1^4", "2,1^2"},
      {"1^4", "2^2"},          {"1^4"},               {"2^2", "3,1", "2,1^2"}, {"3,1", "2,1^2"}, {"2^2", "2,1^2"},
      {"2^2", "3,1"},          {"3,1"},               {"2,1^2"},        {"2^2"}};
  for (const auto& labels : m4s) {
    const std::string key = type_label(decompose_subspace(top4_module(labels), 4));
    out.push_back({"M5 choices over M4=" + module_label(labels), [classes, key] {
                     for (const auto& c : classes.get()) {
                       if (type_label(c.prefix_types.front()) != key) continue;
                       auto n = c.count();
                       return n ? Json(*n) : Json("infinite");
                     }
                     return Json(0);
                   }});
  }
  out.push_back({"M5 types over M4=V[1^4]", [classes] {
                   for (const auto& c : classes.get()) {
                     if (type_label(c.prefix_types.front()) == "V[1^4]") return Json(c.tops.size());
                   }
                   return Json(0);
                 }});
  out.push_back({"gd rows", [table] {
                   Json rows = Json::object();
                   for (const auto& r : table.get()) {
                     Json degrees = Json::array();
                     for (int d : r.gen_degrees) degrees.push_back(d);
                     rows["M4=" + type_label(r.m4) + " M5=" + type_label(r.m5)] = degrees;
                   }
                   return rows;
                 }});
  return out;
}

Json series_list(const std::vector<GammaSeries>& s) {
  Json out = Json::array();
  for (const auto& x : s) out.push_back(x.str());
  return out;
}

Json lambda_list(const std::set<Rational>& s) {
  Json out = Json::array();
  for (const auto& x : s) out.push_back(to_string(x));
  return out;
}

std::vector<Check> grade4_series() {
  std::vector<Check> out;
  for (int g = 0; g <= 4; ++g) {
    out.push_back({"series of grade " + std::to_string(g), [g] { return series_list(catalog(g)); }});
    out.push_back({"lambda set of grade " + std::to_string(g), [g] { return lambda_list(lambda_set(g)); }});
  }
  return out;
}

std::vector<Check> grade5_series() {
  auto cat = lazy([] { return catalog(5); });
  auto value_set = [cat](int which) {
    return [cat, which] {
      std::set<Integer> s;
      for (const auto& series : cat.get()) {
        const auto& g = series.gamma();
        if (g.size() != 6) continue;
        if (which == 9 && g[4] == 9) s.insert(g[5]);
        if (which == 8 && g[4] == 8) s.insert(g[5]);
        if (which == 7 && g[4] == 7) s.insert(g[5]);
        if (which == 0 && g[5] == 4 && g[4] < 7) s.insert(g[4]);
      }
      return string_set(s);
    };
  };
  return {
      {"series count", [cat] { return Json(cat.get().size()); }},
      {"u with gamma4 = 9", value_set(9)},
      {"x with gamma4 = 8", value_set(8)},
      {"y with gamma4 = 7", value_set(7)},
      {"z with gamma5 = 4", value_set(0)},
      {"common prefix (1,0,1,2)", [cat] {
         for (const auto& s : cat.get()) {
           const auto& g = s.gamma();
           if (g.size() != 6 || g[0] != 1 || g[1] != 0 || g[2] != 1 || g[3] != 2) return Json(false);
         }
         return Json(true);
       }},
      {"lambda set", [] { return lambda_list(lambda_set(5)); }},
  };
}

std::vector<Check> truncation_generation() {
  auto u3_4 = lazy([] { return ideal_component(top_generated(3), 4); });
  auto u5_6 = lazy([] { return ideal_component(top_generated(5), 6); });
  auto sign_twists = [](int k, std::shared_future<Subspace> space) {
    return [k, space] {
      std::mt19937_64 rng(settings().seed + static_cast<std::uint64_t>(k));
      const auto& sym = SymmetricGroup::get(k + 1);
      const OperadElement tau = tau_composite(std::vector<int>((k + 1) / 2, 2));
      for (int trial = 0; trial < 50; ++trial) {
        const Permutation s = sym.element(rng() % sym.order());
        OperadElement v = Rational(s.sign()) * act(tau, s) - tau;
        if (!space.get().contains(v.dense())) return Json(false);
      }
      return Json(true);
    };
  };
  std::vector<Check> out = {
      {"dim <U(3)(3)>(4)", [u3_4] { return Json(u3_4.get().dim()); }},
      {"dim U(3)(4)", [] { return Json(truncation_kernel(3, 4).dim()); }},
      {"dim <U(5)(5)>(6)", [u5_6] { return Json(u5_6.get().dim()); }},
      {"dim U(5)(6)", [] { return Json(truncation_kernel(5, 6).dim()); }},
      {"tau_{2,2} in <U(3)(3)>(4)", [u3_4] { return Json(u3_4.get().contains(tau_composite({2, 2}).dense())); }},
      {"tau_{2,2,2} in <U(5)(5)>(6)", [u5_6] { return Json(u5_6.get().contains(tau_composite({2, 2, 2}).dense())); }},
      {"50 sign twists of tau_{2,2} in <U(3)(3)>(4)", sign_twists(3, u3_4)},
      {"50 sign twists of tau_{2,2,2} in <U(5)(5)>(6)", sign_twists(5, u5_6)},
  };
  for (int k = 2; k <= 5; ++k) {
    out.push_back({"gd U(" + std::to_string(k) + ")", [k] {
                     return Json(gen_degree(ideal_window(IdealPresentation::truncation(k))).value);
                   }});
  }
  return out;
}

std::vector<Check> reach_characters() {
  std::vector<Check> out;
  const std::vector<std::vector<std::string>> m4s = {
      {"1^4", "2^2", "2,1^2"}, {"1^4", "2,1^2"}, {"1^4", "2^2"},  {"1^4"},   {"2^2", "3,1", "2,1^2"}, {"3,1", "2,1^2"},
      {"2^2", "2,1^2"},        {"2^2", "3,1"},   {"3,1"},         {"2,1^2"}, {"2^2"}};
  for (const auto& labels : m4s) {
    out.push_back({"reach of " + module_label(labels), [labels] {
                     auto pres = IdealPresentation::module(4, top4_module(labels));
                     Subspace reach = intersect(ideal_component(pres, 5), truncation_kernel(5, 5));
                     return character_json(decompose_subspace(reach, 5));
                   }});
  }
  return out;
}

std::vector<Check> top_characters() {
  auto chi = [](int k, int n) {
    return [k, n] { return character_json(decompose_subspace(truncation_kernel(k, n), n)); };
  };
  auto six = lazy([] {
    return ideal_component(IdealPresentation::module(4, top4_module({"1^4", "2^2", "2,1^2"})), 6);
  });
  return {
      {"U(3)(3)", chi(3, 3)},
      {"U(4)(4)", chi(4, 4)},
      {"U(3)(4)", chi(3, 4)},
      {"U(5)(5)", chi(5, 5)},
      {"U(6)(6)", chi(6, 6)},
      {"<V[1^4]+V[2,1^2]+V[2^2]>(6)", [six] { return character_json(decompose_subspace(six.get(), 6)); }},
      {"U(6)(6) inside <V[1^4]+V[2,1^2]+V[2^2]>(6)", [six] { return Json(six.get().contains(truncation_kernel(6, 6))); }},
  };
}

std::vector<Check> grassmann_series() {
  auto quotient = [](int w) {
    return [w] { return Json(gamma_series_of_quotient(ideal_window(t3() + IdealPresentation::truncation(2 * w + 1))).str()); };
  };
  std::vector<Check> out = {
      {"series of T(3)+U(3)", quotient(1)},
      {"series of T(3)+U(5)", quotient(2)},
      {"T(3)+U(5) equals T(3)+U(6)", [] {
         IdealWindow a = ideal_window(t3_u5()), b = ideal_window(t3() + IdealPresentation::truncation(6));
         for (int n = 0; n <= a.window; ++n) {
           if (!(a.at(n) == b.at(n))) return Json(false);
         }
         return Json(true);
       }},
      {"grade and lambda of T(3)+U(5)", [] {
         GammaSeries s = gamma_series_of_quotient(ideal_window(t3_u5()));
         return Json::array({s.grade(), to_string(s.leading_lambda())});
       }},
      {"T(3)+U(5) series in the grade 4 catalogue", [] {
         auto cat = catalog(4);
         return Json(std::find(cat.begin(), cat.end(), GammaSeries::parse("(1,0,1,0,1)")) != cat.end());
       }},
      {"quotient dims of T(3) for n=0..6", [] {
         IdealWindow w = ideal_window(t3());
         Json c = Json::array();
         for (int n = 0; n <= 6; ++n) c.push_back(w.at(n).ambient_dim() - w.at(n).dim());
         return c;
       }},
      {"Grassmann codimensions for n=1..4", [] {
         Json c = Json::array();
         for (int n = 1; n <= 4; ++n) {
           c.push_back(codim(FiniteAlgebra::builtin("grassmann", n), n, EvalMode::deterministic()).value.get_si());
         }
         return c;
       }},
  };
  return out;
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"commutator-cube", commutator_cube},
      {"gkdim5-classification", gkdim5_classification},
      {"gkdim5-identities", gkdim5_identities},
      {"gkdim6-pairs", gkdim6_pairs},
      {"grade4-series", grade4_series},
      {"grade5-series", grade5_series},
      {"grassmann-series", grassmann_series},
      {"maximal-ideals", maximal_ideals},
      {"reach-characters", reach_characters},
      {"tau4-generators", tau4_generators},
      {"top-characters", top_characters},
      {"truncation-generation", truncation_generation},
      {"type1-generating-degrees", type1_generating_degrees},
  };
  return all;
}

// Character objects compare by partition, whatever spelling the keys use.
nlohmann::json normalize(const Json& j, const std::string& kind) {
  nlohmann::json out = nlohmann::json::parse(j.dump());
  if (kind == "character" && out.is_object()) {
    nlohmann::json canon = nlohmann::json::object();
    for (auto& [key, value] : out.items()) canon[Partition::parse(key).label()] = value;
    return canon;
  }
  if (kind == "set" && out.is_array()) {
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.dump() < b.dump(); });
  }
  return out;
}

bool compare(const Json& expected, const Json& computed, const std::string& kind) {
  if (kind == "one-of-sets") {
    // expected: {row: [allowed values]}; computed: {row: [observed values]}
    if (!expected.is_object() || !computed.is_object() || expected.size() != computed.size()) return false;
    for (auto it = expected.begin(); it != expected.end(); ++it) {
      if (!computed.contains(it.key())) return false;
      const Json& seen = computed.at(it.key());
      if (seen.empty()) return false;
      for (const auto& v : seen) {
        if (std::find(it.value().begin(), it.value().end(), v) == it.value().end()) return false;
      }
    }
    return true;
  }
  return normalize(expected, kind) == normalize(computed, kind);
}


}  // namespace

std::vector<std::string> verify_suite_ids() {
  std::vector<std::string> ids;
  for (const auto& s : suites()) ids.push_back(s.id);
  return ids;
}

Json expected_table(std::string_view suite) {
  const auto& tables = detail::expected_tables();
  auto it = tables.find(std::string(suite));
  if (it == tables.end()) throw std::invalid_argument("no expected values for suite " + std::string(suite));
  return Json::parse(it->second);
}

std::string resolve_suite(std::string_view id) {
  for (const auto& s : suites()) {
    if (s.id == id) return s.id;
  }
  for (const auto& s : suites()) {
    Json table = expected_table(s.id);
    for (const auto& alias : table.value("aliases", Json::array())) {
      if (alias.get<std::string>() == id) return s.id;
    }
  }
  std::string known;
  for (const auto& s : suites()) known += (known.empty() ? "" : ", ") + s.id;
  throw std::invalid_argument("unknown verify suite '" + std::string(id) + "' (known: " + known + ")");
}

VerifyReport run_verify(std::string_view id) {
  const std::string suite_id = resolve_suite(id);
  const auto& suite = *std::find_if(suites().begin(), suites().end(), [&](const Suite& s) { return s.id == suite_id; });
  const Json table = expected_table(suite_id);
  const Json& expected = table.at("checks");

  VerifyReport report;
  report.suite = suite_id;
  report.anchor = table.value("anchor", "");
  report.title = table.value("title", "");
  report.settings = settings();
  const auto start = Clock::now();

  std::vector<Check> checks = suite.checks();
  std::vector<VerifyRow> rows(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      VerifyRow& row = rows[i];
      row.check = checks[i].name;
      const auto t0 = Clock::now();
      try {
        row.computed = checks[i].run();
      } catch (const std::exception& e) {
        row.computed = std::string("error: ") + e.what();
      }
      row.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
      if (expected.contains(row.check)) {
        const Json& entry = expected.at(row.check);
        row.expected = entry.at("expected");
        row.source = entry.value("source", "published");
        row.pass = compare(row.expected, row.computed, entry.value("kind", "value"));
      } else {
        row.expected = nullptr;
        row.source = "missing";
      }
    }
  };
  const int threads = std::max(1, std::min<int>(settings().threads, static_cast<int>(checks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  // Expected values with no computation behind them fail loudly.
  for (auto it = expected.begin(); it != expected.end(); ++it) {
    if (std::none_of(rows.begin(), rows.end(), [&](const VerifyRow& r) { return r.check == it.key(); })) {
      VerifyRow row;
      row.check = it.key();
      row.expected = it.value().at("expected");
      row.computed = "not computed";
      row.source = it.value().value("source", "published");
      rows.push_back(std::move(row));
    }
  }
  std::sort(rows.begin(), rows.end(), [](const VerifyRow& a, const VerifyRow& b) { return a.check < b.check; });
  report.rows = std::move(rows);
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

bool VerifyReport::pass() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.pass; });
}

Json VerifyReport::json(bool timings) const {
  Json j;
  j["suite"] = suite;
  j["anchor"] = anchor;
  j["title"] = title;
  j["status"] = pass() ? "PASS" : "FAIL";
  Json cfg;
  cfg["window"] = settings.window;
  cfg["cap"] = settings.cap;
  cfg["seed"] = settings.seed;
  // the thread count never changes results, so it stays out of the report
  cfg["arity7"] = settings.arity7;
  j["settings"] = std::move(cfg);
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["check"] = r.check;
    row["expected"] = r.expected;
    row["computed"] = r.computed;
    row["source"] = r.source;
    row["status"] = r.pass ? "PASS" : "FAIL";
    if (timings) row["seconds"] = r.seconds;
    out.push_back(std::move(row));
  }
  j["rows"] = std::move(out);
  if (timings) j["seconds"] = seconds;
  return j;
}

std::string VerifyReport::text() const {
  std::ostringstream os;
  os << "suite " << suite << ": " << title << "\n";
  os << "anchor: " << anchor << "\n";
  os << "settings: window=" << settings.window << " cap=" << settings.cap << " seed=" << settings.seed << "\n";
  for (const auto& r : rows) {
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.check << "\n";
    if (r.pass) {
      os << "      value " << r.computed.dump() << "\n";
    } else {
      os << "      expected " << r.expected.dump() << "\n";
      os << "      computed " << r.computed.dump() << "\n";
    }
  }
  const auto passed = std::count_if(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.pass; });
  os << "overall " << (pass() ? "PASS" : "FAIL") << " (" << passed << "/" << rows.size() << " checks)\n";
  return os.str();
}

const std::string& verify_report_schema() {
  static const std::string schema = R"({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "VerifyReport",
  "type": "object",
  "required": ["suite", "anchor", "title", "status", "settings", "rows"],
  "properties": {
    "suite": {"type": "string"},
    "anchor": {"type": "string"},
    "title": {"type": "string"},
    "status": {"enum": ["PASS", "FAIL"]},
    "settings": {
      "type": "object",
      "required": ["window", "cap", "seed", "arity7"],
      "properties": {
        "window": {"type": "integer"},
        "cap": {"type": "integer"},
        "seed": {"type": "integer"},
        "arity7": {"type": "boolean"}
      }
    },
    "rows": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["check", "expected", "computed", "source", "status"],
        "properties": {
          "check": {"type": "string"},
          "expected": {},
          "computed": {},
          "source": {"enum": ["published", "derived", "missing"]},
          "status": {"enum": ["PASS", "FAIL"]},
          "seconds": {"type": "number"}
        }
      }
    },
    "seconds": {"type": "number"}
  }
}
)";
  return schema;
}

}  // namespace uas
