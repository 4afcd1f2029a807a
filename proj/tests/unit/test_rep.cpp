#include "doctest.h"
#include "uas/rep.hpp"
#include "uas/truncation.hpp"

using namespace uas;

namespace {

Partition P(const char* s) { return Partition::parse(s); }

Decomposition decomposition_of(int n, std::vector<std::pair<const char*, int>> entries) {
  Decomposition d;
  d.n = n;
  for (auto [label, m] : entries) d.multiplicity[P(label)] = m;
  return d;
}

// Trace through explicit coordinates: express row_j·σ in the row basis.
CharacterVector character_by_coordinates(const Subspace& w, int n) {
  CharacterVector chi = CharacterVector::zero(n);
  const auto& classes = conjugacy_classes(n);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    auto map = right_action_map(n, classes[k].representative);
    Rational trace = 0;
    for (std::size_t j = 0; j < w.dim(); ++j) trace += w.coordinates(map.apply(w.row(j)))[j];
    chi.values[k] = trace;
  }
  return chi;
}

OperadElement specht_combination(const std::vector<int>& coefs) {
  auto basis = specht_basis(4);
  OperadElement z(4);
  for (std::size_t i = 0; i < coefs.size(); ++i) z += Rational(coefs[i]) * basis[i].second;
  return z;
}

}  // namespace

TEST_CASE("characters of truncation components") {
  CHECK(decompose_subspace(truncation_kernel(3, 3), 3) == decomposition_of(3, {{"2,1", 1}}));
  CHECK(decompose_subspace(truncation_kernel(4, 4), 4) ==
        decomposition_of(4, {{"1^4", 1}, {"2^2", 1}, {"2,1^2", 1}, {"3,1", 1}}));
  CHECK(decompose_subspace(truncation_kernel(3, 4), 4) ==
        decomposition_of(4, {{"1^4", 1}, {"2^2", 2}, {"2,1^2", 2}, {"3,1", 2}}));
  CHECK(decompose_subspace(truncation_kernel(6, 6), 6) ==
        decomposition_of(6, {{"1^6", 1}, {"5,1", 1}, {"2,1^4", 2}, {"3^2", 2}, {"2^3", 2}, {"4,2", 3},
                             {"2^2,1^2", 4}, {"3,1^3", 4}, {"4,1^2", 3}, {"3,2,1", 6}}));
  for (int n = 1; n <= 5; ++n) {
    auto chi = character_of_subspace(Subspace::full(SymmetricGroup::get(n).order()), n);
    CHECK(chi.values.back() == (n == 1 ? 1 : 0));  // class (n) is last
    CHECK(chi.values.front() == Rational(Integer(factorial(n))));
  }
  CHECK(decompose(CharacterVector::zero(4)).multiplicity.empty());
  for (int n = 2; n <= 4; ++n) {
    for (int k = 1; k <= n; ++k) {
      auto w = truncation_kernel(k, n);
      CHECK(character_of_subspace(w, n) == character_by_coordinates(w, n));
      CHECK(decompose_subspace(w, n).dimension() == Integer(w.dim()));
    }
  }
  // a subspace that is not a submodule
  CHECK_THROWS(character_of_subspace(span_of(3, {OperadElement::unit(3)}), 3));
  CharacterVector half = Rational(1, 2) * irreducible_character(P("2,1"));
  CHECK_THROWS(decompose(half));
}

TEST_CASE("isotypic projectors") {
  auto full3 = Subspace::full(6);
  CHECK(apply_right(full3, 3, isotypic_projector(P("2,1"), 3)).dim() == 4);
  CHECK(isotypic_component(full3, 3, P("2,1")).dim() == 4);
  for (int n = 3; n <= 4; ++n) {
    auto full = Subspace::full(SymmetricGroup::get(n).order());
    for (const auto& lambda : partitions(n)) {
      auto img = apply_right(full, n, isotypic_projector(lambda, n));
      CHECK(Integer(img.dim()) == hook_dimension(lambda) * hook_dimension(lambda));
      CHECK(img == isotypic_block(lambda));
      for (const auto& mu : partitions(n)) {
        if (mu == lambda) continue;
        CHECK(apply_right(img, n, isotypic_projector(mu, n)).dim() == 0);
      }
    }
  }
  auto u4 = truncation_kernel(4, 4);
  Subspace total = Subspace::zero(24);
  for (const char* l : {"1^4", "2^2", "2,1^2", "3,1"}) {
    auto comp = isotypic_component(u4, 4, P(l));
    CHECK(Integer(comp.dim()) == hook_dimension(P(l)));
    CHECK(comp == apply_right(u4, 4, isotypic_projector(P(l), 4)));
    total = sum(total, comp);
  }
  CHECK(total == u4);
  CHECK(isotypic_component(u4, 4, P("4")).dim() == 0);
  CHECK_THROWS(isotypic_projector(P("3"), 4));
}

TEST_CASE("component generators of the arity-4 top component") {
  auto u4 = truncation_kernel(4, 4);
  struct Row {
    const char* label;
    std::vector<int> coefs;
  };
  std::vector<Row> table = {{"1^4", {2, -2, 2, -1, 1, 1, -1, -1, 1}},
                            {"2^2", {2, 4, 2, -1, 1, -2, 2, -1, 1}},
                            {"3,1", {0, 0, 0, 1, 3, -2, 2, -3, -1}},
                            {"2,1^2", {0, 0, 0, 1, -1, -1, 1, 1, -1}}};
  for (const auto& row : table) {
    auto zeta = specht_combination(row.coefs);
    auto comp = isotypic_component(u4, 4, P(row.label));
    CHECK(comp.contains(zeta.dense()));
    CHECK(cyclic_span(zeta) == comp);
    auto gen = component_generator(P(row.label), u4, 4);
    CHECK(cyclic_span(gen) == comp);
  }
  CHECK_THROWS(component_generator(P("2^2"), truncation_kernel(3, 4), 4));
}

TEST_CASE("cyclic spans") {
  CHECK(cyclic_span(tau_n(3)) == truncation_kernel(3, 3));
  CHECK(cyclic_span(OperadElement::unit(4)) == Subspace::full(24));
  auto rev = Permutation::parse("(5,4,3,2,1)");
  auto beta5 = act(tau_composite({2, 3}), rev) + act(tau_n(5), rev);
  CHECK(cyclic_span(beta5) == truncation_kernel(5, 5));
  CHECK_THROWS(cyclic_span(OperadElement(3)));
}

TEST_CASE("multiplicity spaces") {
  auto u4 = truncation_kernel(4, 4);
  for (const char* l : {"1^4", "2^2", "2,1^2", "3,1"}) CHECK(multiplicity_space(u4, 4, P(l)).dim() == 1);
  CHECK(multiplicity_space(u4, 4, P("4")).dim() == 0);
  CHECK(multiplicity_space(Subspace::zero(24), 4, P("3,1")).dim() == 0);
  auto u34 = truncation_kernel(3, 4);
  auto u5 = truncation_kernel(5, 5);
  CHECK(multiplicity_space(u5, 5, P("3,2")).dim() == 2);
  for (const auto& [w, n] : std::vector<std::pair<Subspace, int>>{{u34, 4}, {u5, 5}}) {
    auto d = decompose_subspace(w, n);
    for (const auto& lambda : partitions(n)) {
      auto ms = multiplicity_space(w, n, lambda);
      CHECK(static_cast<int>(ms.dim()) == d.of(lambda));
      if (ms.dim()) CHECK(submodule_from_multiplicity_subspace(ms, n) == isotypic_component(w, n, lambda));
    }
  }
  // Full Q S_n: the symmetrizer slice has dimension f^λ.
  auto full4 = Subspace::full(24);
  for (const auto& lambda : partitions(4)) {
    CHECK(Integer(multiplicity_space(full4, 4, lambda).dim()) == hook_dimension(lambda));
  }
}

TEST_CASE("submodule enumeration") {
  auto u4 = truncation_kernel(4, 4);
  auto e4 = enumerate_submodules(u4, 4);
  CHECK(e4.multiplicity_free);
  CHECK(e4.lattice.size() == 16);
  std::size_t proper = 0;
  for (const auto& [type, s] : e4.lattice) {
    CHECK(Integer(s.dim()) == type.dimension());
    CHECK(is_submodule(s, 4));
    if (s.dim() > 0 && s.dim() < u4.dim()) ++proper;
  }
  CHECK(proper == 14);  // 16 minus zero and the whole module
  auto e3 = enumerate_submodules(truncation_kernel(3, 3), 3);
  CHECK(e3.lattice.size() == 2);

  auto u5 = truncation_kernel(5, 5);
  auto e5 = enumerate_submodules(u5, 5);
  CHECK_FALSE(e5.multiplicity_free);
  CHECK(e5.decomposition ==
        decomposition_of(5, {{"4,1", 1}, {"2,1^3", 2}, {"3,2", 2}, {"2^2,1", 2}, {"3,1^2", 2}}));
  CHECK(e5.families.size() == 2 * 81);
  std::set<Integer> oracle;
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int d = 0; d <= 2; ++d)
          for (int e = 0; e <= 2; ++e) oracle.insert(4 * a + 4 * b + 5 * c + 5 * d + 6 * e);
  CHECK(e5.achievable_dimensions() == oracle);
  std::set<Integer> codims;
  for (const auto& d : e5.achievable_dimensions()) codims.insert(44 - d);
  for (int missing : {1, 2, 3, 7, 37, 41, 42, 43}) CHECK(codims.count(missing) == 0);

  std::mt19937_64 rng(99);
  int realized = 0;
  for (const auto& fam : e5.families) {
    if (fam.dimension() == 0 || fam.dimension() > 20) continue;
    auto params = fam.canonical_parameters();
    CHECK(!params.empty());
    auto s = fam.realize(params.front());
    CHECK(decompose_subspace(s, 5) == fam.type());
    CHECK(u5.contains(s));
    if (!fam.is_single()) {
      auto t = fam.realize(fam.sample(rng));
      CHECK(decompose_subspace(t, 5) == fam.type());
    }
    if (++realized > 12) break;
  }
}

TEST_CASE("labels") {
  auto labels = parse_irreducible_labels("V[1^4]+V[3,1]");
  REQUIRE(labels.size() == 2);
  CHECK(labels[0] == P("1^4"));
  CHECK(labels[1] == P("3,1"));
  CHECK(irreducible_label(P("2,1^2")) == "V[2,1^2]");
  CHECK_THROWS(parse_irreducible_labels("V[1^4"));
  CHECK_THROWS(parse_irreducible_labels("W[2]"));
  auto u4 = truncation_kernel(4, 4);
  CHECK(components_by_label(u4, 4, labels).dim() == 4);
}
