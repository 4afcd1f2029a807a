#include "doctest.h"
#include "uas/config.hpp"
#include "uas/ideal.hpp"
#include "uas/rep.hpp"
#include "uas/truncation.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace uas;

namespace {

std::size_t factorial(int n) { return SymmetricGroup::get(n).order(); }

Subspace top_module(int k) { return truncation_kernel(k, k); }

IdealPresentation T3() { return IdealPresentation::module(3, top_module(3)); }

IdealPresentation T3_plus_U5() { return T3() + IdealPresentation::truncation(5); }

Subspace span_elements(int n, const std::vector<OperadElement>& elems) {
  std::vector<Vector> rows;
  for (const auto& e : elems) rows.push_back(e.dense());
  return rref(rows, factorial(n)).space;
}

// Element-level spanning set: every single-occurrence composite with left and
// right padding and every right translate.
Subspace naive_component(const OperadElement& g, int n) {
  std::vector<OperadElement> out;
  const int m = g.arity();
  std::vector<int> b(m, 0);
  auto emit = [&](int pad) {
    std::vector<OperadElement> inner;
    for (int x : b) inner.push_back(OperadElement::unit(x));
    OperadElement core = full_compose(g, inner);
    for (int l = 0; l <= pad; ++l) {
      OperadElement padded = iota(l, pad - l, core);
      if (padded.is_zero()) continue;
      for (std::size_t s = 0; s < factorial(n); ++s) out.push_back(act(padded, SymmetricGroup::get(n).element(s)));
    }
  };
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == m) {
      emit(left);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      b[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, n);
  return span_elements(n, out);
}

// Closure of a window under the elementary moves, checked on the operad level.
bool closed_under_moves(const IdealWindow& w, int upto) {
  for (int n = 0; n <= upto; ++n) {
    const Subspace& c = w.at(n);
    for (std::size_t j = 0; j < c.dim(); ++j) {
      OperadElement theta = OperadElement::from_dense(n, c.row(j));
      for (std::size_t g : SymmetricGroup::get(n).generators()) {
        if (!c.contains(act(theta, SymmetricGroup::get(n).element(g)).dense())) return false;
      }
      for (int i = 1; i <= n; ++i) {
        if (!w.at(n - 1).contains(partial_compose(theta, i, OperadElement::unit(0)).dense())) return false;
        if (n < upto && !w.at(n + 1).contains(partial_compose(theta, i, OperadElement::unit(2)).dense())) return false;
      }
      if (n < upto) {
        auto left = full_compose(OperadElement::unit(2), {OperadElement::unit(1), theta});
        auto right = full_compose(OperadElement::unit(2), {theta, OperadElement::unit(1)});
        if (!w.at(n + 1).contains(left.dense()) || !w.at(n + 1).contains(right.dense())) return false;
      }
    }
  }
  return true;
}

Integer binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Subspace labelled(int n, const char* labels) {
  return components_by_label(top_module(n), n, parse_irreducible_labels(labels));
}

OperadElement tau_twos(int count) { return tau_composite(std::vector<int>(count, 2)); }

std::vector<OperadElement> prop_basis(int k) {
  std::vector<OperadElement> out;
  for (const auto& [idx, e] : specht_basis(k + 1)) {
    if (idx.longest_block() >= 3) out.push_back(e);
  }
  const OperadElement twos = tau_twos((k + 1) / 2);
  for (const auto& idx : specht_indices(k + 1)) {
    if (idx.longest_block() != 2) continue;
    std::vector<int> trivial;
    for (int i = 1; i <= k + 1; i += 2) {
      trivial.push_back(i + 1);
      trivial.push_back(i);
    }
    if (idx.sigma.seq() == trivial) continue;
    out.push_back(Rational(idx.sigma.sign()) * act(twos, idx.sigma) - twos);
  }
  for (const auto& theta : top_basis(k)) {
    for (int i = 1; i <= k + 1; ++i) out.push_back(act(iota(0, 1, theta), c_permutation({i}, k + 1)));
  }
  return out;
}

}  // namespace

TEST_CASE("components of the ideal generated by tau_3") {
  auto pres = IdealPresentation::element(tau_n(3));
  const std::vector<std::size_t> dims{0, 0, 0, 2, 16, 104, 688};
  for (int n = 0; n <= 6; ++n) CHECK(ideal_component(pres, n).dim() == dims[n]);
  CHECK(ideal_component(T3(), 6) == ideal_component(pres, 6));
}

TEST_CASE("component agrees with an element-level spanning set") {
  for (int n = 0; n <= 5; ++n) {
    CHECK(ideal_component(IdealPresentation::element(tau_n(3)), n) == naive_component(tau_n(3), n));
    CHECK(ideal_component(IdealPresentation::element(tau()), n) == naive_component(tau(), n));
  }
  auto beta = tau_composite({2, 2}) + tau_n(4);
  for (int n = 4; n <= 5; ++n) CHECK(ideal_component(IdealPresentation::element(beta), n) == naive_component(beta, n));
}

TEST_CASE("trivial presentations") {
  for (int n = 0; n <= 5; ++n) {
    CHECK(ideal_component(IdealPresentation::element(OperadElement::unit(1)), n).dim() == factorial(n));
    CHECK(ideal_component(IdealPresentation{}, n).dim() == 0);
  }
  CHECK(closure_fixpoint_oracle(IdealPresentation{}, 4, 1).ideal.is_zero());
  CHECK_THROWS_AS(ideal_component(T3(), window_bound() + 1), WindowExceeded);
}

TEST_CASE("truncation presentation reproduces the truncation kernels") {
  for (int k = 0; k <= 6; ++k) {
    auto w = ideal_window(IdealPresentation::truncation(k));
    for (int n = 0; n <= 6; ++n) CHECK(w.at(n) == truncation_kernel(k, n));
  }
}

TEST_CASE("fixpoint oracle agrees with the spanning construction") {
  for (const auto& pres : {IdealPresentation::element(tau_n(3)), T3_plus_U5(),
                           IdealPresentation::module(4, labelled(4, "V[1^4]"))}) {
    auto fx = closure_fixpoint_oracle(pres, 5, 1);
    for (int n = 0; n <= 5; ++n) CHECK(fx.ideal.at(n) == ideal_component(pres, n));
  }
  auto fx = closure_fixpoint_oracle(IdealPresentation::element(tau_n(3)), 4, 1);
  CHECK(fx.stability_checked);
  CHECK(fx.stable);
  CHECK_THROWS_AS(closure_fixpoint_oracle(T3(), 6, 1), WindowExceeded);
}

TEST_CASE("windows are closed under the elementary moves") {
  CHECK(closed_under_moves(ideal_window(T3_plus_U5(), 5), 5));
  CHECK(closed_under_moves(ideal_window(IdealPresentation::module(4, labelled(4, "V[3,1]")), 5), 5));
}

TEST_CASE("ideals of odd top degree miss the next truncation") {
  for (int k : {3, 5}) {
    auto pres = IdealPresentation::module(k, top_module(k));
    Subspace comp = ideal_component(pres, k + 1);
    auto basis = prop_basis(k);
    Subspace spanned = span_elements(k + 1, basis);
    CHECK(spanned.dim() == basis.size());
    CHECK(spanned == comp);
    CHECK(comp.dim() + 1 == static_cast<std::size_t>(truncation_dim(k, k + 1).get_ui()));
    CHECK_FALSE(comp.contains(tau_twos((k + 1) / 2).dense()));
    CHECK_FALSE(comp.contains(top_module(k + 1)));

    std::mt19937 rng(7 + k);
    std::vector<int> seq(k + 1);
    for (int trial = 0; trial < 50; ++trial) {
      std::iota(seq.begin(), seq.end(), 1);
      std::shuffle(seq.begin(), seq.end(), rng);
      Permutation sigma(seq);
      auto twos = tau_twos((k + 1) / 2);
      CHECK(comp.contains((Rational(sigma.sign()) * act(twos, sigma) - twos).dense()));
    }
  }
  CHECK(prop_basis(3).size() == 16);
  CHECK(prop_basis(5).size() == 528);
}

TEST_CASE("T3(6) misses the sign element") {
  Subspace t3 = ideal_component(T3(), 6);
  Subspace both = ideal_component(T3_plus_U5(), 6);
  CHECK(t3.dim() == 688);
  CHECK(both.dim() == 689);
  CHECK(factorial(6) - both.dim() == 31);
  CHECK_FALSE(t3.contains(truncation_kernel(5, 6)));
  CHECK(both.contains(alternating_sum(6).dense()));
}

TEST_CASE("minimal degree") {
  CHECK(mdeg(ideal_window(T3())) == 3);
  CHECK(mdeg(ideal_window(T3_plus_U5())) == 3);
  for (int k = 2; k <= 6; ++k) CHECK(mdeg(ideal_window(IdealPresentation::truncation(k))) == k);
  CHECK_THROWS(mdeg(ideal_window(IdealPresentation{})));
}

TEST_CASE("generating degree") {
  const std::vector<std::pair<int, int>> expected{{2, 2}, {3, 4}, {4, 4}, {5, 6}};
  for (auto [k, gd] : expected) {
    auto w = ideal_window(IdealPresentation::truncation(k));
    auto r = gen_degree(w);
    CHECK(r.value == gd);
    CHECK(r.value <= generating_degree_bound(gkdim_quotient(w)));
  }
  CHECK(gen_degree(ideal_window(T3_plus_U5())).value == 6);
  CHECK(generating_degree_bound(5) == 6);
  CHECK(generating_degree_bound(4) == 4);
}

TEST_CASE("generation is monotone in the arity") {
  auto w = ideal_window(T3_plus_U5());
  bool reached = false;
  for (int n = 3; n <= 6; ++n) {
    bool now = ideal_component(IdealPresentation::module(n, w.at(n)), 6) == w.at(6);
    CHECK((!reached || now));
    reached = reached || now;
  }
  CHECK(reached);
}

TEST_CASE("single generators") {
  auto u4 = ideal_window(IdealPresentation::truncation(4), 5);
  auto zeta4 = act(tau_composite({2, 2}), Permutation({2, 1, 4, 3})) + act(tau_n(4), Permutation({4, 3, 2, 1}));
  CHECK(generates(zeta4, u4));
  CHECK(generates(single_generator(u4, 4), u4));

  auto ideal = ideal_window(T3_plus_U5());
  auto alpha = iota(0, 3, tau_n(3)) + alternating_sum(6);
  CHECK(generates(alpha, ideal));
  CHECK_FALSE(generates(iota(0, 3, tau_n(3)), ideal));
  CHECK(generates(single_generator(ideal, 6), ideal));

  auto u2 = ideal_window(IdealPresentation::truncation(2), 5);
  CHECK(generates(tau(), u2));
}

TEST_CASE("cyclic generators span their module") {
  for (const char* labels : {"V[2^2]+V[3,1]", "V[1^4]+V[2,1^2]+V[3,1]", "V[2^2]"}) {
    Subspace m = labelled(4, labels);
    auto g = cyclic_generator(m, 4);
    CHECK(cyclic_span(g) == m);
  }
}

TEST_CASE("generalized truncation ideals of type one") {
  const int m = 4;
  auto zero = gt_type1(m, Subspace::zero(24));
  auto full = gt_type1(m, top_module(m));
  for (int n = 0; n <= 6; ++n) {
    CHECK(zero.at(n) == truncation_kernel(5, n));
    CHECK(full.at(n) == truncation_kernel(4, n));
  }
  for (const char* labels : {"V[1^4]", "V[2^2]+V[3,1]", "V[1^4]+V[2,1^2]+V[3,1]"}) {
    Subspace mod = labelled(m, labels);
    auto w = gt_type1(m, mod);
    CHECK(w.tail == 5);
    CHECK(gkdim_quotient(w) == 5);
    for (int n = 4; n <= 6; ++n) {
      CHECK(Integer(w.at(n).dim()) == truncation_dim(5, n) + Integer(mod.dim()) * binom(n, m));
      CHECK(dimension_from_tops(w, n) == Integer(w.at(n).dim()));
      // basis from M on the smallest arity and the full tops above it
      std::vector<OperadElement> basis;
      for (std::size_t j = 0; j < mod.dim(); ++j) {
        auto theta = OperadElement::from_dense(m, mod.row(j));
        std::vector<int> subset;
        auto rec = [&](auto&& self, int next) -> void {
          if (static_cast<int>(subset.size()) == n - m) {
            basis.push_back(act(iota(0, n - m, theta), c_permutation(subset, n)));
            return;
          }
          for (int x = next; x <= n; ++x) {
            subset.push_back(x);
            self(self, x + 1);
            subset.pop_back();
          }
        };
        rec(rec, 1);
      }
      for (int k = m + 1; k <= n; ++k) {
        auto bk = basis_theorem_sets(k, n);
        basis.insert(basis.end(), bk.begin(), bk.end());
      }
      Subspace s = span_elements(n, basis);
      CHECK(s.dim() == basis.size());
      CHECK(s == w.at(n));
    }
  }
  CHECK_THROWS(gt_type1(m, Subspace::full(24)));
}

TEST_CASE("the unique 4-admissible pair") {
  Subspace m3 = top_module(3);
  Subspace reach = intersect(ideal_component(T3(), 4), top_module(4));
  CHECK(reach.dim() == 8);

  auto subs = enumerate_submodules(top_module(4), 4);
  int admissible = 0;
  REQUIRE(subs.multiplicity_free);
  for (const auto& [type, m4] : subs.lattice) {
    AdmissibleSequence seq{4, {m3, m4}};
    auto report = admissible_check(seq);
    if (report.admissible) {
      ++admissible;
      CHECK(m4 == reach);
    } else if (!(m4 == top_module(4))) {
      REQUIRE(report.failing_arity.has_value());
      CHECK(*report.failing_arity == 4);
    }
  }
  CHECK(admissible == 1);

  AdmissibleSequence pair{4, {m3, reach}};
  auto w = gt_general(pair);
  auto direct = ideal_window(T3_plus_U5());
  for (int n = 0; n <= 6; ++n) {
    CHECK(w.at(n) == direct.at(n));
    CHECK(Integer(factorial(n) - w.at(n).dim()) == 1 + binom(n, 2) + binom(n, 4));
    CHECK(dimension_from_tops(w, n) == Integer(w.at(n).dim()));
  }
  CHECK(gkdim_quotient(w) == 5);

  CHECK_FALSE(admissible_check(AdmissibleSequence{4, {Subspace::zero(6), reach}}).admissible);
  CHECK_FALSE(admissible_check(AdmissibleSequence{4, {m3, top_module(4)}}).admissible);
  CHECK(admissible_check(AdmissibleSequence{4, {labelled(4, "V[3,1]")}}).admissible);
  auto degenerate = gt_general(AdmissibleSequence{4, {labelled(4, "V[3,1]")}});
  auto type1 = gt_type1(4, labelled(4, "V[3,1]"));
  for (int n = 0; n <= 6; ++n) CHECK(degenerate.at(n) == type1.at(n));
}

TEST_CASE("gk dimension of quotients") {
  CHECK(gkdim_quotient(ideal_window(IdealPresentation::truncation(1))) == 1);
  CHECK(gkdim_quotient(ideal_window(IdealPresentation::truncation(2))) == 1);
  for (int k = 3; k <= 6; ++k) CHECK(gkdim_quotient(ideal_window(IdealPresentation::truncation(k))) == k);
  CHECK(gkdim_quotient(ideal_window(IdealPresentation::truncation(0))) == 0);
  CHECK_THROWS(gkdim_quotient(ideal_window(T3())));
}

TEST_CASE("maximal ideals of gk dimension five") {
  auto top = ideal_window(T3_plus_U5());
  auto m4 = gt_type1(4, labelled(4, "V[2^2]+V[2,1^2]+V[3,1]"));
  CHECK(contains_ideal(top, m4));
  CHECK_FALSE(contains_ideal(m4, top));
  CHECK(contains_ideal(top, top));
  std::vector<IdealWindow> candidates{top, m4};
  for (const char* labels : {"V[1^4]+V[2,1^2]+V[3,1]", "V[1^4]+V[2^2]+V[3,1]", "V[1^4]+V[2^2]+V[2,1^2]"}) {
    auto mi = gt_type1(4, labelled(4, labels));
    CHECK_FALSE(contains_ideal(top, mi));
    candidates.push_back(mi);
  }
  CHECK_FALSE(maximal_wrt_gkdim(m4, candidates));
  CHECK(maximal_wrt_gkdim(top, candidates));
  for (std::size_t i = 2; i < candidates.size(); ++i) CHECK(maximal_wrt_gkdim(candidates[i], candidates));
}
