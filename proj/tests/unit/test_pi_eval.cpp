#include "doctest.h"
#include "uas/config.hpp"
#include "uas/pi_eval.hpp"
#include "uas/rep.hpp"
#include "uas/truncation.hpp"

#include <bit>
#include <random>

using namespace uas;

namespace {

std::size_t factorial(int n) { return SymmetricGroup::get(n).order(); }

Vector random_element(std::mt19937_64& rng, std::size_t d) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  Vector v(d);
  for (auto& x : v) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return v;
}

// Product of Grassmann monomials e_{m1} ⋯ e_{mn}, computed from the
// concatenated generator word: zero on a repeat, otherwise the sign of the
// sorting permutation.
std::pair<int, unsigned> grassmann_monomial_product(const std::vector<unsigned>& masks, int k) {
  std::vector<int> letters;
  for (unsigned m : masks) {
    for (int b = 0; b < k; ++b) {
      if (m >> b & 1) letters.push_back(b);
    }
  }
  unsigned all = 0;
  for (int b : letters) {
    if (all >> b & 1) return {0, 0};
    all |= 1u << b;
  }
  int inversions = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    for (std::size_t j = i + 1; j < letters.size(); ++j) inversions += letters[i] > letters[j];
  }
  return {inversions % 2 ? -1 : 1, all};
}

IdealWindow t3_window(int w) { return ideal_window(IdealPresentation::module(3, truncation_kernel(3, 3)), w); }

}  // namespace

TEST_CASE("builtin algebras") {
  CHECK(FiniteAlgebra::builtin("field").dim() == 1);
  CHECK(FiniteAlgebra::builtin("field").commutative());
  CHECK(FiniteAlgebra::builtin("grassmann", 2).dim() == 4);
  CHECK(FiniteAlgebra::builtin("grassmann", 5).dim() == 32);
  CHECK_FALSE(FiniteAlgebra::builtin("grassmann", 2).commutative());
  CHECK(FiniteAlgebra::builtin("ut", 2).dim() == 3);
  CHECK(FiniteAlgebra::builtin("ut", 4).dim() == 10);
  CHECK(FiniteAlgebra::builtin("mat", 3).dim() == 9);
  CHECK_THROWS_AS(FiniteAlgebra::builtin("grassmann", 9), CapExceeded);
  CHECK_THROWS(FiniteAlgebra::builtin("octonions", 1));
  CHECK(FiniteAlgebra::resolve("builtin:grassmann:3").dim() == 8);
  CHECK(FiniteAlgebra::resolve("builtin:field").dim() == 1);
  CHECK_THROWS(FiniteAlgebra::resolve("/nonexistent/algebra.json"));
}

TEST_CASE("algebra JSON") {
  auto dual = FiniteAlgebra::from_json(R"({"dim":2,"unit":[1,0],"mult":[[0,0,0,1],[0,1,1,1],[1,0,1,"1"]]})");
  CHECK(dual.dim() == 2);
  CHECK(dual.commutative());
  auto again = FiniteAlgebra::from_json(dual.to_json());
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) CHECK(again.multiply(again.basis(i), again.basis(j)) == dual.multiply(dual.basis(i), dual.basis(j)));
  }
  auto g = FiniteAlgebra::builtin("grassmann", 3);
  auto g2 = FiniteAlgebra::from_json(g.to_json());
  CHECK(g2.dim() == 8);
  // (e1·e1)·e1 = e2 but e1·(e1·e1) = 0
  CHECK_THROWS(FiniteAlgebra::from_json(
      R"({"dim":3,"unit":[1,0,0],"mult":[[0,0,0,1],[0,1,1,1],[1,0,1,1],[0,2,2,1],[2,0,2,1],[1,1,2,1],[2,1,2,1]]})"));
  CHECK_THROWS(FiniteAlgebra::from_json(R"({"dim":2,"unit":[0,1],"mult":[[0,0,0,1]]})"));
  CHECK_THROWS(FiniteAlgebra::from_json(R"({"dim":2})"));
  CHECK_THROWS(FiniteAlgebra::from_json("not json"));
}

TEST_CASE("evaluation of commutators") {
  std::mt19937_64 rng(5);
  auto g = FiniteAlgebra::builtin("grassmann", 3);
  for (int trial = 0; trial < 10; ++trial) {
    Vector a = random_element(rng, g.dim()), b = random_element(rng, g.dim());
    Vector ab = g.multiply(a, b), ba = g.multiply(b, a);
    Vector expected(g.dim());
    for (std::size_t i = 0; i < expected.size(); ++i) expected[i] = ab[i] - ba[i];
    CHECK(evaluate(g, tau(), {a, b}) == expected);
  }
  auto f = FiniteAlgebra::builtin("field");
  CHECK(evaluate(f, tau(), {Vector{Rational(3)}, Vector{Rational(-2)}}) == Vector{Rational(0)});
  auto g2 = FiniteAlgebra::builtin("grassmann", 2);
  CHECK(evaluate(g2, tau_n(3), {g2.basis(1), g2.basis(2), g2.basis(3)}) == Vector(4));
  CHECK(evaluate(g2, OperadElement::unit(0), {}) == g2.unit());
  CHECK_THROWS(evaluate(g2, tau(), {g2.basis(1)}));
}

TEST_CASE("Grassmann monomial evaluation matches the sign rule") {
  const int k = 5;
  auto g = FiniteAlgebra::builtin("grassmann", k);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    std::vector<unsigned> masks(n);
    std::vector<Vector> tuple;
    for (auto& m : masks) {
      m = static_cast<unsigned>(rng() % 32);
      if (rng() % 2) m &= static_cast<unsigned>(rng() % 32);
      tuple.push_back(g.basis(m));
    }
    const auto& sym = SymmetricGroup::get(n);
    const Permutation sigma = sym.element(rng() % sym.order());
    Vector value = evaluate(g, OperadElement::basis(sigma), tuple);
    std::vector<unsigned> ordered;
    for (int x : sigma.seq()) ordered.push_back(masks[x - 1]);
    auto [sign, mask] = grassmann_monomial_product(ordered, k);
    Vector expected(g.dim());
    if (sign != 0) expected[mask] = sign;
    CHECK(value == expected);
  }
}

TEST_CASE("codimensions") {
  auto f = FiniteAlgebra::builtin("field");
  for (int n = 0; n <= 6; ++n) {
    auto c = codim(f, n);
    CHECK(c.value == 1);
    CHECK(c.exact);
  }
  for (int n = 1; n <= 4; ++n) {
    auto c = codim(FiniteAlgebra::builtin("grassmann", n), n, EvalMode::deterministic());
    CHECK(c.value == (1 << (n - 1)));
    CHECK(c.status == "exact");
  }
  auto c5 = codim(FiniteAlgebra::builtin("grassmann", 5), 5, EvalMode::montecarlo(3, 360));
  CHECK(c5.value == 16);
  CHECK_FALSE(c5.exact);
  CHECK(c5.status == "probabilistic(seed=3, samples=360)");
  auto ut2 = FiniteAlgebra::builtin("ut", 2);
  CHECK(codim(ut2, 2).value == 2);
  // 2^{n−1}(n−2) + 2 for the upper triangular 2×2 matrices
  for (int n = 3; n <= 5; ++n) CHECK(codim(ut2, n).value == (1 << (n - 1)) * (n - 2) + 2);
  CHECK(codim(FiniteAlgebra::builtin("mat", 2), 3).value == 6);
}

TEST_CASE("deterministic mode respects the cap") {
  auto g = FiniteAlgebra::builtin("grassmann", 5);
  CHECK_THROWS_AS(identities_component(g, 5, EvalMode::deterministic()), CapExceeded);
  Settings s = settings();
  s.cap = 100;
  ScopedSettings scope(s);
  CHECK_THROWS_AS(identities_component(FiniteAlgebra::builtin("grassmann", 2), 4, EvalMode::deterministic()), CapExceeded);
  CHECK_FALSE(identities_component(FiniteAlgebra::builtin("grassmann", 2), 4).exact);
}

TEST_CASE("identity components are closed under the ideal moves") {
  auto g = FiniteAlgebra::builtin("grassmann", 3);
  std::vector<Subspace> v;
  for (int n = 0; n <= 5; ++n) v.push_back(identities_component(g, n).space);
  for (int n = 0; n <= 5; ++n) CHECK(is_submodule(v[n], n));
  for (int n = 1; n <= 5; ++n) {
    for (std::size_t j = 0; j < v[n].dim(); ++j) {
      IntVector row = v[n].scaled_row(j);
      for (int slot = 1; slot <= n; ++slot) {
        CHECK(v[n - 1].contains(unit_deletion_map(n, slot).apply(row)));
        if (n < 5) CHECK(v[n + 1].contains(unit_doubling_map(n, slot).apply(row)));
      }
      if (n < 5) {
        CHECK(v[n + 1].contains(left_product_map(n).apply(row)));
        CHECK(v[n + 1].contains(right_product_map(n).apply(row)));
      }
    }
  }
}

TEST_CASE("identities vanish under the rational evaluator") {
  auto u = FiniteAlgebra::builtin("ut", 3);
  std::mt19937_64 rng(2);
  for (int n = 2; n <= 4; ++n) {
    Subspace v = identities_component(u, n).space;
    for (std::size_t j = 0; j < v.dim(); ++j) {
      OperadElement theta = OperadElement::from_dense(n, v.row(j));
      std::vector<Vector> tuple;
      for (int i = 0; i < n; ++i) tuple.push_back(random_element(rng, u.dim()));
      CHECK(evaluate(u, theta, tuple) == Vector(u.dim()));
    }
    // a non-identity: every complement direction fails somewhere
    Subspace w = v.annihilator();
    for (std::size_t j = 0; j < w.dim() && j < 3; ++j) {
      OperadElement theta = OperadElement::from_dense(n, w.row(j));
      bool nonzero = false;
      for (int trial = 0; trial < 5 && !nonzero; ++trial) {
        std::vector<Vector> tuple;
        for (int i = 0; i < n; ++i) tuple.push_back(random_element(rng, u.dim()));
        nonzero = evaluate(u, theta, tuple) != Vector(u.dim());
      }
      CHECK(nonzero);
    }
  }
}

TEST_CASE("Monte Carlo kernels shrink towards the exact kernel") {
  auto g = FiniteAlgebra::builtin("grassmann", 3);
  const int n = 4;
  Subspace exact = identities_component(g, n, EvalMode::deterministic()).space;
  Subspace few = identities_component(g, n, EvalMode::montecarlo(9, 3)).space;
  Subspace more = identities_component(g, n, EvalMode::montecarlo(9, 12)).space;
  Subspace many = identities_component(g, n, EvalMode::montecarlo(9, 72)).space;
  CHECK(few.contains(more));
  CHECK(more.contains(many));
  CHECK(many.contains(exact));
  CHECK(many == exact);
  CHECK(few.dim() > exact.dim());
}

TEST_CASE("cross-check against operadic ideals") {
  IdealWindow t3 = t3_window(4);
  for (int n = 1; n <= 4; ++n) {
    auto r = cross_check(FiniteAlgebra::builtin("grassmann", n), t3, n);
    CHECK(r.equal);
    CHECK(r.verdict == "equal");
    CHECK(r.status == "exact");
    CHECK(r.identities_dim == factorial(n) - (std::size_t{1} << (n - 1)));
  }
  IdealWindow u2 = ideal_window(IdealPresentation::truncation(2), 4);
  for (int n = 0; n <= 4; ++n) CHECK(cross_check(FiniteAlgebra::builtin("field"), u2, n).equal);
  auto partial = cross_check(FiniteAlgebra::builtin("grassmann", 2), t3, 4);
  CHECK(partial.verdict == "identities contain ideal");
}
