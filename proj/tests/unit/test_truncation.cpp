#include "doctest.h"
#include "uas/config.hpp"
#include "uas/truncation.hpp"

using namespace uas;

namespace {

// Derangement numbers by their two-term recurrence.
Integer derangements(int n) {
  Integer a = 1, b = 0;  // D(0), D(1)
  if (n == 0) return a;
  for (int m = 2; m <= n; ++m) {
    Integer c = (m - 1) * (a + b);
    a = b;
    b = c;
  }
  return b;
}

bool closed_under_group(const Subspace& s, int n) {
  for (const auto& map : symmetric_generator_maps(n)) {
    for (std::size_t j = 0; j < s.dim(); ++j) {
      if (!s.contains(map.apply(s.scaled_row(j)))) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("gamma sequence") {
  const int expected[] = {1, 0, 1, 2, 9, 44, 265};
  for (int n = 0; n <= 6; ++n) CHECK(gamma(n) == expected[n]);
  for (int n = 0; n <= 15; ++n) CHECK(gamma(n) == derangements(n));
  CHECK(truncation_dim(3, 4) == 17);
  CHECK(truncation_dim(5, 6) == 529);
  CHECK(truncation_dim(4, 3) == 0);
  CHECK(truncation_dim(4, 4) == 9);
}

TEST_CASE("kernel dimensions follow the closed formula") {
  CHECK(truncation_kernel(3, 3).dim() == 2);
  CHECK(truncation_kernel(4, 4).dim() == 9);
  CHECK(truncation_kernel(3, 4).dim() == 17);
  CHECK(truncation_kernel(5, 4).dim() == 0);
  CHECK(truncation_kernel(0, 3).dim() == 6);
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      auto s = truncation_kernel(k, n);
      CHECK(Integer(s.dim()) == truncation_dim(k, n));
    }
  }
  CHECK_THROWS_AS(truncation_kernel(3, 7), WindowExceeded);
}

TEST_CASE("restrictions vanish on the kernel") {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) {
      auto s = truncation_kernel(k, n);
      for (std::size_t j = 0; j < s.dim(); ++j) {
        auto theta = OperadElement::from_dense(n, s.row(j));
        // every restriction to a (k−1)-subset kills theta; a k-subset need not
        for (std::size_t mask = 0; mask < (1u << n); ++mask) {
          std::vector<int> subset;
          for (int x = 1; x <= n; ++x) {
            if (mask >> (x - 1) & 1) subset.push_back(x);
          }
          if (static_cast<int>(subset.size()) == k - 1) CHECK(restrict(theta, subset).is_zero());
        }
      }
    }
  }
}

TEST_CASE("Specht basis") {
  auto b4 = specht_basis(4);
  REQUIRE(b4.size() == 9);
  const char* seqs[] = {"(2,1,4,3)", "(3,1,4,2)", "(3,2,4,1)", "(4,1,2,3)", "(4,1,3,2)",
                        "(4,2,1,3)", "(4,2,3,1)", "(4,3,1,2)", "(4,3,2,1)"};
  for (int i = 0; i < 9; ++i) {
    CHECK(b4[i].first.sigma.str() == seqs[i]);
    CHECK(b4[i].first.composition == std::vector<int>(i < 3 ? std::vector<int>{2, 2} : std::vector<int>{4}));
  }
  auto b5 = specht_basis(5);
  int shape23 = 0, shape5 = 0;
  for (const auto& [idx, e] : b5) {
    if (idx.composition == std::vector<int>{2, 3}) ++shape23;
    if (idx.composition == std::vector<int>{5}) ++shape5;
  }
  CHECK(shape23 == 20);
  CHECK(shape5 == 24);
  CHECK(b5.size() == 44);
  auto b2 = specht_basis(2);
  REQUIRE(b2.size() == 1);
  CHECK(b2[0].second == -tau());  // [x2,x1]
  CHECK(b4[0].second == proper_polynomial({{2, 1}, {4, 3}}));
  for (int n = 2; n <= 6; ++n) {
    auto b = specht_basis(n);
    CHECK(Integer(b.size()) == gamma(n));
    std::vector<OperadElement> elems;
    for (const auto& [idx, e] : b) elems.push_back(e);
    CHECK(span_of(n, elems) == truncation_kernel(n, n));
  }
  CHECK_FALSE(is_valid_specht_index({2, 2}, Permutation::parse("(4,3,2,1)")));
  CHECK_FALSE(is_valid_specht_index({2, 2}, Permutation::parse("(1,2,4,3)")));
  CHECK_THROWS(specht_element({{2, 2}, Permutation::parse("(4,3,2,1)")}));
}

TEST_CASE("Lie component and Specht-length filtration") {
  CHECK(lie_component(1).dim() == 1);
  CHECK(lie_component(3).dim() == 2);
  CHECK(lie_component(4).dim() == 6);
  CHECK(lie_component(5).dim() == 24);
  CHECK(lie_component(3) == truncation_kernel(3, 3));
  for (int n = 2; n <= 5; ++n) CHECK(truncation_kernel(n, n).contains(lie_component(n)));
  // Lie polynomials: every bracket [x_a, ...] lies in Lie(n)
  CHECK(lie_component(4).contains(Subspace(span_of(4, {proper_polynomial({{3, 1, 4, 2}})}))));

  std::vector<std::size_t> d4, d5;
  for (int t = 2; t <= 4; ++t) d4.push_back(specht_filtration(4, t).dim());
  for (int t = 2; t <= 5; ++t) d5.push_back(specht_filtration(5, t).dim());
  CHECK(d4 == std::vector<std::size_t>{9, 6, 6});
  CHECK(d5 == std::vector<std::size_t>{44, 44, 24, 24});
  for (int n = 2; n <= 6; ++n) {
    CHECK(specht_filtration(n, 2) == truncation_kernel(n, n));
    CHECK(specht_filtration(n, n) == lie_component(n));
    for (int t = 2; t <= n; ++t) {
      auto m = specht_filtration(n, t);
      CHECK(closed_under_group(m, n));
      if (t < n) CHECK(m.contains(specht_filtration(n, t + 1)));
    }
  }
  CHECK_THROWS(specht_filtration(4, 1));
}

TEST_CASE("basis theorem sets") {
  CHECK(basis_theorem_sets(0, 4) == std::vector<OperadElement>{OperadElement::unit(4)});
  CHECK(basis_theorem_sets(1, 4).empty());
  for (int n = 1; n <= 6; ++n) {
    std::vector<OperadElement> all;
    for (int k = n; k >= 0; --k) {
      auto bk = basis_theorem_sets(k, n);
      CHECK(Integer(bk.size()) == gamma(k) * binomial(n, k));
      all.insert(all.end(), bk.begin(), bk.end());
      if (k >= 1) CHECK(span_of(n, all) == truncation_kernel(k, n));
    }
    CHECK(all.size() == SymmetricGroup::get(n).order());
    CHECK(span_of(n, all).dim() == all.size());
  }
}
