#include "doctest.h"
#include "uas/symmetric.hpp"

#include <random>

using namespace uas;

namespace {

// Word substitution: the word (x_{w1}…x_{wn}) acted on by ρ becomes x_{ρseq[w1]}…
std::vector<int> act_on_word(const std::vector<int>& w, const Permutation& rho) {
  std::vector<int> out;
  for (int letter : w) out.push_back(rho.seq()[letter - 1]);
  return out;
}

Permutation random_perm(int n, std::mt19937& rng) {
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) s[i] = i + 1;
  std::shuffle(s.begin(), s.end(), rng);
  return Permutation(s);
}

}  // namespace

TEST_CASE("perm_multiply examples") {
  CHECK(Permutation::parse("(1,2)") * Permutation::parse("(2,1)") == Permutation::parse("(2,1)"));
  CHECK(Permutation::parse("(2,1)") * Permutation::parse("(2,1)") == Permutation::parse("(1,2)"));
  CHECK(Permutation::parse("(2,3,1)") * Permutation::parse("(2,3,1)") == Permutation::parse("(3,1,2)"));
  CHECK_THROWS(Permutation::parse("(1,2)") * Permutation::parse("(1,2,3)"));
}

TEST_CASE("perm_multiply agrees with successive word actions") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + trial % 6;
    Permutation a = random_perm(n, rng), b = random_perm(n, rng);
    auto word = act_on_word(act_on_word(Permutation::identity(n).seq(), a), b);
    CHECK((a * b).seq() == word);
  }
}

TEST_CASE("group laws") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + trial % 6;
    Permutation a = random_perm(n, rng), b = random_perm(n, rng), c = random_perm(n, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * Permutation::identity(n) == a);
    CHECK(Permutation::identity(n) * a == a);
    CHECK(a * a.inverse() == Permutation::identity(n));
    CHECK(Permutation::from_map(a.map_form()) == a);
    CHECK((a * b).sign() == a.sign() * b.sign());
  }
}

TEST_CASE("serialization") {
  CHECK(Permutation::parse("(2,1,4,3)").str() == "(2,1,4,3)");
  CHECK(Permutation::parse(" ( 3, 1 ,2 )").str() == "(3,1,2)");
  CHECK_THROWS(Permutation::parse("(1,1)"));
  CHECK_THROWS(Permutation::parse("(1,3)"));
  CHECK(Partition::parse("[3,1]").str() == "[3,1]");
  CHECK(Partition::parse("2,1^2") == Partition({2, 1, 1}));
  CHECK(Partition({2, 1, 1}).label() == "2,1^2");
  CHECK(Partition({1, 1, 1, 1}).label() == "1^4");
  CHECK_THROWS(Partition::parse("[1,3]"));
}

TEST_CASE("conjugacy classes") {
  const auto& c3 = conjugacy_classes(3);
  REQUIRE(c3.size() == 3);
  CHECK(c3[0].type == Partition({1, 1, 1}));
  CHECK(c3[1].type == Partition({2, 1}));
  CHECK(c3[2].type == Partition({3}));
  CHECK(c3[0].size == 1);
  CHECK(c3[1].size == 3);
  CHECK(c3[2].size == 2);
  CHECK(conjugacy_classes(1).size() == 1);
  std::vector<int> sizes4;
  for (const auto& c : conjugacy_classes(4)) sizes4.push_back(static_cast<int>(c.size.get_si()));
  CHECK(sizes4 == std::vector<int>{1, 6, 3, 8, 6});
  for (int n = 1; n <= 7; ++n) {
    Integer total = 0;
    for (const auto& c : conjugacy_classes(n)) {
      total += c.size;
      CHECK(c.representative.cycle_type() == c.type);
    }
    CHECK(total == factorial(n));
  }
  // consecutive-block representative for (2,1): the transposition of 1 and 2
  CHECK(conjugacy_classes(3)[1].representative == Permutation::parse("(2,1,3)"));
}

TEST_CASE("character table orthonormality and dimensions") {
  for (int n = 1; n <= 7; ++n) {
    const auto& table = character_table(n);
    const auto& parts = partitions(n);
    Integer dims2 = 0;
    for (std::size_t i = 0; i < table.size(); ++i) {
      for (std::size_t j = 0; j < table.size(); ++j) {
        CHECK(character_inner_product(table[i], table[j]) == Rational(i == j ? 1 : 0));
      }
      CHECK(table[i].values[0] == Rational(hook_dimension(parts[i])));
      dims2 += hook_dimension(parts[i]) * hook_dimension(parts[i]);
    }
    CHECK(dims2 == factorial(n));
    // sign and trivial characters
    const auto& cls = conjugacy_classes(n);
    for (std::size_t c = 0; c < cls.size(); ++c) {
      CHECK(table.front().values[c] == cls[c].representative.sign());
      CHECK(table.back().values[c] == 1);
    }
  }
}

TEST_CASE("standard character counts fixed points") {
  for (int n = 2; n <= 7; ++n) {
    Partition std_rep({n - 1, 1});
    for (const auto& c : conjugacy_classes(n)) {
      int fixed = 0;
      for (int part : c.type.parts()) fixed += part == 1;
      CHECK(character_value(std_rep, c.type) == fixed - 1);
    }
  }
}

TEST_CASE("hook dimensions") {
  CHECK(hook_dimension(Partition({2, 1})) == 2);
  CHECK(hook_dimension(Partition({5})) == 1);
  CHECK(hook_dimension(Partition({3, 2})) == 5);
  std::vector<int> dims;
  for (const auto& p : partitions(4)) dims.push_back(static_cast<int>(hook_dimension(p).get_si()));
  CHECK(dims == std::vector<int>{1, 3, 2, 3, 1});
  CHECK(character_table(3)[1].values[0] == 2);
}

TEST_CASE("c_permutation") {
  CHECK(c_permutation({1, 3}, 4) == Permutation::parse("(2,4,1,3)"));
  CHECK(c_permutation({}, 3) == Permutation::identity(3));
  CHECK(c_permutation({1, 2, 3}, 3) == Permutation::identity(3));
  CHECK_THROWS(c_permutation({5}, 4));
}

TEST_CASE("dense group indexing") {
  for (int n = 0; n <= 6; ++n) {
    const auto& g = SymmetricGroup::get(n);
    CHECK(g.order() == factorial(n).get_ui());
    std::mt19937 rng(n);
    for (std::size_t r = 0; r < g.order(); ++r) CHECK(g.rank(g.element(r)) == r);
    for (int t = 0; t < 50 && n > 0; ++t) {
      std::size_t a = rng() % g.order(), b = rng() % g.order();
      CHECK(g.element(g.multiply(a, b)) == g.element(a) * g.element(b));
      CHECK(g.multiply(a, g.inverse(a)) == 0);
    }
  }
}
