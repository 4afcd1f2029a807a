#ifndef UAS_OPERAD_HPP
#define UAS_OPERAD_HPP

#include "uas/linalg.hpp"
#include "uas/symmetric.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace uas {

// An element of UAs(n) = Q S_n. Arity 0 holds a multiple of the empty
// permutation (the nullary unit).
class OperadElement {
 public:
  using Terms = std::map<Permutation, Rational>;

  OperadElement() = default;
  explicit OperadElement(int arity);

  static OperadElement unit(int n);
  static OperadElement basis(const Permutation& p, const Rational& c = 1);
  // Text form "3/2*(2,1,4,3) - (4,3,2,1)"; "0" needs an arity hint.
  static OperadElement parse(std::string_view text, std::optional<int> arity = std::nullopt);
  static OperadElement from_dense(int arity, const Vector& coords);

  int arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Permutation& p) const;
  void add_term(const Permutation& p, const Rational& c);

  Vector dense() const;
  IntVector dense_integer() const;  // primitive integer multiple
  std::string str() const;

  OperadElement& operator+=(const OperadElement& o);
  OperadElement& operator-=(const OperadElement& o);
  OperadElement& operator*=(const Rational& c);
  friend OperadElement operator+(OperadElement a, const OperadElement& b) { return a += b; }
  friend OperadElement operator-(OperadElement a, const OperadElement& b) { return a -= b; }
  friend OperadElement operator-(OperadElement a) { return a *= Rational(-1); }
  friend OperadElement operator*(const Rational& c, OperadElement a) { return a *= c; }
  friend bool operator==(const OperadElement&, const OperadElement&) = default;

 private:
  int arity_ = 0;
  Terms terms_;
};

OperadElement full_compose(const OperadElement& outer, const std::vector<OperadElement>& inners);
OperadElement partial_compose(const OperadElement& mu, int slot, const OperadElement& nu);
OperadElement act(const OperadElement& theta, const Permutation& sigma);
OperadElement restrict(const OperadElement& theta, const std::vector<int>& subset);
OperadElement extend(const OperadElement& theta, const std::vector<int>& subset);
// 1_3 ∘ (1_l, theta, 1_r)
OperadElement iota(int left, int right, const OperadElement& theta);

class MultilinearPolynomial {
 public:
  using Word = std::vector<int>;
  MultilinearPolynomial() = default;
  explicit MultilinearPolynomial(int degree) : degree_(degree) {}

  int degree() const { return degree_; }
  const std::map<Word, Rational>& terms() const { return terms_; }
  void add_term(const Word& w, const Rational& c);
  MultilinearPolynomial act(const Permutation& rho) const;
  // "x2x1x4x3 - 2*x1x2x3x4"
  std::string str() const;
  friend bool operator==(const MultilinearPolynomial&, const MultilinearPolynomial&) = default;

 private:
  int degree_ = 0;
  std::map<Word, Rational> terms_;
};

MultilinearPolynomial phi(const OperadElement& theta);
OperadElement psi(const MultilinearPolynomial& f);

// Product of left-normed commutators, each bracket a list of variable indices;
// together the brackets must partition [n].
OperadElement proper_polynomial(const std::vector<std::vector<int>>& brackets);

OperadElement tau();
// Left-normed [x1,…,xn]; tau_n(1) is the unary unit.
OperadElement tau_n(int n);
// 1_m ∘ (tau_{k1}, …, tau_{km})
OperadElement tau_composite(const std::vector<int>& lengths);
// sum of sgn(σ)σ over S_n
OperadElement alternating_sum(int n);

// Dense-coordinate versions of the elementary operad moves. Every move sends
// a permutation to a single permutation, so each is a BasisMap.
BasisMap right_action_map(int n, const Permutation& sigma);
BasisMap unit_deletion_map(int n, int slot);   // θ ∘_slot 1_0
BasisMap unit_doubling_map(int n, int slot);   // θ ∘_slot 1_2
BasisMap left_product_map(int n);              // 1_2 ∘ (1_1, θ)
BasisMap right_product_map(int n);             // 1_2 ∘ (θ, 1_1)
// θ ↦ iota(left, right, θ ∘ (1_{b1}, …, 1_{bm}))
BasisMap composite_map(int m, int left, int right, const std::vector<int>& blocks);
BasisMap restriction_map(int n, const std::vector<int>& subset);
// Generators of the right S_n action (empty for n ≤ 1).
std::vector<BasisMap> symmetric_generator_maps(int n);

}  // namespace uas

#endif
