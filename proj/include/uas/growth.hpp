#ifndef UAS_GROWTH_HPP
#define UAS_GROWTH_HPP

#include "uas/ideal.hpp"
#include "uas/rational.hpp"

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace uas {

// A quotient operad's growth data as the vector (γ_0, …, γ_{d−1}); the
// generating series is Σ γ_k t^k / (1 − t)^{k+1}.
class GammaSeries {
 public:
  GammaSeries() = default;
  // Trailing zeros are dropped; negative entries throw.
  explicit GammaSeries(std::vector<Integer> gamma);
  static GammaSeries parse(std::string_view text);  // "(1,0,1,2,9)"

  const std::vector<Integer>& gamma() const { return gamma_; }
  bool is_zero() const { return gamma_.empty(); }

  Integer dims_at(int n) const;
  std::string closed_form() const;  // "1/(1-t) + t^2/(1-t)^3"
  std::string str() const;          // "(1,0,1,2,9)"

  int gkdim() const;
  int grade() const;
  // γ_{d−1}/(d−1)!: the constant of the leading term λ n^{d−1}.
  Rational leading_lambda() const;

  friend bool operator==(const GammaSeries&, const GammaSeries&) = default;
  friend std::strong_ordering operator<=>(const GammaSeries& a, const GammaSeries& b);

 private:
  std::vector<Integer> gamma_;
};

// γ_k = dim U(k)(k) − dim(I(k) ∩ U(k)(k)) below the certified tail.
GammaSeries gamma_series_of_quotient(const IdealWindow& ideal);

// Every codimension series of quotients of grade g (g ≤ 5), sorted and deduplicated.
std::vector<GammaSeries> catalog(int grade);
std::set<Rational> lambda_set(int grade);

std::string series_json(const GammaSeries& s);
std::string catalog_csv(const std::vector<GammaSeries>& series);

}  // namespace uas

#endif
