#ifndef UAS_PI_EVAL_HPP
#define UAS_PI_EVAL_HPP

#include "uas/ideal.hpp"
#include "uas/linalg.hpp"
#include "uas/operad.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace uas {

// A unital associative algebra given by structure constants
// e_i · e_j = Σ_k c(i,j,k) e_k, checked for associativity and the unit laws.
class FiniteAlgebra {
 public:
  struct Entry {
    std::uint32_t k;
    Rational c;
  };

  FiniteAlgebra(std::size_t dim, Vector unit, const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>>& mult,
                std::string name = {});

  // grassmann(k): basis e_S for S ⊆ [k] (bit masks); ut(k), mat(k): matrix units; field.
  static FiniteAlgebra builtin(std::string_view name, int k = 0);
  // {"dim":d, "unit":[...], "mult":[[i,j,k,"p/q"],...]} with 0-based indices.
  static FiniteAlgebra from_json(std::string_view text);
  // "builtin:grassmann:4", "builtin:field", or a path to a JSON file.
  static FiniteAlgebra resolve(std::string_view uri);
  std::string to_json() const;

  std::size_t dim() const { return dim_; }
  const Vector& unit() const { return unit_; }
  const std::string& name() const { return name_; }
  const std::vector<Entry>& product_terms(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  bool commutative() const;

  Vector basis(std::size_t i) const;
  Vector multiply(const Vector& a, const Vector& b) const;

 private:
  void verify() const;

  std::size_t dim_ = 0;
  Vector unit_;
  std::vector<std::vector<Entry>> table_;
  std::string name_;
};

// Σ_σ c_σ r_{σ⁻¹(1)} ⋯ r_{σ⁻¹(n)}; the empty product is the unit.
Vector evaluate(const FiniteAlgebra& a, const OperadElement& theta, const std::vector<Vector>& tuple);

struct EvalMode {
  enum class Kind { automatic, deterministic, montecarlo };
  Kind kind = Kind::automatic;
  std::uint64_t seed = 0;   // 0: the configured seed
  std::size_t samples = 0;  // 0: 3·n!

  static EvalMode deterministic() { return {Kind::deterministic, 0, 0}; }
  static EvalMode montecarlo(std::uint64_t seed, std::size_t samples) { return {Kind::montecarlo, seed, samples}; }
};

struct IdentityComponent {
  int n = 0;
  Subspace space;      // V_n(A) inside Q S_n
  std::string status;  // "exact" or "probabilistic(seed=…, samples=…)"
  bool exact = false;
};

// Deterministic mode evaluates on every basis tuple and needs dim(A)^n ≤ cap;
// Monte Carlo evaluates at seeded random rational tuples and over-approximates V_n(A).
IdentityComponent identities_component(const FiniteAlgebra& a, int n, EvalMode mode = {});

struct Codimension {
  int n = 0;
  Integer value;
  std::string status;
  bool exact = false;
};
Codimension codim(const FiniteAlgebra& a, int n, EvalMode mode = {});

struct CrossCheck {
  int n = 0;
  std::size_t identities_dim = 0;
  std::size_t ideal_dim = 0;
  bool equal = false;
  bool identities_contain_ideal = false;
  bool ideal_contains_identities = false;
  std::string status;
  std::string verdict;  // "equal", "identities contain ideal", "ideal contains identities", "incomparable"
};
CrossCheck cross_check(const FiniteAlgebra& a, const IdealWindow& ideal, int n, EvalMode mode = {});

}  // namespace uas

#endif
