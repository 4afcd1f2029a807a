#ifndef UAS_IDEAL_HPP
#define UAS_IDEAL_HPP

#include "uas/linalg.hpp"
#include "uas/operad.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace uas {

// Generators of an operadic ideal of UAs. A tail K adds the truncation ideal U(K).
struct IdealPresentation {
  std::vector<OperadElement> elements;
  std::vector<std::pair<int, Subspace>> modules;  // S_n-submodules of Q S_n
  std::optional<int> tail;
  std::string label;

  static IdealPresentation truncation(int k);
  static IdealPresentation element(const OperadElement& g);
  static IdealPresentation module(int arity, const Subspace& m);
  IdealPresentation& operator+=(const IdealPresentation& o);
  friend IdealPresentation operator+(IdealPresentation a, const IdealPresentation& b) { return a += b; }

  bool empty() const { return elements.empty() && modules.empty() && !tail; }
  int max_generator_arity() const;
};

// Components I(0..window) of an ideal; with a tail K ≤ window+1 the ideal
// contains U(K), so everything past the window is determined.
struct IdealWindow {
  int window = 0;
  std::vector<Subspace> components;
  std::optional<int> tail;
  std::string provenance;

  const Subspace& at(int n) const;
  // I(k) ∩ U(k)(k)
  Subspace top(int k) const;
  bool is_zero() const;
};

Subspace ideal_component(const IdealPresentation& pres, int n);
IdealWindow ideal_window(const IdealPresentation& pres, int window = -1);
// Exact modular test: is dim ⟨pres⟩(n) at least `target`? (The modular
// rank of the closure is a lower bound for the exact dimension.)
bool ideal_component_reaches(const IdealPresentation& pres, int n, std::size_t target);

struct FixpointResult {
  IdealWindow ideal;  // components 0..w
  bool stability_checked = false;
  bool stable = false;
  std::string note;
};
// Least family over arities ≤ w + headroom closed under deletion of an input,
// doubling of an input, left/right products with the unit and the symmetric
// action; stability is tested by rerunning with one more arity of headroom.
FixpointResult closure_fixpoint_oracle(const IdealPresentation& pres, int w, int headroom);

int mdeg(const IdealWindow& ideal);

struct GenDegree {
  int value = 0;
  int bound = 0;          // arity at which equality was tested
  bool assumed_bound = true;  // the bound comes from the gkdim bound theorem
  std::string note;
};
// gd ≤ gkdim+1 for odd gkdim, gkdim for even gkdim.
int generating_degree_bound(int gkdim);
GenDegree gen_degree(const IdealWindow& ideal, int bound);
GenDegree gen_degree(const IdealWindow& ideal);
// Does the ideal generated by θ agree with the ideal at every arity of the window?
bool generates(const OperadElement& theta, const IdealWindow& ideal);

// A random element of M whose cyclic span is M (seeded, retried until it works).
OperadElement cyclic_generator(const Subspace& m, int n, std::uint64_t seed = 1);
// ζ^[m] = Σ_k 1_2 ∘ (ζ_k, 1_{m−k}) with ζ_k a cyclic generator of I(k) ∩ U(k)(k).
OperadElement single_generator(const IdealWindow& ideal, int m);

// Type I: {μ ∈ U(m)(n) : π^I(μ) ∈ M for |I| = m}, checked against ⟨M⟩ + U(m+1).
IdealWindow gt_type1(int m, const Subspace& module);
Subspace gt_type1_pointwise(int m, const Subspace& module, int n);

struct AdmissibleSequence {
  int m = 0;
  std::vector<Subspace> modules;  // M_{m−s}, …, M_m

  int depth() const { return static_cast<int>(modules.size()) - 1; }
  int start() const { return m - depth(); }
  const Subspace& at(int j) const { return modules.at(j - start()); }
};

struct AdmissibleReport {
  bool admissible = false;
  std::optional<int> failing_arity;
  std::string message;
};

AdmissibleReport admissible_check(const AdmissibleSequence& seq);
IdealPresentation gt_presentation(const AdmissibleSequence& seq);
IdealWindow gt_general(const AdmissibleSequence& seq);

int gkdim_quotient(const IdealWindow& ideal);
bool contains_ideal(const IdealWindow& big, const IdealWindow& small);
bool maximal_wrt_gkdim(const IdealWindow& ideal, const std::vector<IdealWindow>& candidates);

// Dimension of I(n) predicted from the tops I(k) ∩ U(k)(k) alone.
Integer dimension_from_tops(const IdealWindow& ideal, int n);

}  // namespace uas

#endif
