#ifndef UAS_CLASSIFY_HPP
#define UAS_CLASSIFY_HPP

#include "uas/growth.hpp"
#include "uas/ideal.hpp"
#include "uas/rep.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace uas {

// "V[1^4]+2V[3,2]", or "0".
std::string type_label(const Decomposition& d);

// One admissible choice of the top module M_m: every submodule of U(m)(m)
// containing the reach with the given type.
struct TopChoice {
  Decomposition type;
  bool unique = true;  // false: a projective family of such modules
  Integer dimension;
};

// Admissible sequences sharing the modules below the top arity.
struct AdmissibleClass {
  int m = 0;
  int start = 0;                        // arity of the first module
  std::vector<Subspace> prefix;         // M_start, …, M_{m−1}; empty for type I
  std::vector<Decomposition> prefix_types;
  Subspace reach;                       // (Σ⟨M_i⟩)(m) ∩ U(m)(m)
  Decomposition reach_type;
  std::vector<TopChoice> tops;

  bool type_one() const { return prefix.empty(); }
  std::string prefix_label() const;
  // Number of admissible top modules; nullopt when infinite.
  std::optional<std::size_t> count() const;
  // Canonical realizations (axis and all-ones parameters), then `samples`
  // seeded random ones for families.
  std::vector<Subspace> realize(const TopChoice& choice, int samples = 0, std::uint64_t seed = 1) const;
  AdmissibleSequence sequence(const Subspace& top) const;
};

// All admissible sequences ending in arity m, grouped by prefix. Type-I
// classes (empty prefix) come last.
std::vector<AdmissibleClass> admissible_classes(int m);

struct ClassifiedIdeal {
  std::string kind;   // "truncation", "type I", "type II"
  std::string label;  // "U(5)", "GT1(4; V[3,1])", "GT2(4; M3=V[2,1], M4=...)"
  AdmissibleSequence sequence;
  IdealWindow ideal;
  GammaSeries series;
};

// The ideals whose quotient has GK dimension d, for d ≤ 5.
std::vector<ClassifiedIdeal> classify_gkdim(int d);
GenDegree classified_gen_degree(const ClassifiedIdeal& c);

// Quotient series for GK dimension d ≤ 6 from the admissible-class types.
std::vector<GammaSeries> series_of_gkdim(int d);

// One row per (M_4, M_5 type) of the GK-dimension-6 pairs.
struct PairRow {
  Decomposition m4;
  Decomposition m5;
  bool unique = true;
  std::set<int> gen_degrees;  // over the realizations tried
  std::size_t realizations = 0;
};
std::vector<PairRow> gkdim6_pair_table(int samples = 1, std::uint64_t seed = 1);

}  // namespace uas

#endif
