#ifndef UAS_REP_HPP
#define UAS_REP_HPP

#include "uas/linalg.hpp"
#include "uas/operad.hpp"
#include "uas/symmetric.hpp"

#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace uas {

// Multiplicities of the irreducible constituents, zero entries omitted.
struct Decomposition {
  int n = 0;
  std::map<Partition, int> multiplicity;

  int of(const Partition& lambda) const;
  Integer dimension() const;
  bool multiplicity_free() const;
  CharacterVector character() const;
  // "chi(1^4) + 2chi(2^2)"; "0" when empty
  std::string str() const;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Product in Q S_n; act(θ, σ) is the product with a basis element.
OperadElement group_algebra_product(const OperadElement& a, const OperadElement& b);

// Throws std::invalid_argument unless W is closed under the right action.
void require_submodule(const Subspace& w, int n);
bool is_submodule(const Subspace& w, int n);

CharacterVector character_of_subspace(const Subspace& w, int n);
Decomposition decompose(const CharacterVector& chi);
Decomposition decompose_subspace(const Subspace& w, int n);

// Σ_σ χ_λ(σ) σ; right multiplication by it is the map φ_λ.
OperadElement isotypic_projector(const Partition& lambda, int n);
Subspace apply_right(const Subspace& w, int n, const OperadElement& g);
// Image of φ_λ on W, computed as W ∩ (λ-block of Q S_n).
Subspace isotypic_component(const Subspace& w, int n, const Partition& lambda);
// The two-sided ideal Q S_n · φ_λ.
const Subspace& isotypic_block(const Partition& lambda);

Subspace cyclic_span(const OperadElement& v);
Subspace cyclic_span(int n, const std::vector<IntVector>& seeds);
OperadElement component_generator(const Partition& lambda, const Subspace& w, int n);

// Row-reading standard tableau of shape λ and the Young symmetrizer
// (sum over the row group)·(signed sum over the column group).
std::vector<std::vector<int>> row_reading_tableau(const Partition& lambda);
OperadElement young_symmetrizer(const Partition& lambda);
// W·y_T, of dimension equal to the multiplicity of λ in W.
Subspace multiplicity_space(const Subspace& w, int n, const Partition& lambda);
Subspace submodule_from_multiplicity_subspace(const Subspace& u, int n);

struct FamilyPart {
  Partition lambda;
  int multiplicity = 0;      // in the ambient module
  int chosen = 0;            // dimension of the chosen subspace of the multiplicity space
  Subspace multiplicity_space;
};

// All submodules of W whose λ-isotypic part is dim-χ_λ times `chosen`.
// Finite (a single submodule) when every chosen value is 0 or the full multiplicity.
struct SubmoduleFamily {
  int n = 0;
  std::vector<FamilyPart> parts;

  bool is_single() const;
  Integer dimension() const;
  Decomposition type() const;
  // Parameters: for each part, `chosen` vectors in coordinates of its multiplicity space.
  using Parameters = std::vector<std::vector<Vector>>;
  Subspace realize(const Parameters& params) const;
  // Coordinate axes, and the all-ones vector for one-dimensional choices.
  std::vector<Parameters> canonical_parameters() const;
  Parameters sample(std::mt19937_64& rng) const;
  std::string str() const;  // "V[1^4] ; fam(3,2):2/3"
};

struct SubmoduleEnumeration {
  Decomposition decomposition;
  bool multiplicity_free = true;
  // multiplicity-free: every submodule, indexed by subsets of constituents
  std::vector<std::pair<Decomposition, Subspace>> lattice;
  // otherwise: one family per achievable type
  std::vector<SubmoduleFamily> families;

  std::size_t type_count() const;
  std::set<Integer> achievable_dimensions() const;
};

SubmoduleEnumeration enumerate_submodules(const Subspace& w, int n);
// Types d with 0 ≤ d_λ ≤ m_λ, in lexicographic order of (d_λ) over partitions.
std::vector<Decomposition> submodule_types(const Decomposition& d);

// Irreducible labels "V[1^4]+V[3,1]".
std::vector<Partition> parse_irreducible_labels(std::string_view text);
std::string irreducible_label(const Partition& lambda);
// Sum of the named isotypic components of W.
Subspace components_by_label(const Subspace& w, int n, const std::vector<Partition>& labels);

}  // namespace uas

#endif
