#ifndef UAS_TRUNCATION_HPP
#define UAS_TRUNCATION_HPP

#include "uas/linalg.hpp"
#include "uas/operad.hpp"

#include <string>
#include <utility>
#include <vector>

namespace uas {

// Common kernel of the restrictions to all (k−1)-subsets, inside Q S_n.
Subspace truncation_kernel(int k, int n);

Integer gamma(int n);
Integer truncation_dim(int k, int n);

// A block composition (k_1 ≤ … ≤ k_m, all ≥ 2) with a block sequence sigma:
// each block starts with its largest letter and equal-length blocks appear
// with increasing first letters.
struct SpechtIndex {
  std::vector<int> composition;
  Permutation sigma;

  int longest_block() const { return composition.empty() ? 0 : composition.back(); }
  std::vector<std::vector<int>> blocks() const;
  std::string str() const;  // "[2,2]*(2,1,4,3)"
  friend bool operator==(const SpechtIndex&, const SpechtIndex&) = default;
};

bool is_valid_specht_index(const std::vector<int>& composition, const Permutation& sigma);
// Compositions in lexicographic order, then sigma sequences in lexicographic order.
std::vector<SpechtIndex> specht_indices(int n);
// tau_{k_1..k_m} * sigma
OperadElement specht_element(const SpechtIndex& index);
std::vector<std::pair<SpechtIndex, OperadElement>> specht_basis(int n);

Subspace lie_component(int n);

// A fixed basis of the top component U(k)(k): the nullary unit for k = 0,
// nothing for k = 1, the Specht basis otherwise.
std::vector<OperadElement> top_basis(int k);
// B_k(n): (1_2 ∘ (θ, 1_{n−k})) * c_I for θ in top_basis(k) and |I| = n − k.
std::vector<OperadElement> basis_theorem_sets(int k, int n);

// Span of the Specht elements whose longest block is at least t.
Subspace specht_filtration(int n, int t);

// Dense integer rows of a list of elements of arity n.
std::vector<IntVector> dense_rows(const std::vector<OperadElement>& elements);
Subspace span_of(int n, const std::vector<OperadElement>& elements);

}  // namespace uas

#endif
