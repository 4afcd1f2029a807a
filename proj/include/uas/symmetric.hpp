#ifndef UAS_SYMMETRIC_HPP
#define UAS_SYMMETRIC_HPP

#include "uas/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace uas {

constexpr int kMaxGroupArity = 7;

class Partition;

// A permutation stored as its sequence (σ⁻¹(1),…,σ⁻¹(n)); position k holds the
// letter placed k-th, so the sequence doubles as the monomial x_{seq[0]}⋯x_{seq[n-1]}.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> seq);

  static Permutation identity(int n);
  // images[i-1] = σ(i)
  static Permutation from_map(const std::vector<int>& images);
  static Permutation parse(std::string_view text);

  int arity() const { return static_cast<int>(seq_.size()); }
  const std::vector<int>& seq() const { return seq_; }
  int operator[](int position) const { return seq_[position - 1]; }

  std::vector<int> map_form() const;
  Permutation inverse() const;
  int sign() const;
  Partition cycle_type() const;
  bool is_identity() const;
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

 private:
  std::vector<int> seq_;
};

// Acting by a then by b equals acting by a*b; in sequence form (a*b)_k = b[a_k].
Permutation perm_multiply(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) {
  return perm_multiply(a, b);
}

// Sequence of [n]∖I ascending followed by I ascending.
Permutation c_permutation(const std::vector<int>& subset, int n);

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  Partition conjugate() const;
  // "[3,1]"
  std::string str() const;
  // exponent form used in module labels: "1^4", "2,1^2", "3,1"
  std::string label() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

// Canonical order: ascending lexicographic on the part lists, (1^n) first.
const std::vector<Partition>& partitions(int n);
std::size_t partition_index(const Partition& p);

struct ConjugacyClass {
  Partition type;
  Integer size;
  Permutation representative;
};

const std::vector<ConjugacyClass>& conjugacy_classes(int n);

struct CharacterVector {
  int n = 0;
  std::vector<Rational> values;  // one per class, canonical order

  static CharacterVector zero(int n);
  Rational degree() const { return values.empty() ? Rational(0) : values.front(); }
  CharacterVector& operator+=(const CharacterVector& o);
  friend CharacterVector operator+(CharacterVector a, const CharacterVector& b) { return a += b; }
  friend CharacterVector operator*(const Rational& c, CharacterVector a);
  friend bool operator==(const CharacterVector&, const CharacterVector&) = default;
};

Rational character_inner_product(const CharacterVector& a, const CharacterVector& b);

// Rows follow partitions(n).
const std::vector<CharacterVector>& character_table(int n);
const CharacterVector& irreducible_character(const Partition& lambda);
std::int64_t character_value(const Partition& lambda, const Partition& cycle_type);

Integer hook_dimension(const Partition& lambda);

// Dense indexing of S_n by lexicographic rank of the sequence.
class SymmetricGroup {
 public:
  static const SymmetricGroup& get(int n);

  int arity() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const Permutation& element(std::size_t rank) const { return elements_[rank]; }
  std::size_t rank(const Permutation& p) const;
  std::size_t rank_of(const int* seq) const;
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  int sign(std::size_t a) const { return sign_[a]; }
  std::size_t class_of(std::size_t a) const { return class_[a]; }
  // target[t] = rank(t * g)
  std::vector<std::uint32_t> right_multiplication(std::size_t g) const;
  // (1 2) and the long cycle; together they generate S_n (empty for n ≤ 1).
  std::vector<std::size_t> generators() const;

 private:
  explicit SymmetricGroup(int n);
  int n_;
  std::vector<Permutation> elements_;
  std::vector<std::size_t> inverse_;
  std::vector<int> sign_;
  std::vector<std::size_t> class_;
  std::vector<std::size_t> factorials_;
};

}  // namespace uas

#endif
