#ifndef UAS_LINALG_HPP
#define UAS_LINALG_HPP

#include "uas/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace uas {

using Vector = std::vector<Rational>;
using IntVector = std::vector<Integer>;

// A subspace of Q^n held in canonical reduced row-echelon form: row j is
// e_{pivot j} + sum_c block(j,c) e_{free c}.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  // block is dim × (ambient − dim), row-major, indexed by free-column order.
  static Subspace from_rref(std::size_t ambient, std::vector<std::size_t> pivots, std::vector<Rational> block);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<std::size_t>& free_columns() const { return free_; }
  const Rational& block(std::size_t row, std::size_t free_index) const {
    return block_[row * free_.size() + free_index];
  }

  Vector row(std::size_t j) const;
  std::vector<Vector> rows() const;
  // common_denominator() · row(j), an integer vector.
  IntVector scaled_row(std::size_t j) const;
  const Integer& common_denominator() const { return den_; }

  bool contains(const Vector& v) const;
  bool contains(const IntVector& v) const;
  bool contains(const Subspace& other) const;
  // Coordinates of v in the row basis; v must lie in the subspace.
  Vector coordinates(const Vector& v) const;

  Subspace annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.block_ == b.block_;
  }

 private:
  void prepare();
  bool contains_scaled(const IntVector& w) const;

  std::size_t ambient_ = 0;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> free_;
  std::vector<std::int32_t> pivot_row_;  // column -> row or -1
  std::vector<Rational> block_;
  Integer den_ = 1;
  std::vector<Integer> num_;            // den_ · block_
  std::vector<std::int64_t> num_small_;  // num_ when it fits
  unsigned num_bits_ = 0;
  bool small_ = false;
};

// Linear map sending basis vector k of the source to basis vector target[k].
struct BasisMap {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::vector<std::uint32_t> target;

  IntVector apply(const IntVector& v) const;
  Vector apply(const Vector& v) const;
};

namespace detail {
class ModEchelon;
}

// Incremental span builder: independence is decided modulo a word-size prime,
// accepted vectors are kept exactly as witnesses, certify() returns the exact
// span of the witnesses (multimodular reconstruction, verified over Q).
// The modular rank is always a lower bound for the rational rank.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t ambient, unsigned prime_slot = 0);
  SpanBuilder(SpanBuilder&&) noexcept;
  SpanBuilder& operator=(SpanBuilder&&) noexcept;
  ~SpanBuilder();

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return witnesses_.size(); }
  unsigned prime_slot() const { return slot_; }

  bool add(IntVector v);
  bool add(const Vector& v);
  // Candidate is map(source.witness(i)); both builders must share the prime slot.
  bool add_image(const SpanBuilder& source, std::size_t i, const BasisMap& map);
  bool is_full() const { return rank() == ambient_; }

  const IntVector& witness(std::size_t i) const { return witnesses_[i]; }
  const std::vector<IntVector>& witnesses() const { return witnesses_; }

  Subspace certify() const;

 private:
  std::size_t ambient_;
  unsigned slot_;
  std::unique_ptr<detail::ModEchelon> echelon_;
  std::vector<IntVector> witnesses_;
  std::vector<std::vector<std::uint32_t>> residues_;
};

struct RrefResult {
  Subspace space;
  std::size_t rank = 0;
};

RrefResult rref(const std::vector<Vector>& rows, std::size_t cols);
Subspace span(const std::vector<IntVector>& rows, std::size_t cols);
Subspace span(const std::vector<Vector>& rows, std::size_t cols);
// Both exact routes, exposed separately so they can be compared.
Subspace span_bareiss(const std::vector<IntVector>& rows, std::size_t cols);
Subspace span_multimodular(const std::vector<IntVector>& rows, std::size_t cols);

Subspace kernel(const std::vector<Vector>& rows, std::size_t cols);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

// Smallest subspace containing the seeds and mapped into itself by every map.
Subspace invariant_closure(std::size_t ambient, const std::vector<IntVector>& seeds,
                           const std::vector<BasisMap>& maps);
// Same closure, modular rank only (a certified lower bound of the exact dimension).
std::size_t invariant_closure_rank(std::size_t ambient, const std::vector<IntVector>& seeds,
                                   const std::vector<BasisMap>& maps);

// L acts on column vectors (L is ambient × ambient, row-major rows).
Rational trace_on_invariant_subspace(const Subspace& w, const std::vector<Vector>& l);

std::uint32_t modular_prime(unsigned slot);

}  // namespace uas

#endif
