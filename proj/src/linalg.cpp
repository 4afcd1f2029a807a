#include "uas/linalg.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace uas {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % p == 0) return n == p;
  }
  std::uint32_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 7ull, 61ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Below 2^25 so that sums of ~5000 products of residues fit in 64 bits.
constexpr std::uint32_t kPrimeCeiling = 1u << 25;
constexpr unsigned kPrimeCount = 4096;

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(powmod(a, p - 2, p));
}

unsigned bit_length(const Integer& z) {
  return z == 0 ? 0 : static_cast<unsigned>(mpz_sizeinbase(z.get_mpz_t(), 2));
}

}  // namespace

std::uint32_t modular_prime(unsigned slot) {
  static std::once_flag once;
  static std::vector<std::uint32_t> primes;
  std::call_once(once, [] {
    for (std::uint32_t c = kPrimeCeiling - 1; primes.size() < kPrimeCount; c -= 2) {
      if (is_prime_u32(c)) primes.push_back(c);
    }
  });
  if (slot >= primes.size()) throw std::out_of_range("modular prime supply exhausted");
  return primes[slot];
}

namespace detail {

class ModEchelon {
 public:
  ModEchelon(std::size_t n, std::uint32_t p) : n_(n), p_(p), row_of_col_(n, -1), acc_(n) {}

  std::uint32_t prime() const { return p_; }
  std::size_t rank() const { return pivot_.size(); }

  bool insert(const std::uint32_t* v) {
    reduce(v);
    return insert_scratch();
  }

  std::vector<std::size_t> sorted_pivots() const {
    std::vector<std::size_t> p = pivot_;
    std::sort(p.begin(), p.end());
    return p;
  }

  const std::uint32_t* row_for_pivot(std::size_t col) const {
    return &rows_[static_cast<std::size_t>(row_of_col_[col]) * n_];
  }

 private:
  void reduce(const std::uint32_t* v) {
    for (std::size_t c = 0; c < n_; ++c) acc_[c] = v[c];
    const std::uint64_t p = p_;
    for (std::size_t j = 0; j < pivot_.size(); ++j) {
      std::uint64_t coef = v[pivot_[j]];
      if (coef == 0) continue;
      std::uint64_t m = p - coef;
      const std::uint32_t* row = &rows_[j * n_];
      std::uint64_t* acc = acc_.data();
      for (std::size_t c = 0; c < n_; ++c) acc[c] += m * row[c];
    }
  }

  bool insert_scratch() {
    const std::uint64_t p = p_;
    std::size_t c0 = n_;
    for (std::size_t c = 0; c < n_; ++c) {
      acc_[c] %= p;
      if (c0 == n_ && acc_[c] != 0) c0 = c;
    }
    if (c0 == n_) return false;
    std::uint64_t inv = inverse_mod(static_cast<std::uint32_t>(acc_[c0]), p_);
    nz_.clear();
    std::size_t base = rows_.size();
    rows_.resize(base + n_);
    std::uint32_t* u = &rows_[base];
    for (std::size_t c = 0; c < n_; ++c) {
      if (acc_[c] == 0) {
        u[c] = 0;
        continue;
      }
      u[c] = static_cast<std::uint32_t>(acc_[c] * inv % p);
      nz_.push_back(c);
    }
    for (std::size_t j = 0; j < pivot_.size(); ++j) {
      std::uint32_t* row = &rows_[j * n_];
      std::uint64_t x = row[c0];
      if (x == 0) continue;
      std::uint64_t m = p - x;
      for (std::size_t c : nz_) row[c] = static_cast<std::uint32_t>((row[c] + m * u[c]) % p);
    }
    row_of_col_[c0] = static_cast<std::int32_t>(pivot_.size());
    pivot_.push_back(c0);
    return true;
  }

  std::size_t n_;
  std::uint32_t p_;
  std::vector<std::uint32_t> rows_;
  std::vector<std::size_t> pivot_;
  std::vector<std::int32_t> row_of_col_;
  std::vector<std::uint64_t> acc_;
  std::vector<std::size_t> nz_;
};

}  // namespace detail

namespace {

std::vector<std::uint32_t> residues_of(const IntVector& v, std::uint32_t p) {
  std::vector<std::uint32_t> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    r[i] = v[i] == 0 ? 0 : static_cast<std::uint32_t>(mpz_fdiv_ui(v[i].get_mpz_t(), p));
  }
  return r;
}

bool rational_reconstruct(const Integer& a, const Integer& m, const Integer& bound, Integer& num, Integer& den) {
  Integer r0 = m, r1 = a, t0 = 0, t1 = 1, q, tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  if (t1 < 0) {
    num = -r1;
    den = -t1;
  } else {
    num = r1;
    den = t1;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return g == 1;
}

// Reconstructs every residue (values in [0, modulus)) as a rational, sharing
// a running common denominator so that most entries need no Euclid run.
bool reconstruct_block(const std::vector<Integer>& residues, const Integer& modulus, std::vector<Rational>& out) {
  Integer half = modulus / 2;
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Integer den = 1, a, num, q;
  out.resize(residues.size());
  for (std::size_t i = 0; i < residues.size(); ++i) {
    a = residues[i] * den;
    mpz_mod(a.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
    if (a > half) a -= modulus;
    if (abs(a) <= bound) {
      out[i] = Rational(a, den);
      out[i].canonicalize();
      continue;
    }
    if (a < 0) a += modulus;
    if (!rational_reconstruct(a, modulus, bound, num, q)) return false;
    den *= q;
    out[i] = Rational(num, den);
    out[i].canonicalize();
  }
  return true;
}

Subspace rref_bareiss_impl(std::vector<IntVector> m, std::size_t cols) {
  std::size_t rows = m.size();
  std::size_t k = 0;
  Integer prev = 1;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && k < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = k; i < rows; ++i) {
      if (m[i][c] != 0) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    std::swap(m[sel], m[k]);
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = m[k][c] * m[i][j] - m[i][c] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[k][c];
    pivots.push_back(c);
    ++k;
  }
  std::size_t r = pivots.size();
  std::vector<Vector> red(r, Vector(cols));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < cols; ++j) red[i][j] = Rational(m[i][j]);
  }
  for (std::size_t i = r; i-- > 0;) {
    Rational lead = red[i][pivots[i]];
    for (std::size_t j = 0; j < cols; ++j) {
      if (red[i][j] != 0) red[i][j] /= lead;
    }
    for (std::size_t h = 0; h < i; ++h) {
      Rational f = red[h][pivots[i]];
      if (f == 0) continue;
      for (std::size_t j = pivots[i]; j < cols; ++j) {
        if (red[i][j] != 0) red[h][j] -= f * red[i][j];
      }
    }
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Rational> block;
  block.reserve(r * (cols - r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (!is_pivot[j]) block.push_back(red[i][j]);
    }
  }
  return Subspace::from_rref(cols, pivots, std::move(block));
}

}  // namespace

Subspace Subspace::zero(std::size_t ambient) { return from_rref(ambient, {}, {}); }

Subspace Subspace::full(std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return from_rref(ambient, std::move(piv), {});
}

Subspace Subspace::from_rref(std::size_t ambient, std::vector<std::size_t> pivots, std::vector<Rational> block) {
  Subspace s;
  s.ambient_ = ambient;
  s.pivots_ = std::move(pivots);
  for (std::size_t i = 0; i < s.pivots_.size(); ++i) {
    if (s.pivots_[i] >= ambient || (i && s.pivots_[i] <= s.pivots_[i - 1])) {
      throw std::invalid_argument("pivots must be strictly increasing inside the ambient space");
    }
  }
  if (block.size() != s.pivots_.size() * (ambient - s.pivots_.size())) {
    throw std::invalid_argument("rref block has the wrong size");
  }
  s.block_ = std::move(block);
  s.prepare();
  // Reduced form: block entries left of a row's pivot must vanish.
  for (std::size_t j = 0; j < s.pivots_.size(); ++j) {
    for (std::size_t c = 0; c < s.free_.size() && s.free_[c] < s.pivots_[j]; ++c) {
      if (s.block(j, c) != 0) throw std::invalid_argument("rref block is not reduced");
    }
  }
  return s;
}

void Subspace::prepare() {
  pivot_row_.assign(ambient_, -1);
  for (std::size_t j = 0; j < pivots_.size(); ++j) pivot_row_[pivots_[j]] = static_cast<std::int32_t>(j);
  free_.clear();
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (pivot_row_[c] < 0) free_.push_back(c);
  }
  den_ = 1;
  for (const auto& q : block_) {
    if (q != 0 && q.get_den() != 1) mpz_lcm(den_.get_mpz_t(), den_.get_mpz_t(), q.get_den().get_mpz_t());
  }
  num_.resize(block_.size());
  num_bits_ = 0;
  for (std::size_t i = 0; i < block_.size(); ++i) {
    num_[i] = block_[i].get_num() * (den_ / block_[i].get_den());
    num_bits_ = std::max(num_bits_, bit_length(num_[i]));
  }
  small_ = num_bits_ <= 62 && bit_length(den_) <= 62;
  num_small_.clear();
  if (small_) {
    num_small_.resize(num_.size());
    for (std::size_t i = 0; i < num_.size(); ++i) num_small_[i] = num_[i].get_si();
  }
}

Vector Subspace::row(std::size_t j) const {
  Vector v(ambient_);
  v[pivots_[j]] = 1;
  for (std::size_t c = 0; c < free_.size(); ++c) v[free_[c]] = block(j, c);
  return v;
}

std::vector<Vector> Subspace::rows() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t j = 0; j < dim(); ++j) out.push_back(row(j));
  return out;
}

IntVector Subspace::scaled_row(std::size_t j) const {
  IntVector v(ambient_);
  v[pivots_[j]] = den_;
  for (std::size_t c = 0; c < free_.size(); ++c) v[free_[c]] = num_[j * free_.size() + c];
  return v;
}

bool Subspace::contains_scaled(const IntVector& w) const {
  const std::size_t f = free_.size();
  if (f == 0) return true;
  if (pivots_.empty()) {
    for (const auto& x : w) {
      if (x != 0) return false;
    }
    return true;
  }
  unsigned wbits = 0;
  bool wsmall = true;
  for (const auto& x : w) {
    unsigned b = bit_length(x);
    wbits = std::max(wbits, b);
    if (b > 62) wsmall = false;
  }
  unsigned rbits = bit_length(Integer(static_cast<unsigned long>(pivots_.size()))) + 1;
  if (small_ && wsmall && wbits + num_bits_ + rbits < 126 && wbits + bit_length(den_) < 126) {
    std::vector<__int128> acc(f, 0);
    for (std::size_t j = 0; j < pivots_.size(); ++j) {
      const Integer& x = w[pivots_[j]];
      if (x == 0) continue;
      __int128 xj = x.get_si();
      const std::int64_t* row = &num_small_[j * f];
      for (std::size_t c = 0; c < f; ++c) acc[c] += xj * row[c];
    }
    __int128 d = den_.get_si();
    for (std::size_t c = 0; c < f; ++c) {
      if (acc[c] != d * static_cast<__int128>(w[free_[c]].get_si())) return false;
    }
    return true;
  }
  std::vector<Integer> acc(f);
  for (std::size_t j = 0; j < pivots_.size(); ++j) {
    const Integer& x = w[pivots_[j]];
    if (x == 0) continue;
    for (std::size_t c = 0; c < f; ++c) mpz_addmul(acc[c].get_mpz_t(), x.get_mpz_t(), num_[j * f + c].get_mpz_t());
  }
  for (std::size_t c = 0; c < f; ++c) {
    if (acc[c] != den_ * w[free_[c]]) return false;
  }
  return true;
}

bool Subspace::contains(const IntVector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("contains: ambient mismatch");
  return contains_scaled(v);
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("contains: ambient mismatch");
  return contains_scaled(primitive_integer_vector(v));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("contains: ambient mismatch");
  if (other.dim() > dim()) return false;
  for (std::size_t j = 0; j < other.dim(); ++j) {
    if (pivot_row_[other.pivots_[j]] < 0) return false;
  }
  for (std::size_t j = 0; j < other.dim(); ++j) {
    if (!contains_scaled(other.scaled_row(j))) return false;
  }
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw std::invalid_argument("coordinates: vector not in subspace");
  Vector c(dim());
  for (std::size_t j = 0; j < dim(); ++j) c[j] = v[pivots_[j]];
  return c;
}

Subspace Subspace::annihilator() const {
  if (dim() == 0) return full(ambient_);
  if (dim() == ambient_) return zero(ambient_);
  std::vector<IntVector> gens;
  gens.reserve(free_.size());
  for (std::size_t c = 0; c < free_.size(); ++c) {
    IntVector v(ambient_);
    v[free_[c]] = den_;
    for (std::size_t j = 0; j < pivots_.size(); ++j) v[pivots_[j]] = -num_[j * free_.size() + c];
    gens.push_back(std::move(v));
  }
  return span(gens, ambient_);
}

IntVector BasisMap::apply(const IntVector& v) const {
  if (v.size() != source_dim) throw std::invalid_argument("BasisMap: dimension mismatch");
  IntVector out(target_dim);
  for (std::size_t k = 0; k < source_dim; ++k) {
    if (v[k] != 0) out[target[k]] += v[k];
  }
  return out;
}

Vector BasisMap::apply(const Vector& v) const {
  if (v.size() != source_dim) throw std::invalid_argument("BasisMap: dimension mismatch");
  Vector out(target_dim);
  for (std::size_t k = 0; k < source_dim; ++k) {
    if (v[k] != 0) out[target[k]] += v[k];
  }
  return out;
}

SpanBuilder::SpanBuilder(std::size_t ambient, unsigned prime_slot)
    : ambient_(ambient), slot_(prime_slot),
      echelon_(std::make_unique<detail::ModEchelon>(ambient, modular_prime(prime_slot))) {}
SpanBuilder::SpanBuilder(SpanBuilder&&) noexcept = default;
SpanBuilder& SpanBuilder::operator=(SpanBuilder&&) noexcept = default;
SpanBuilder::~SpanBuilder() = default;

bool SpanBuilder::add(IntVector v) {
  if (v.size() != ambient_) throw std::invalid_argument("SpanBuilder::add: ambient mismatch");
  if (is_full()) return false;
  auto r = residues_of(v, echelon_->prime());
  if (!echelon_->insert(r.data())) return false;
  witnesses_.push_back(std::move(v));
  residues_.push_back(std::move(r));
  return true;
}

bool SpanBuilder::add(const Vector& v) { return add(primitive_integer_vector(v)); }

bool SpanBuilder::add_image(const SpanBuilder& source, std::size_t i, const BasisMap& map) {
  if (source.slot_ != slot_) throw std::invalid_argument("add_image: prime mismatch");
  if (map.source_dim != source.ambient_ || map.target_dim != ambient_) {
    throw std::invalid_argument("add_image: map dimensions mismatch");
  }
  if (is_full()) return false;
  const std::uint64_t p = echelon_->prime();
  const auto& in = source.residues_[i];
  std::vector<std::uint32_t> out(ambient_, 0);
  for (std::size_t k = 0; k < in.size(); ++k) {
    if (in[k] == 0) continue;
    std::uint32_t& slot = out[map.target[k]];
    slot = static_cast<std::uint32_t>((slot + static_cast<std::uint64_t>(in[k])) % p);
  }
  if (!echelon_->insert(out.data())) return false;
  IntVector w = map.apply(source.witnesses_[i]);
  witnesses_.push_back(std::move(w));
  residues_.push_back(std::move(out));
  return true;
}

Subspace SpanBuilder::certify() const {
  const std::size_t r = rank();
  if (r == 0) return Subspace::zero(ambient_);
  if (r == ambient_) return Subspace::full(ambient_);
  const std::vector<std::size_t> pivots = echelon_->sorted_pivots();
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (!is_pivot[c]) free.push_back(c);
  }
  const std::size_t f = free.size();

  auto block_residues = [&](const detail::ModEchelon& e, std::vector<std::uint32_t>& out) {
    out.resize(r * f);
    for (std::size_t j = 0; j < r; ++j) {
      const std::uint32_t* row = e.row_for_pivot(pivots[j]);
      for (std::size_t c = 0; c < f; ++c) out[j * f + c] = row[free[c]];
    }
  };

  std::vector<std::uint32_t> res;
  block_residues(*echelon_, res);
  std::vector<Integer> crt(res.begin(), res.end());
  Integer modulus = echelon_->prime();
  std::vector<Rational> block;

  auto attempt = [&]() -> bool {
    if (!reconstruct_block(crt, modulus, block)) return false;
    Subspace cand = Subspace::from_rref(ambient_, pivots, block);
    for (const auto& w : witnesses_) {
      if (!cand.contains(w)) return false;
    }
    return true;
  };
  if (attempt()) return Subspace::from_rref(ambient_, pivots, std::move(block));

  constexpr unsigned kMaxExtraPrimes = 600;
  for (unsigned s = 1, used = 0; used < kMaxExtraPrimes; ++s) {
    unsigned slot = (slot_ + s) % kPrimeCount;
    std::uint32_t p = modular_prime(slot);
    detail::ModEchelon e(ambient_, p);
    for (const auto& w : witnesses_) e.insert(residues_of(w, p).data());
    if (e.rank() != r || e.sorted_pivots() != pivots) continue;
    ++used;
    block_residues(e, res);
    std::uint32_t minv = inverse_mod(static_cast<std::uint32_t>(mpz_fdiv_ui(modulus.get_mpz_t(), p)), p);
    for (std::size_t i = 0; i < crt.size(); ++i) {
      std::uint64_t cur = mpz_fdiv_ui(crt[i].get_mpz_t(), p);
      std::uint64_t t = (res[i] + p - cur) % p * minv % p;
      if (t) mpz_addmul_ui(crt[i].get_mpz_t(), modulus.get_mpz_t(), t);
    }
    modulus *= p;
    if (attempt()) return Subspace::from_rref(ambient_, pivots, std::move(block));
  }
  return rref_bareiss_impl(witnesses_, ambient_);
}

Subspace span_bareiss(const std::vector<IntVector>& rows, std::size_t cols) {
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("span: row length mismatch");
  }
  return rref_bareiss_impl(rows, cols);
}

Subspace span_multimodular(const std::vector<IntVector>& rows, std::size_t cols) {
  for (unsigned slot = 0; slot < 4; ++slot) {
    SpanBuilder b(cols, slot);
    for (const auto& r : rows) {
      if (r.size() != cols) throw std::invalid_argument("span: row length mismatch");
      if (b.is_full()) break;
      b.add(r);
    }
    Subspace s = b.certify();
    bool ok = true;
    for (const auto& r : rows) {
      if (!s.contains(r)) {
        ok = false;
        break;
      }
    }
    if (ok) return s;
  }
  return span_bareiss(rows, cols);
}

Subspace span(const std::vector<IntVector>& rows, std::size_t cols) {
  if (rows.size() * cols <= 4096) return span_bareiss(rows, cols);
  return span_multimodular(rows, cols);
}

Subspace span(const std::vector<Vector>& rows, std::size_t cols) {
  std::vector<IntVector> ints;
  ints.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("span: row length mismatch");
    ints.push_back(primitive_integer_vector(r));
  }
  return span(ints, cols);
}

RrefResult rref(const std::vector<Vector>& rows, std::size_t cols) {
  Subspace s = span(rows, cols);
  std::size_t r = s.dim();
  return {std::move(s), r};
}

Subspace kernel(const std::vector<Vector>& rows, std::size_t cols) { return span(rows, cols).annihilator(); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("intersect: ambient mismatch");
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient_dim());
  if (b.contains(a)) return a;
  if (a.contains(b)) return b;
  return sum(a.annihilator(), b.annihilator()).annihilator();
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
  if (a.contains(b)) return a;
  if (b.contains(a)) return b;
  std::vector<IntVector> rows;
  rows.reserve(a.dim() + b.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) rows.push_back(a.scaled_row(j));
  for (std::size_t j = 0; j < b.dim(); ++j) rows.push_back(b.scaled_row(j));
  return span(rows, a.ambient_dim());
}

namespace {

SpanBuilder close_modular(std::size_t ambient, const std::vector<IntVector>& seeds, const std::vector<BasisMap>& maps,
                          unsigned slot) {
  SpanBuilder b(ambient, slot);
  for (const auto& s : seeds) {
    if (b.is_full()) break;
    b.add(s);
  }
  for (std::size_t i = 0; i < b.rank() && !b.is_full(); ++i) {
    for (const auto& m : maps) b.add_image(b, i, m);
  }
  return b;
}

}  // namespace

Subspace invariant_closure(std::size_t ambient, const std::vector<IntVector>& seeds, const std::vector<BasisMap>& maps) {
  for (const auto& m : maps) {
    if (m.source_dim != ambient || m.target_dim != ambient) {
      throw std::invalid_argument("invariant_closure: map dimension mismatch");
    }
  }
  for (unsigned slot = 0; slot < 8; ++slot) {
    SpanBuilder b = close_modular(ambient, seeds, maps, slot);
    Subspace s = b.certify();
    if (s.dim() == ambient) return s;
    bool ok = true;
    for (const auto& seed : seeds) {
      if (!s.contains(seed)) {
        ok = false;
        break;
      }
    }
    for (std::size_t j = 0; ok && j < s.dim(); ++j) {
      IntVector row = s.scaled_row(j);
      for (const auto& m : maps) {
        if (!s.contains(m.apply(row))) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return s;
  }
  throw std::runtime_error("invariant_closure: modular closure failed to certify");
}

std::size_t invariant_closure_rank(std::size_t ambient, const std::vector<IntVector>& seeds,
                                   const std::vector<BasisMap>& maps) {
  return close_modular(ambient, seeds, maps, 0).rank();
}

Rational trace_on_invariant_subspace(const Subspace& w, const std::vector<Vector>& l) {
  const std::size_t n = w.ambient_dim();
  if (l.size() != n) throw std::invalid_argument("trace: map size mismatch");
  Rational tr = 0;
  for (std::size_t j = 0; j < w.dim(); ++j) {
    Vector x = w.row(j);
    Vector y(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (l[i].size() != n) throw std::invalid_argument("trace: map size mismatch");
      for (std::size_t k = 0; k < n; ++k) {
        if (x[k] != 0 && l[i][k] != 0) y[i] += l[i][k] * x[k];
      }
    }
    if (!w.contains(y)) throw std::invalid_argument("trace: subspace is not invariant");
    tr += y[w.pivots()[j]];
  }
  return tr;
}

}  // namespace uas
