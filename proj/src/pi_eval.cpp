#include "uas/pi_eval.hpp"

#include "uas/config.hpp"
#include "uas/symmetric.hpp"

#include "json.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace uas {

namespace {

constexpr std::size_t kMaxAlgebraDim = 256;

using Wide = __int128;

Wide checked_mul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("evaluation overflow: inputs too large");
  return r;
}

Wide checked_add(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("evaluation overflow: inputs too large");
  return r;
}

Integer to_integer(Wide v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Integer hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  Integer r = hi << 64;
  r += static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  return neg ? Integer(-r) : r;
}

Wide to_wide(const Integer& z) {
  if (mpz_sizeinbase(z.get_mpz_t(), 2) > 120) throw std::overflow_error("evaluation overflow: constant too large");
  Integer mag = abs(z);
  Integer hi = mag >> 64;
  Integer lo = mag - (hi << 64);
  Wide r = (static_cast<Wide>(hi.get_ui()) << 64) | static_cast<Wide>(lo.get_ui());
  return z < 0 ? -r : r;
}

Wide gcd_wide(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Integer vector proportional to v (a positive multiple).
std::vector<Wide> clear_denominators(const Vector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Wide> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Integer num = v[i].get_num() * (l / v[i].get_den());
    out[i] = to_wide(num);
  }
  return out;
}

// Structure constants scaled by a common denominator D: a word of n ≥ 1
// letters evaluates to D^{n−1} times its true value, uniformly in the word.
struct IntegerTable {
  std::size_t d = 0;
  std::vector<std::uint32_t> offset;  // (i·d + j) → range in k/c
  std::vector<std::uint32_t> k;
  std::vector<Wide> c;

  explicit IntegerTable(const FiniteAlgebra& a) : d(a.dim()) {
    Integer den = 1;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        for (const auto& e : a.product_terms(i, j)) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.c.get_den_mpz_t());
      }
    }
    offset.push_back(0);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        for (const auto& e : a.product_terms(i, j)) {
          k.push_back(e.k);
          c.push_back(to_wide(e.c.get_num() * (den / e.c.get_den())));
        }
        offset.push_back(static_cast<std::uint32_t>(k.size()));
      }
    }
    for (auto x : c) max_c = std::max(max_c, x < 0 ? -x : x);
    if (max_c >= (Wide(1) << 62)) max_c = Wide(1) << 100;
    for (auto x : c) small_c.push_back(static_cast<std::int64_t>(x));
    monomial = true;
    for (std::size_t ij = 0; ij < d * d; ++ij) monomial = monomial && offset[ij + 1] - offset[ij] <= 1;
    if (monomial) {
      mono_k.assign(d * d, -1);
      mono_c.assign(d * d, 0);
      for (std::size_t ij = 0; ij < d * d; ++ij) {
        if (offset[ij + 1] > offset[ij]) {
          mono_k[ij] = static_cast<std::int32_t>(k[offset[ij]]);
          mono_c[ij] = small_c[offset[ij]];
        }
      }
    }
  }

  void multiply(const std::vector<Wide>& a, const std::vector<Wide>& b, const std::vector<std::uint32_t>& b_support,
                std::vector<Wide>& out) const {
    std::fill(out.begin(), out.end(), Wide(0));
    // When Σ|a|·Σ|b|·max|c| stays below 2^62 no partial sum can overflow int64.
    Wide la = 0, lb = 0;
    for (auto x : a) la = checked_add(la, x < 0 ? -x : x);
    for (auto j : b_support) lb = checked_add(lb, b[j] < 0 ? -b[j] : b[j]);
    Wide bound;
    if (!__builtin_mul_overflow(la, lb, &bound) && !__builtin_mul_overflow(bound, max_c, &bound) &&
        bound < (Wide(1) << 62)) {
      thread_local std::vector<std::int64_t> small_a, small_b, small_out;
      small_a.assign(a.begin(), a.end());
      small_b.assign(b.begin(), b.end());
      small_out.assign(d, 0);
      for (std::size_t i = 0; i < d; ++i) {
        const std::int64_t ai = small_a[i];
        if (ai == 0) continue;
        const std::size_t row = i * d;
        if (monomial) {
          const std::int32_t* mk = mono_k.data() + row;
          const std::int64_t* mc = mono_c.data() + row;
          for (auto j : b_support) {
            if (mk[j] >= 0) small_out[mk[j]] += ai * small_b[j] * mc[j];
          }
          continue;
        }
        for (auto j : b_support) {
          const std::int64_t ab = ai * small_b[j];
          for (std::uint32_t t = offset[row + j]; t < offset[row + j + 1]; ++t) small_out[k[t]] += ab * small_c[t];
        }
      }
      std::copy(small_out.begin(), small_out.end(), out.begin());
      return;
    }
    for (std::size_t i = 0; i < d; ++i) {
      if (a[i] == 0) continue;
      const std::size_t row = i * d;
      for (auto j : b_support) {
        const Wide ab = checked_mul(a[i], b[j]);
        for (std::uint32_t t = offset[row + j]; t < offset[row + j + 1]; ++t) {
          out[k[t]] = checked_add(out[k[t]], checked_mul(ab, c[t]));
        }
      }
    }
  }

  Wide max_c = 0;
  std::vector<std::int64_t> small_c;  // c when every entry fits
  // At most one product term per basis pair (Grassmann, matrix units).
  bool monomial = false;
  std::vector<std::int32_t> mono_k;
  std::vector<std::int64_t> mono_c;
};

std::vector<std::uint32_t> support_of(const std::vector<Wide>& v) {
  std::vector<std::uint32_t> s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) s.push_back(static_cast<std::uint32_t>(i));
  }
  return s;
}

// word code (base n digits of the letters) → rank of the basis permutation.
struct WordIndex {
  int n;
  std::vector<std::uint32_t> rank_of_code;

  explicit WordIndex(int arity) : n(arity) {
    const auto& g = SymmetricGroup::get(n);
    std::size_t size = 1;
    for (int i = 0; i < n; ++i) size *= static_cast<std::size_t>(n);
    rank_of_code.assign(size, 0);
    for (std::size_t r = 0; r < g.order(); ++r) {
      const auto terms = phi(OperadElement::basis(g.element(r))).terms();
      std::size_t code = 0;
      for (int x : terms.begin()->first) code = code * n + static_cast<std::size_t>(x - 1);
      rank_of_code[code] = static_cast<std::uint32_t>(r);
    }
  }
};

// Walks every word in the letters 1..n once, sharing prefix products.
// Leaves receive (rank, prefix over all but the last letter, last letter).
class WordWalker {
 public:
  WordWalker(const IntegerTable& table, const WordIndex& index, const std::vector<std::vector<Wide>>& inputs)
      : table_(table), index_(index), inputs_(inputs), n_(index.n) {
    for (const auto& x : inputs) supports_.push_back(support_of(x));
    prefix_.assign(static_cast<std::size_t>(std::max(n_, 1)), std::vector<Wide>(table.d));
  }

  template <class Leaf>
  void run(Leaf&& leaf) {
    if (n_ == 0) return;
    used_.assign(static_cast<std::size_t>(n_), false);
    for (int v = 0; v < n_; ++v) {
      if (n_ == 1) {
        leaf(index_.rank_of_code[0], nullptr, 0);
        return;
      }
      used_[v] = true;
      prefix_[0] = inputs_[v];
      descend(1, static_cast<std::size_t>(v), leaf);
      used_[v] = false;
    }
  }

 private:
  template <class Leaf>
  void descend(int depth, std::size_t code, Leaf& leaf) {
    if (depth == n_ - 1) {
      for (int v = 0; v < n_; ++v) {
        if (used_[v]) continue;
        leaf(index_.rank_of_code[code * n_ + static_cast<std::size_t>(v)], &prefix_[depth - 1], v);
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      used_[v] = true;
      table_.multiply(prefix_[depth - 1], inputs_[v], supports_[v], prefix_[depth]);
      descend(depth + 1, code * n_ + static_cast<std::size_t>(v), leaf);
      used_[v] = false;
    }
  }

  const IntegerTable& table_;
  const WordIndex& index_;
  const std::vector<std::vector<Wide>>& inputs_;
  int n_;
  std::vector<std::vector<std::uint32_t>> supports_;
  std::vector<std::vector<Wide>> prefix_;
  std::vector<bool> used_;
};

// Row over the permutation basis, made primitive with a positive leading entry.
bool normalize(std::vector<Wide>& row) {
  Wide g = 0;
  for (auto x : row) {
    if (x != 0) g = gcd_wide(g, x);
  }
  if (g == 0) return false;
  auto lead = std::find_if(row.begin(), row.end(), [](Wide x) { return x != 0; });
  if (*lead < 0) g = -g;
  for (auto& x : row) x /= g;
  return true;
}

struct RowHash {
  std::size_t operator()(const std::vector<Wide>& r) const {
    std::size_t h = r.size();
    for (auto x : r) {
      auto u = static_cast<unsigned __int128>(x);
      h ^= static_cast<std::size_t>(u ^ (u >> 64)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Exact span of the given rows: modular independence, exact certification of
// the accepted rows, then an exact membership check of every rejected row.
Subspace exact_row_span(std::size_t cols, const std::vector<std::vector<Wide>>& rows) {
  SpanBuilder builder(cols);
  std::vector<IntVector> rejected;
  for (const auto& r : rows) {
    IntVector v(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) v[i] = to_integer(r[i]);
    if (builder.is_full()) {
      rejected.push_back(std::move(v));
      continue;
    }
    IntVector copy = v;
    if (!builder.add(std::move(v))) rejected.push_back(std::move(copy));
  }
  Subspace s = builder.certify();
  std::vector<IntVector> missing;
  for (auto& v : rejected) {
    if (!s.contains(v)) missing.push_back(std::move(v));
  }
  if (!missing.empty()) s = sum(s, span(missing, cols));
  return s;
}

std::uint64_t checked_power(std::size_t base, int e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

std::vector<Wide> random_input(std::mt19937_64& rng, std::size_t d) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  Vector v(d);
  for (auto& x : v) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return clear_denominators(v);
}

std::vector<std::vector<Wide>> deterministic_rows(const FiniteAlgebra& a, int n) {
  const std::size_t d = a.dim();
  const std::size_t cols = SymmetricGroup::get(n).order();
  std::unordered_set<std::vector<Wide>, RowHash> seen;
  std::vector<std::vector<Wide>> rows;
  auto keep = [&](std::vector<Wide> row) {
    if (!normalize(row)) return;
    if (seen.insert(row).second) rows.push_back(std::move(row));
  };
  if (n == 0) {
    for (auto x : clear_denominators(a.unit())) keep({x});
    return rows;
  }
  IntegerTable table(a);
  WordIndex index(n);
  std::vector<std::vector<Wide>> values(cols, std::vector<Wide>(d));
  std::vector<std::vector<Wide>> inputs(static_cast<std::size_t>(n), std::vector<Wide>(d, 0));
  std::vector<std::size_t> tuple(static_cast<std::size_t>(n), 0);
  std::vector<Wide> scratch(d);
  while (true) {
    for (int i = 0; i < n; ++i) {
      std::fill(inputs[i].begin(), inputs[i].end(), Wide(0));
      inputs[i][tuple[i]] = 1;
    }
    WordWalker walker(table, index, inputs);
    walker.run([&](std::uint32_t rank, const std::vector<Wide>* prefix, int last) {
      if (!prefix) {
        values[rank] = inputs[last];
        return;
      }
      table.multiply(*prefix, inputs[last], support_of(inputs[last]), scratch);
      values[rank] = scratch;
    });
    for (std::size_t k = 0; k < d; ++k) {
      std::vector<Wide> row(cols);
      for (std::size_t s = 0; s < cols; ++s) row[s] = values[s][k];
      keep(std::move(row));
    }
    int pos = n - 1;
    while (pos >= 0 && ++tuple[pos] == d) tuple[pos--] = 0;
    if (pos < 0) break;
  }
  return rows;
}

// Products x_{w1}⋯x_{wt} for every ordered tuple of t distinct letters,
// indexed by the base-n code of the tuple.
std::vector<std::vector<Wide>> ordered_products(const IntegerTable& table, const std::vector<std::vector<Wide>>& inputs,
                                                int t) {
  const int n = static_cast<int>(inputs.size());
  const std::size_t d = table.d;
  std::vector<std::vector<std::uint32_t>> supports;
  for (const auto& x : inputs) supports.push_back(support_of(x));
  std::size_t size = 1;
  for (int i = 0; i < t; ++i) size *= static_cast<std::size_t>(n);
  std::vector<std::vector<Wide>> out(size);
  std::vector<std::vector<Wide>> stack(static_cast<std::size_t>(t), std::vector<Wide>(d));
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto walk = [&](auto& self, int depth, std::size_t code) -> void {
    if (depth == t) {
      out[code] = stack[depth - 1];
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      if (depth == 0) {
        stack[0] = inputs[v];
      } else {
        table.multiply(stack[depth - 1], inputs[v], supports[v], stack[depth]);
      }
      self(self, depth + 1, code * n + static_cast<std::size_t>(v));
      used[v] = false;
    }
  };
  walk(walk, 0, 0);
  return out;
}

// One row per sample: a random functional ℓ applied to the evaluations at a
// random tuple. Each word splits as prefix·suffix and ℓ(P·S) = Pᵀ L S with
// L_ij = ℓ(e_i e_j), so only half-length products are formed.
std::vector<Wide> sample_row(const FiniteAlgebra& a, const IntegerTable& table, const WordIndex& index, int n,
                             std::uint64_t seed, std::size_t sample) {
  const std::size_t d = a.dim();
  const std::size_t cols = SymmetricGroup::get(n).order();
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(sample), static_cast<std::uint32_t>(sample >> 32)};
  std::mt19937_64 rng(seq);
  std::vector<std::vector<Wide>> inputs;
  for (int i = 0; i < n; ++i) inputs.push_back(random_input(rng, d));
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<Wide> functional(d);
  for (auto& x : functional) x = coeff(rng);
  auto apply_functional = [&](const std::vector<Wide>& v) {
    Wide acc = 0;
    for (std::size_t i = 0; i < d; ++i) acc = checked_add(acc, checked_mul(functional[i], v[i]));
    return acc;
  };
  std::vector<Wide> row(cols, 0);
  if (n == 0) {
    row[0] = apply_functional(clear_denominators(a.unit()));
    return row;
  }
  if (n == 1) {
    row[0] = apply_functional(inputs[0]);
    return row;
  }
  std::vector<Wide> form(d * d, 0);
  for (std::size_t ij = 0; ij < d * d; ++ij) {
    for (std::uint32_t t = table.offset[ij]; t < table.offset[ij + 1]; ++t) {
      form[ij] = checked_add(form[ij], checked_mul(functional[table.k[t]], table.c[t]));
    }
  }
  const int h = n / 2;
  const int s = n - h;
  const auto prefixes = ordered_products(table, inputs, h);
  auto suffixes = ordered_products(table, inputs, s);
  for (auto& v : suffixes) {
    if (v.empty()) continue;
    std::vector<Wide> lv(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      Wide acc = 0;
      for (std::size_t j = 0; j < d; ++j) {
        if (v[j] != 0 && form[i * d + j] != 0) acc = checked_add(acc, checked_mul(form[i * d + j], v[j]));
      }
      lv[i] = acc;
    }
    v = std::move(lv);
  }
  std::size_t split = 1;
  for (int i = 0; i < s; ++i) split *= static_cast<std::size_t>(n);
  for (std::size_t code = 0; code < index.rank_of_code.size(); ++code) {
    const auto& p = prefixes[code / split];
    const auto& q = suffixes[code % split];
    if (p.empty() || q.empty()) continue;
    // Tuples sharing a letter between prefix and suffix are not words.
    std::uint32_t seen = 0;
    bool word = true;
    for (std::size_t c = code, i = 0; i < static_cast<std::size_t>(n); ++i, c /= n) {
      const std::uint32_t bit = 1u << (c % n);
      word = word && !(seen & bit);
      seen |= bit;
    }
    if (!word) continue;
    Wide acc = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (p[i] != 0 && q[i] != 0) acc = checked_add(acc, checked_mul(p[i], q[i]));
    }
    row[index.rank_of_code[code]] = acc;
  }
  return row;
}

std::vector<std::vector<Wide>> montecarlo_rows(const FiniteAlgebra& a, int n, std::uint64_t seed, std::size_t samples) {
  IntegerTable table(a);
  WordIndex index(n);
  std::vector<std::vector<Wide>> rows(samples);
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(settings().threads, samples));
  auto work = [&](std::size_t w) {
    for (std::size_t s = w; s < samples; s += workers) rows[s] = sample_row(a, table, index, n, seed, s);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          work(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  return rows;
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(std::size_t dim, Vector unit,
                             const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>>& mult,
                             std::string name)
    : dim_(dim), unit_(std::move(unit)), table_(dim * dim), name_(std::move(name)) {
  if (dim_ == 0) throw std::invalid_argument("algebra: dimension must be positive");
  if (dim_ > kMaxAlgebraDim) throw CapExceeded("algebra: dimension " + std::to_string(dim_) + " above " + std::to_string(kMaxAlgebraDim));
  if (unit_.size() != dim_) throw std::invalid_argument("algebra: unit has the wrong length");
  std::vector<std::map<std::uint32_t, Rational>> acc(dim_ * dim_);
  for (const auto& [i, j, k, c] : mult) {
    if (i >= dim_ || j >= dim_ || k >= dim_) throw std::invalid_argument("algebra: structure constant index out of range");
    acc[i * dim_ + j][static_cast<std::uint32_t>(k)] += c;
  }
  for (std::size_t ij = 0; ij < acc.size(); ++ij) {
    for (const auto& [k, c] : acc[ij]) {
      if (c != 0) table_[ij].push_back({k, c});
    }
  }
  verify();
}

void FiniteAlgebra::verify() const {
  Vector left(dim_), right(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        std::fill(left.begin(), left.end(), Rational(0));
        std::fill(right.begin(), right.end(), Rational(0));
        for (const auto& e : table_[i * dim_ + j]) {
          for (const auto& f : table_[e.k * dim_ + k]) left[f.k] += e.c * f.c;
        }
        for (const auto& e : table_[j * dim_ + k]) {
          for (const auto& f : table_[i * dim_ + e.k]) right[f.k] += e.c * f.c;
        }
        if (left != right) {
          throw std::invalid_argument("algebra: not associative at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                      std::to_string(k) + ")");
        }
      }
    }
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    Vector e = basis(i);
    if (multiply(unit_, e) != e || multiply(e, unit_) != e) {
      throw std::invalid_argument("algebra: unit law fails on basis element " + std::to_string(i));
    }
  }
}

FiniteAlgebra FiniteAlgebra::builtin(std::string_view name, int k) {
  using Triple = std::tuple<std::size_t, std::size_t, std::size_t, Rational>;
  std::vector<Triple> mult;
  if (name == "field") {
    return FiniteAlgebra(1, Vector{Rational(1)}, {Triple{0, 0, 0, Rational(1)}}, "field");
  }
  if (k < 1) throw std::invalid_argument("builtin " + std::string(name) + ": size must be positive");
  if (name == "grassmann") {
    if (k > 8) throw CapExceeded("grassmann: at most 8 generators");
    const std::size_t d = std::size_t{1} << k;
    for (std::size_t s = 0; s < d; ++s) {
      for (std::size_t t = 0; t < d; ++t) {
        if (s & t) continue;
        // sign of merging the increasing words of s and t
        int swaps = 0;
        for (int b = 0; b < k; ++b) {
          if (t >> b & 1) swaps += std::popcount(s >> (b + 1));
        }
        mult.emplace_back(s, t, s | t, Rational(swaps % 2 ? -1 : 1));
      }
    }
    Vector unit(d);
    unit[0] = 1;
    return FiniteAlgebra(d, unit, mult, "grassmann:" + std::to_string(k));
  }
  if (name == "mat" || name == "ut") {
    const bool upper = name == "ut";
    std::vector<std::pair<int, int>> units;
    for (int i = 0; i < k; ++i) {
      for (int j = upper ? i : 0; j < k; ++j) units.emplace_back(i, j);
    }
    if (units.size() > kMaxAlgebraDim) throw CapExceeded(std::string(name) + ": dimension above cap");
    auto idx = [&](int i, int j) {
      return static_cast<std::size_t>(std::find(units.begin(), units.end(), std::make_pair(i, j)) - units.begin());
    };
    for (std::size_t a = 0; a < units.size(); ++a) {
      for (std::size_t b = 0; b < units.size(); ++b) {
        if (units[a].second == units[b].first) mult.emplace_back(a, b, idx(units[a].first, units[b].second), Rational(1));
      }
    }
    Vector unit(units.size());
    for (int i = 0; i < k; ++i) unit[idx(i, i)] = 1;
    return FiniteAlgebra(units.size(), unit, mult, std::string(name) + ":" + std::to_string(k));
  }
  throw std::invalid_argument("unknown builtin algebra '" + std::string(name) + "'");
}

FiniteAlgebra FiniteAlgebra::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("algebra JSON: ") + e.what());
  }
  auto as_rational = [](const nlohmann::json& v) -> Rational {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw std::invalid_argument("algebra JSON: coefficients must be integers or \"p/q\" strings");
  };
  if (!j.is_object() || !j.contains("dim") || !j.contains("unit") || !j.contains("mult")) {
    throw std::invalid_argument("algebra JSON: expected keys dim, unit, mult");
  }
  const auto d = j.at("dim").get<std::size_t>();
  Vector unit;
  for (const auto& u : j.at("unit")) unit.push_back(as_rational(u));
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> mult;
  for (const auto& e : j.at("mult")) {
    if (!e.is_array() || e.size() != 4) throw std::invalid_argument("algebra JSON: mult entries are [i,j,k,c]");
    mult.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>(), e[2].get<std::size_t>(), as_rational(e[3]));
  }
  return FiniteAlgebra(d, unit, mult, j.value("name", std::string("custom")));
}

FiniteAlgebra FiniteAlgebra::resolve(std::string_view uri) {
  constexpr std::string_view prefix = "builtin:";
  if (uri.substr(0, prefix.size()) == prefix) {
    std::string rest(uri.substr(prefix.size()));
    auto colon = rest.find(':');
    if (colon == std::string::npos) return builtin(rest);
    int k = 0;
    try {
      k = std::stoi(rest.substr(colon + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad builtin size in '" + std::string(uri) + "'");
    }
    return builtin(rest.substr(0, colon), k);
  }
  std::ifstream in{std::string(uri)};
  if (!in) throw std::invalid_argument("cannot open algebra file '" + std::string(uri) + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

std::string FiniteAlgebra::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name_;
  j["dim"] = dim_;
  j["unit"] = nlohmann::json::array();
  for (const auto& u : unit_) j["unit"].push_back(to_string(u));
  j["mult"] = nlohmann::json::array();
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t jj = 0; jj < dim_; ++jj) {
      for (const auto& e : table_[i * dim_ + jj]) j["mult"].push_back({i, jj, e.k, to_string(e.c)});
    }
  }
  return j.dump();
}

bool FiniteAlgebra::commutative() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const auto& a = table_[i * dim_ + j];
      const auto& b = table_[j * dim_ + i];
      if (a.size() != b.size()) return false;
      for (std::size_t t = 0; t < a.size(); ++t) {
        if (a[t].k != b[t].k || a[t].c != b[t].c) return false;
      }
    }
  }
  return true;
}

Vector FiniteAlgebra::basis(std::size_t i) const {
  Vector e(dim_);
  e.at(i) = 1;
  return e;
}

Vector FiniteAlgebra::multiply(const Vector& a, const Vector& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw std::invalid_argument("multiply: vector length mismatch");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      const Rational ab = a[i] * b[j];
      for (const auto& e : table_[i * dim_ + j]) out[e.k] += ab * e.c;
    }
  }
  return out;
}

Vector evaluate(const FiniteAlgebra& a, const OperadElement& theta, const std::vector<Vector>& tuple) {
  if (static_cast<int>(tuple.size()) != theta.arity()) {
    throw std::invalid_argument("evaluate: tuple length " + std::to_string(tuple.size()) + " differs from arity " +
                                std::to_string(theta.arity()));
  }
  for (const auto& x : tuple) {
    if (x.size() != a.dim()) throw std::invalid_argument("evaluate: element has the wrong length");
  }
  Vector out(a.dim());
  const MultilinearPolynomial f = phi(theta);
  for (const auto& [word, c] : f.terms()) {
    Vector value = a.unit();
    for (int x : word) value = a.multiply(value, tuple[x - 1]);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * value[i];
  }
  return out;
}

IdentityComponent identities_component(const FiniteAlgebra& a, int n, EvalMode mode) {
  require_window(n, "identities_component");
  if (n < 0) throw std::invalid_argument("identities_component: negative arity");
  const std::size_t cols = SymmetricGroup::get(n).order();
  const std::uint64_t cap = settings().cap;
  const bool fits = checked_power(a.dim(), n, cap) <= cap;
  if (mode.kind == EvalMode::Kind::deterministic && !fits) {
    throw CapExceeded("identities_component: dim(A)^n = " + std::to_string(a.dim()) + "^" + std::to_string(n) +
                      " exceeds the deterministic cap " + std::to_string(cap));
  }
  IdentityComponent out;
  out.n = n;
  if (mode.kind == EvalMode::Kind::deterministic || (mode.kind == EvalMode::Kind::automatic && fits)) {
    out.space = exact_row_span(cols, deterministic_rows(a, n)).annihilator();
    out.status = "exact";
    out.exact = true;
    return out;
  }
  const std::uint64_t seed = mode.seed ? mode.seed : settings().seed;
  const std::size_t samples = mode.samples ? mode.samples : 3 * cols;
  out.space = exact_row_span(cols, montecarlo_rows(a, n, seed, samples)).annihilator();
  out.status = "probabilistic(seed=" + std::to_string(seed) + ", samples=" + std::to_string(samples) + ")";
  return out;
}

Codimension codim(const FiniteAlgebra& a, int n, EvalMode mode) {
  IdentityComponent v = identities_component(a, n, mode);
  return {n, Integer(SymmetricGroup::get(n).order() - v.space.dim()), v.status, v.exact};
}

CrossCheck cross_check(const FiniteAlgebra& a, const IdealWindow& ideal, int n, EvalMode mode) {
  IdentityComponent v = identities_component(a, n, mode);
  const Subspace& in = ideal.at(n);
  CrossCheck r;
  r.n = n;
  r.identities_dim = v.space.dim();
  r.ideal_dim = in.dim();
  r.identities_contain_ideal = v.space.contains(in);
  r.ideal_contains_identities = in.contains(v.space);
  r.equal = r.identities_contain_ideal && r.ideal_contains_identities;
  r.status = v.status;
  r.verdict = r.equal ? "equal"
              : r.identities_contain_ideal ? "identities contain ideal"
              : r.ideal_contains_identities ? "ideal contains identities"
                                            : "incomparable";
  return r;
}

}  // namespace uas
