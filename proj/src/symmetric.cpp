#include "uas/symmetric.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace uas {

namespace {

void check_arity(int n) {
  if (n < 0 || n > kMaxGroupArity) {
    throw std::out_of_range("arity " + std::to_string(n) + " outside supported range 0.." +
                            std::to_string(kMaxGroupArity));
  }
}

std::vector<int> parse_int_list(std::string_view body, char open, char close) {
  std::string s;
  for (char c : body) {
    if (c != ' ' && c != '\t') s.push_back(c);
  }
  if (s.size() < 2 || s.front() != open || s.back() != close) {
    throw std::invalid_argument("expected " + std::string(1, open) + "..." +
                                std::string(1, close) + ", got '" + std::string(body) + "'");
  }
  std::vector<int> out;
  std::string inner = s.substr(1, s.size() - 2);
  if (inner.empty()) return out;
  std::stringstream ss(inner);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad integer '" + item + "' in '" + std::string(body) + "'");
    }
    out.push_back(std::stoi(item));
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> seq) : seq_(std::move(seq)) {
  std::vector<bool> seen(seq_.size() + 1, false);
  for (int v : seq_) {
    if (v < 1 || v > static_cast<int>(seq_.size()) || seen[v]) {
      throw std::invalid_argument("not a permutation sequence");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> s(n);
  std::iota(s.begin(), s.end(), 1);
  return Permutation(std::move(s));
}

Permutation Permutation::from_map(const std::vector<int>& images) {
  std::vector<int> s(images.size(), 0);
  for (std::size_t i = 0; i < images.size(); ++i) {
    int v = images[i];
    if (v < 1 || v > static_cast<int>(images.size()) || s[v - 1] != 0) {
      throw std::invalid_argument("not a permutation map");
    }
    s[v - 1] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(s));
}

Permutation Permutation::parse(std::string_view text) {
  return Permutation(parse_int_list(text, '(', ')'));
}

std::vector<int> Permutation::map_form() const {
  std::vector<int> m(seq_.size());
  for (std::size_t k = 0; k < seq_.size(); ++k) m[seq_[k] - 1] = static_cast<int>(k) + 1;
  return m;
}

Permutation Permutation::inverse() const { return Permutation(map_form()); }

int Permutation::sign() const {
  int s = 1;
  for (std::size_t i = 0; i < seq_.size(); ++i) {
    for (std::size_t j = i + 1; j < seq_.size(); ++j) {
      if (seq_[i] > seq_[j]) s = -s;
    }
  }
  return s;
}

Partition Permutation::cycle_type() const {
  std::vector<int> m = map_form();
  std::vector<bool> seen(m.size(), false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = m[j] - 1) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(std::move(lengths));
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < seq_.size(); ++k) {
    if (seq_[k] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

std::string Permutation::str() const {
  std::string out = "(";
  for (std::size_t k = 0; k < seq_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(seq_[k]);
  }
  return out + ")";
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (auto c = a.arity() <=> b.arity(); c != 0) return c;
  return a.seq_ <=> b.seq_;
}

Permutation perm_multiply(const Permutation& a, const Permutation& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("perm_multiply: arity mismatch");
  std::vector<int> t(a.arity());
  for (int k = 0; k < a.arity(); ++k) t[k] = b.seq()[a.seq()[k] - 1];
  return Permutation(std::move(t));
}

Permutation c_permutation(const std::vector<int>& subset, int n) {
  std::vector<bool> in(n + 1, false);
  for (int i : subset) {
    if (i < 1 || i > n) throw std::invalid_argument("c_permutation: subset not inside [n]");
    if (in[i]) throw std::invalid_argument("c_permutation: repeated element");
    in[i] = true;
  }
  std::vector<int> seq;
  for (int i = 1; i <= n; ++i) {
    if (!in[i]) seq.push_back(i);
  }
  for (int i = 1; i <= n; ++i) {
    if (in[i]) seq.push_back(i);
  }
  return Permutation(std::move(seq));
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be nonincreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s.push_back(c);
  }
  if (!s.empty() && (s.front() == '[' || s.front() == '(')) {
    char close = s.front() == '[' ? ']' : ')';
    if (s.back() != close) throw std::invalid_argument("unbalanced partition '" + s + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto caret = item.find('^');
    std::string base = item.substr(0, caret);
    std::string rep = caret == std::string::npos ? "1" : item.substr(caret + 1);
    if (base.empty() || rep.empty() || base.find_first_not_of("0123456789") != std::string::npos ||
        rep.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad partition part '" + item + "'");
    }
    int b = std::stoi(base), r = std::stoi(rep);
    for (int i = 0; i < r; ++i) parts.push_back(b);
  }
  std::vector<int> sorted = parts;
  std::sort(sorted.rbegin(), sorted.rend());
  if (sorted != parts) throw std::invalid_argument("partition parts must be nonincreasing: '" + s + "'");
  return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (parts_.empty()) return Partition();
  for (int j = 1; j <= parts_.front(); ++j) {
    int cnt = 0;
    for (int p : parts_) cnt += p >= j;
    c.push_back(cnt);
  }
  return Partition(std::move(c));
}

std::string Partition::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

std::string Partition::label() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (!out.empty()) out += ",";
    out += std::to_string(parts_[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

template <class T>
class PerArityCache {
 public:
  template <class Build>
  const T& get(int n, Build&& build) {
    check_arity(n);
    std::call_once(flags_[n], [&] { slots_[n] = std::make_unique<T>(build(n)); });
    return *slots_[n];
  }

 private:
  std::array<std::once_flag, kMaxGroupArity + 1> flags_;
  std::array<std::unique_ptr<T>, kMaxGroupArity + 1> slots_;
};

// χ^λ(μ) by the Murnaghan–Nakayama rule on beta-sets.
std::int64_t mn_value(std::vector<int> beta, const std::vector<int>& mu, std::size_t idx) {
  if (idx == mu.size()) return 1;
  int r = mu[idx];
  std::int64_t total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int b = beta[i];
    int nb = b - r;
    if (nb < 0) continue;
    if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
    int between = 0;
    for (int x : beta) between += (x > nb && x < b);
    std::vector<int> next = beta;
    next[i] = nb;
    std::int64_t sub = mn_value(next, mu, idx + 1);
    total += (between % 2 ? -sub : sub);
  }
  return total;
}

}  // namespace

const std::vector<Partition>& partitions(int n) {
  static PerArityCache<std::vector<Partition>> cache;
  return cache.get(n, [](int m) {
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(m, m, cur, out);
    std::sort(out.begin(), out.end());
    return out;
  });
}

std::size_t partition_index(const Partition& p) {
  const auto& all = partitions(p.weight());
  auto it = std::lower_bound(all.begin(), all.end(), p);
  if (it == all.end() || *it != p) throw std::logic_error("partition not found");
  return static_cast<std::size_t>(it - all.begin());
}

const std::vector<ConjugacyClass>& conjugacy_classes(int n) {
  static PerArityCache<std::vector<ConjugacyClass>> cache;
  return cache.get(n, [](int m) {
    std::vector<ConjugacyClass> out;
    for (const auto& p : partitions(m)) {
      Integer z = 1;
      std::map<int, int> mult;
      for (int part : p.parts()) ++mult[part];
      for (auto [part, cnt] : mult) {
        for (int i = 0; i < cnt; ++i) z *= part;
        z *= factorial(cnt);
      }
      std::vector<int> images(m);
      int start = 0;
      for (int part : p.parts()) {
        for (int i = 0; i < part; ++i) images[start + i] = start + (i + 1) % part + 1;
        start += part;
      }
      out.push_back({p, Integer(factorial(m) / z), Permutation::from_map(images)});
    }
    return out;
  });
}

CharacterVector CharacterVector::zero(int n) {
  return CharacterVector{n, std::vector<Rational>(partitions(n).size())};
}

CharacterVector& CharacterVector::operator+=(const CharacterVector& o) {
  if (o.n != n || o.values.size() != values.size()) throw std::invalid_argument("character weight mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
  return *this;
}

CharacterVector operator*(const Rational& c, CharacterVector a) {
  for (auto& v : a.values) v *= c;
  return a;
}

Rational character_inner_product(const CharacterVector& a, const CharacterVector& b) {
  if (a.n != b.n) throw std::invalid_argument("character weight mismatch");
  const auto& cls = conjugacy_classes(a.n);
  Rational s = 0;
  for (std::size_t i = 0; i < cls.size(); ++i) s += Rational(cls[i].size) * a.values[i] * b.values[i];
  return s / Rational(factorial(a.n));
}

std::int64_t character_value(const Partition& lambda, const Partition& cycle_type) {
  if (lambda.weight() != cycle_type.weight()) throw std::invalid_argument("character_value: weight mismatch");
  const auto& parts = lambda.parts();
  std::vector<int> beta(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    beta[i] = parts[i] + static_cast<int>(parts.size() - 1 - i);
  }
  return mn_value(beta, cycle_type.parts(), 0);
}

const std::vector<CharacterVector>& character_table(int n) {
  static PerArityCache<std::vector<CharacterVector>> cache;
  return cache.get(n, [](int m) {
    std::vector<CharacterVector> rows;
    const auto& cls = conjugacy_classes(m);
    for (const auto& lam : partitions(m)) {
      CharacterVector row = CharacterVector::zero(m);
      for (std::size_t j = 0; j < cls.size(); ++j) row.values[j] = Rational(character_value(lam, cls[j].type));
      rows.push_back(std::move(row));
    }
    return rows;
  });
}

const CharacterVector& irreducible_character(const Partition& lambda) {
  return character_table(lambda.weight())[partition_index(lambda)];
}

Integer hook_dimension(const Partition& lambda) {
  if (lambda.parts().empty()) throw std::invalid_argument("hook_dimension: empty partition");
  Partition conj = lambda.conjugate();
  Integer prod = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.parts()[i]; ++j) {
      int arm = lambda.parts()[i] - j - 1;
      int leg = conj.parts()[j] - i - 1;
      prod *= arm + leg + 1;
    }
  }
  return factorial(lambda.weight()) / prod;
}

const SymmetricGroup& SymmetricGroup::get(int n) {
  static PerArityCache<SymmetricGroup> cache;
  return cache.get(n, [](int m) { return SymmetricGroup(m); });
}

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
  check_arity(n);
  factorials_.assign(n + 1, 1);
  for (int i = 1; i <= n; ++i) factorials_[i] = factorials_[i - 1] * i;
  std::vector<int> s(n);
  std::iota(s.begin(), s.end(), 1);
  do {
    elements_.emplace_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  const auto& cls = conjugacy_classes(n);
  inverse_.resize(elements_.size());
  sign_.resize(elements_.size());
  class_.resize(elements_.size());
  for (std::size_t r = 0; r < elements_.size(); ++r) {
    inverse_[r] = rank(elements_[r].inverse());
    sign_[r] = elements_[r].sign();
    Partition t = elements_[r].cycle_type();
    for (std::size_t c = 0; c < cls.size(); ++c) {
      if (cls[c].type == t) class_[r] = c;
    }
  }
}

std::size_t SymmetricGroup::rank_of(const int* seq) const {
  std::size_t r = 0;
  unsigned used = 0;
  for (int i = 0; i < n_; ++i) {
    int v = seq[i];
    int smaller = __builtin_popcount(used & ((1u << v) - 2u));
    r += static_cast<std::size_t>(v - 1 - smaller) * factorials_[n_ - 1 - i];
    used |= 1u << v;
  }
  return r;
}

std::size_t SymmetricGroup::rank(const Permutation& p) const {
  if (p.arity() != n_) throw std::invalid_argument("rank: arity mismatch");
  return rank_of(p.seq().data());
}

std::size_t SymmetricGroup::multiply(std::size_t a, std::size_t b) const {
  const auto& sa = elements_[a].seq();
  const auto& sb = elements_[b].seq();
  int t[kMaxGroupArity];
  for (int k = 0; k < n_; ++k) t[k] = sb[sa[k] - 1];
  return rank_of(t);
}

std::vector<std::uint32_t> SymmetricGroup::right_multiplication(std::size_t g) const {
  std::vector<std::uint32_t> target(order());
  for (std::size_t t = 0; t < order(); ++t) target[t] = static_cast<std::uint32_t>(multiply(t, g));
  return target;
}

std::vector<std::size_t> SymmetricGroup::generators() const {
  if (n_ <= 1) return {};
  std::vector<int> swap(n_), cycle(n_);
  std::iota(swap.begin(), swap.end(), 1);
  std::swap(swap[0], swap[1]);
  for (int i = 0; i < n_; ++i) cycle[i] = (i + 1) % n_ + 1;
  std::vector<std::size_t> g{rank_of(swap.data())};
  if (n_ > 2) g.push_back(rank_of(cycle.data()));
  return g;
}

}  // namespace uas
