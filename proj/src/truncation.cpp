#include "uas/truncation.hpp"

#include "uas/config.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace uas {

namespace {

void for_each_subset(int n, int size, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> subset;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(subset.size()) == size) {
      fn(subset);
      return;
    }
    for (int x = next; x <= n - (size - static_cast<int>(subset.size())) + 1; ++x) {
      subset.push_back(x);
      self(self, x + 1);
      subset.pop_back();
    }
  };
  rec(rec, 1);
}

void compositions(int remaining, int min_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = min_part; part <= remaining; ++part) {
    if (remaining - part != 0 && remaining - part < part) continue;
    cur.push_back(part);
    compositions(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

namespace {

Subspace compute_truncation_kernel(int k, int n) {
  const auto& g = SymmetricGroup::get(n);
  if (k == 0) return Subspace::full(g.order());
  if (n < k) return Subspace::zero(g.order());
  // Each restriction is a BasisMap; its coordinate functionals are the
  // indicator vectors of its fibres.
  std::vector<IntVector> functionals;
  for_each_subset(n, k - 1, [&](const std::vector<int>& subset) {
    BasisMap m = restriction_map(n, subset);
    std::vector<IntVector> fibres(m.target_dim, IntVector(m.source_dim));
    for (std::size_t s = 0; s < m.source_dim; ++s) fibres[m.target[s]][s] = 1;
    for (auto& f : fibres) functionals.push_back(std::move(f));
  });
  return span(functionals, g.order()).annihilator();
}

}  // namespace

Subspace truncation_kernel(int k, int n) {
  if (k < 0 || n < 0) throw std::invalid_argument("truncation_kernel: negative argument");
  require_window(n, "truncation_kernel");
  static std::mutex mutex;
  static std::map<std::pair<int, int>, Subspace> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({k, n});
    if (it != cache.end()) return it->second;
  }
  Subspace result = compute_truncation_kernel(k, n);
  std::lock_guard lock(mutex);
  return cache.emplace(std::make_pair(k, n), std::move(result)).first->second;
}

Integer gamma(int n) {
  if (n < 0) throw std::invalid_argument("gamma: negative index");
  Integer total = 0;
  for (int s = 0; s <= n; ++s) {
    Integer term = factorial(s) * binomial(n, s);
    if ((n - s) % 2) total -= term;
    else total += term;
  }
  return total;
}

Integer truncation_dim(int k, int n) {
  if (k < 1) throw std::invalid_argument("truncation_dim: k must be at least 1");
  if (n < k) return 0;
  Integer total = 0;
  for (int i = k; i <= n; ++i) total += binomial(n, i) * gamma(i);
  return total;
}

std::vector<std::vector<int>> SpechtIndex::blocks() const {
  std::vector<std::vector<int>> out;
  std::size_t pos = 0;
  for (int len : composition) {
    out.emplace_back(sigma.seq().begin() + pos, sigma.seq().begin() + pos + len);
    pos += len;
  }
  return out;
}

std::string SpechtIndex::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < composition.size(); ++i) out += (i ? "," : "") + std::to_string(composition[i]);
  return out + "]*" + sigma.str();
}

bool is_valid_specht_index(const std::vector<int>& composition, const Permutation& sigma) {
  int total = 0;
  for (std::size_t i = 0; i < composition.size(); ++i) {
    if (composition[i] < 2) return false;
    if (i && composition[i] < composition[i - 1]) return false;
    total += composition[i];
  }
  if (total != sigma.arity()) return false;
  const auto& s = sigma.seq();
  std::size_t pos = 0;
  int prev_head = 0, prev_len = 0;
  for (int len : composition) {
    int head = s[pos];
    for (int j = 1; j < len; ++j) {
      if (s[pos + j] > head) return false;
    }
    if (len == prev_len && head < prev_head) return false;
    prev_head = head;
    prev_len = len;
    pos += len;
  }
  return true;
}

std::vector<SpechtIndex> specht_indices(int n) {
  require_window(n, "specht_indices");
  std::vector<std::vector<int>> comps;
  std::vector<int> cur;
  if (n >= 2) compositions(n, 2, cur, comps);
  std::sort(comps.begin(), comps.end());
  const auto& g = SymmetricGroup::get(n);
  std::vector<SpechtIndex> out;
  for (const auto& c : comps) {
    for (std::size_t r = 0; r < g.order(); ++r) {
      if (is_valid_specht_index(c, g.element(r))) out.push_back({c, g.element(r)});
    }
  }
  return out;
}

OperadElement specht_element(const SpechtIndex& index) {
  if (!is_valid_specht_index(index.composition, index.sigma)) {
    throw std::invalid_argument("specht_element: invalid index " + index.str());
  }
  return act(tau_composite(index.composition), index.sigma);
}

std::vector<std::pair<SpechtIndex, OperadElement>> specht_basis(int n) {
  std::vector<std::pair<SpechtIndex, OperadElement>> out;
  for (auto& idx : specht_indices(n)) {
    auto e = specht_element(idx);
    out.emplace_back(std::move(idx), std::move(e));
  }
  return out;
}

std::vector<IntVector> dense_rows(const std::vector<OperadElement>& elements) {
  std::vector<IntVector> rows;
  rows.reserve(elements.size());
  for (const auto& e : elements) rows.push_back(e.dense_integer());
  return rows;
}

Subspace span_of(int n, const std::vector<OperadElement>& elements) {
  for (const auto& e : elements) {
    if (e.arity() != n) throw std::invalid_argument("span_of: arity mismatch");
  }
  return span(dense_rows(elements), SymmetricGroup::get(n).order());
}

Subspace lie_component(int n) {
  if (n < 1) throw std::invalid_argument("lie_component: n must be positive");
  require_window(n, "lie_component");
  if (n == 1) return Subspace::full(1);
  return specht_filtration(n, n);
}

Subspace specht_filtration(int n, int t) {
  if (t < 2 || t > n) throw std::invalid_argument("specht_filtration: need 2 <= t <= n");
  std::vector<OperadElement> elements;
  for (auto& [idx, e] : specht_basis(n)) {
    if (idx.longest_block() >= t) elements.push_back(std::move(e));
  }
  return span_of(n, elements);
}

std::vector<OperadElement> top_basis(int k) {
  if (k < 0) throw std::invalid_argument("top_basis: negative arity");
  if (k == 0) return {OperadElement::unit(0)};
  std::vector<OperadElement> out;
  for (auto& [idx, e] : specht_basis(k)) out.push_back(std::move(e));
  return out;
}

std::vector<OperadElement> basis_theorem_sets(int k, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("basis_theorem_sets: need 0 <= k <= n");
  require_window(n, "basis_theorem_sets");
  std::vector<OperadElement> out;
  auto top = top_basis(k);
  if (top.empty()) return out;
  std::vector<OperadElement> padded;
  for (const auto& theta : top) padded.push_back(iota(0, n - k, theta));
  for_each_subset(n, n - k, [&](const std::vector<int>& subset) {
    Permutation c = c_permutation(subset, n);
    for (const auto& p : padded) out.push_back(act(p, c));
  });
  return out;
}

}  // namespace uas
