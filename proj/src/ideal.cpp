#include "uas/ideal.hpp"

#include "uas/config.hpp"
#include "uas/rep.hpp"
#include "uas/truncation.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

namespace uas {

namespace {

std::size_t order_of(int n) { return SymmetricGroup::get(n).order(); }

// All (b_1..b_m) with b_j ≥ 0 summing to total.
void for_each_block_vector(int m, int total, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> b(m, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == m - 1) {
      b[i] = left;
      fn(b);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      b[i] = v;
      self(self, i + 1, left - v);
    }
  };
  if (m == 0) {
    if (total == 0) fn(b);
    return;
  }
  rec(rec, 0, total);
}

// Seeds whose symmetric closure is ⟨g⟩(n): the composites
// 1_2 ∘ (g ∘ (1_{b_1},…,1_{b_m}), 1_r). Left padding is not needed because
// ι_r^l(θ) is a right translate of ι_{l+r}^0(θ).
std::vector<IntVector> composite_seeds(const OperadElement& g, int n) {
  const int m = g.arity();
  IntVector dense = g.dense_integer();
  std::vector<IntVector> seeds;
  for (int r = 0; r <= n; ++r) {
    for_each_block_vector(m, n - r, [&](const std::vector<int>& blocks) {
      IntVector v = composite_map(m, 0, r, blocks).apply(dense);
      if (std::any_of(v.begin(), v.end(), [](const Integer& x) { return x != 0; })) seeds.push_back(std::move(v));
    });
  }
  return seeds;
}

std::vector<IntVector> tail_seeds(int tail, int n) {
  std::vector<IntVector> seeds;
  if (tail > n) return seeds;
  Subspace kernel = truncation_kernel(tail, n);
  for (std::size_t j = 0; j < kernel.dim(); ++j) seeds.push_back(kernel.scaled_row(j));
  return seeds;
}

std::vector<OperadElement> element_generators(const IdealPresentation& pres) {
  std::vector<OperadElement> gens = pres.elements;
  for (const auto& [arity, m] : pres.modules) {
    if (m.dim() == 0) continue;
    gens.push_back(cyclic_generator(m, arity));
  }
  return gens;
}

std::vector<IntVector> presentation_seeds(const IdealPresentation& pres, int n) {
  std::vector<IntVector> seeds;
  for (const auto& g : element_generators(pres)) {
    auto s = composite_seeds(g, n);
    seeds.insert(seeds.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
  }
  if (pres.tail && *pres.tail <= n) {
    auto s = tail_seeds(*pres.tail, n);
    seeds.insert(seeds.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
  }
  return seeds;
}

struct MoveMaps {
  std::vector<BasisMap> symmetric;
  std::vector<BasisMap> down;  // to arity n−1
  std::vector<BasisMap> up;    // to arity n+1
};

const MoveMaps& move_maps(int n, bool with_up) {
  static std::mutex mutex;
  static std::map<std::pair<int, bool>, MoveMaps> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(n, with_up);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  MoveMaps m;
  m.symmetric = symmetric_generator_maps(n);
  for (int slot = 1; slot <= n; ++slot) m.down.push_back(unit_deletion_map(n, slot));
  if (with_up) {
    for (int slot = 1; slot <= n; ++slot) m.up.push_back(unit_doubling_map(n, slot));
    m.up.push_back(left_product_map(n));
    m.up.push_back(right_product_map(n));
  }
  return cache.emplace(key, std::move(m)).first->second;
}

}  // namespace

IdealPresentation IdealPresentation::truncation(int k) {
  if (k < 0) throw std::invalid_argument("truncation: negative index");
  IdealPresentation p;
  p.tail = k;
  p.label = "U(" + std::to_string(k) + ")";
  return p;
}

IdealPresentation IdealPresentation::element(const OperadElement& g) {
  IdealPresentation p;
  if (!g.is_zero()) p.elements.push_back(g);
  p.label = "<" + g.str() + ">";
  return p;
}

IdealPresentation IdealPresentation::module(int arity, const Subspace& m) {
  if (m.ambient_dim() != order_of(arity)) throw std::invalid_argument("module generator: ambient dimension mismatch");
  require_submodule(m, arity);
  IdealPresentation p;
  if (m.dim()) p.modules.emplace_back(arity, m);
  p.label = "<module of dim " + std::to_string(m.dim()) + " at arity " + std::to_string(arity) + ">";
  return p;
}

IdealPresentation& IdealPresentation::operator+=(const IdealPresentation& o) {
  elements.insert(elements.end(), o.elements.begin(), o.elements.end());
  modules.insert(modules.end(), o.modules.begin(), o.modules.end());
  if (o.tail) tail = tail ? std::min(*tail, *o.tail) : *o.tail;
  label = label.empty() ? o.label : (o.label.empty() ? label : label + " + " + o.label);
  return *this;
}

int IdealPresentation::max_generator_arity() const {
  int a = -1;
  for (const auto& e : elements) a = std::max(a, e.arity());
  for (const auto& [arity, m] : modules) a = std::max(a, arity);
  return a;
}

const Subspace& IdealWindow::at(int n) const {
  if (n < 0 || n > window) throw WindowExceeded("ideal component " + std::to_string(n) + " outside window");
  return components[n];
}

Subspace IdealWindow::top(int k) const {
  if (k <= window) return intersect(at(k), truncation_kernel(k, k));
  if (tail && *tail <= k) return truncation_kernel(k, k);
  throw WindowExceeded("top component at arity " + std::to_string(k) + " is outside the window");
}

bool IdealWindow::is_zero() const {
  if (tail) return false;
  return std::all_of(components.begin(), components.end(), [](const Subspace& s) { return s.dim() == 0; });
}

Subspace ideal_component(const IdealPresentation& pres, int n) {
  require_window(n, "ideal_component");
  if (pres.max_generator_arity() > window_bound()) throw WindowExceeded("generator arity exceeds the window");
  const std::size_t ambient = order_of(n);
  const bool tail_here = pres.tail && *pres.tail <= n;
  if (tail_here && pres.elements.empty() && pres.modules.empty()) return truncation_kernel(*pres.tail, n);
  auto seeds = presentation_seeds(pres, n);
  if (seeds.empty()) return Subspace::zero(ambient);
  return invariant_closure(ambient, seeds, symmetric_generator_maps(n));
}

bool ideal_component_reaches(const IdealPresentation& pres, int n, std::size_t target) {
  require_window(n, "ideal_component");
  auto seeds = presentation_seeds(pres, n);
  if (seeds.empty()) return target == 0;
  return invariant_closure_rank(order_of(n), seeds, symmetric_generator_maps(n)) >= target;
}

IdealWindow ideal_window(const IdealPresentation& pres, int window) {
  if (window < 0) window = window_bound();
  require_window(window, "ideal_window");
  IdealWindow w;
  w.window = window;
  w.tail = pres.tail;
  w.provenance = pres.label;
  for (int n = 0; n <= window; ++n) w.components.push_back(ideal_component(pres, n));
  return w;
}

FixpointResult closure_fixpoint_oracle(const IdealPresentation& pres, int w, int headroom) {
  if (w < 0 || headroom < 0) throw std::invalid_argument("closure_fixpoint_oracle: negative window");
  const int top = w + headroom;
  if (top > window_bound()) {
    throw WindowExceeded("fixpoint oracle: arity " + std::to_string(top) + " exceeds capacity " +
                         std::to_string(window_bound()));
  }
  if (pres.max_generator_arity() > top) {
    throw WindowExceeded("fixpoint oracle: generator arity above w + headroom");
  }

  auto run = [&](int cap, unsigned slot) {
    std::vector<SpanBuilder> comp;
    for (int n = 0; n <= cap; ++n) comp.emplace_back(order_of(n), slot);
    std::deque<std::pair<int, std::size_t>> queue;
    auto push = [&](int n, IntVector v) {
      if (comp[n].add(std::move(v))) queue.emplace_back(n, comp[n].rank() - 1);
    };
    for (const auto& g : pres.elements) push(g.arity(), g.dense_integer());
    for (const auto& [arity, m] : pres.modules) {
      for (std::size_t j = 0; j < m.dim(); ++j) push(arity, m.scaled_row(j));
    }
    if (pres.tail) {
      for (int n = *pres.tail; n <= cap; ++n) {
        for (auto& v : tail_seeds(*pres.tail, n)) push(n, std::move(v));
      }
    }
    while (!queue.empty()) {
      auto [n, i] = queue.front();
      queue.pop_front();
      const auto& maps = move_maps(n, n < cap);
      auto try_map = [&](int target, const BasisMap& map) {
        if (comp[target].add_image(comp[n], i, map)) queue.emplace_back(target, comp[target].rank() - 1);
      };
      for (const auto& m : maps.symmetric) try_map(n, m);
      if (n > 0) {
        for (const auto& m : maps.down) try_map(n - 1, m);
      }
      if (n < cap) {
        for (const auto& m : maps.up) try_map(n + 1, m);
      }
    }
    std::vector<Subspace> exact;
    for (int n = 0; n <= cap; ++n) exact.push_back(comp[n].certify());
    return exact;
  };

  // The modular run decides closure mod p; confirm every move exactly.
  auto verified = [&](const std::vector<Subspace>& comps, int cap) {
    for (int n = 0; n <= cap; ++n) {
      const auto& maps = move_maps(n, n < cap);
      for (std::size_t j = 0; j < comps[n].dim(); ++j) {
        IntVector row = comps[n].scaled_row(j);
        for (const auto& m : maps.symmetric) {
          if (!comps[n].contains(m.apply(row))) return false;
        }
        if (n > 0) {
          for (const auto& m : maps.down) {
            if (!comps[n - 1].contains(m.apply(row))) return false;
          }
        }
        if (n < cap) {
          for (const auto& m : maps.up) {
            if (!comps[n + 1].contains(m.apply(row))) return false;
          }
        }
      }
    }
    return true;
  };

  auto solve = [&](int cap) {
    for (unsigned slot = 0; slot < 8; ++slot) {
      auto comps = run(cap, slot);
      if (verified(comps, cap)) return comps;
    }
    throw std::runtime_error("fixpoint oracle: closure could not be verified");
  };

  FixpointResult result;
  auto comps = solve(top);
  result.ideal.window = w;
  result.ideal.tail = pres.tail;
  result.ideal.provenance = "fixpoint(" + pres.label + ")";
  result.ideal.components.assign(comps.begin(), comps.begin() + w + 1);
  if (top + 1 <= window_bound()) {
    auto wider = solve(top + 1);
    result.stability_checked = true;
    result.stable = std::equal(comps.begin(), comps.begin() + w + 1, wider.begin());
    result.note = result.stable ? "stable with one more arity of headroom" : "components changed with more headroom";
  } else {
    result.note = "stability not checked: capacity reached";
  }
  return result;
}

int mdeg(const IdealWindow& ideal) {
  int found = -1;
  for (int n = 0; n <= ideal.window; ++n) {
    if (ideal.at(n).dim()) {
      found = n;
      break;
    }
  }
  if (found < 0) {
    if (ideal.tail) return std::max(*ideal.tail, 2);
    throw std::invalid_argument("mdeg: zero ideal within the window");
  }
  // The least nonzero component lies in the top part, and the ideal sits inside U(found).
  if (ideal.top(found).dim() == 0) throw std::logic_error("mdeg: least component is not in the top part");
  for (int n = 0; n <= ideal.window; ++n) {
    if (!truncation_kernel(found, n).contains(ideal.at(n))) throw std::logic_error("mdeg: ideal escapes U(mdeg)");
  }
  return found;
}

int generating_degree_bound(int gkdim) { return gkdim % 2 ? gkdim + 1 : gkdim; }

GenDegree gen_degree(const IdealWindow& ideal, int bound) {
  if (bound > ideal.window) throw WindowExceeded("gen_degree: bound exceeds the window");
  GenDegree out;
  out.bound = bound;
  const int start = mdeg(ideal);
  const std::size_t target = ideal.at(bound).dim();
  for (int n = start; n <= bound; ++n) {
    auto pres = IdealPresentation::module(n, ideal.at(n));
    bool equal = ideal_component_reaches(pres, bound, target) || ideal_component(pres, bound).dim() == target;
    if (equal) {
      out.value = n;
      out.note = "<I(" + std::to_string(n) + ")>(" + std::to_string(bound) + ") = I(" + std::to_string(bound) + ")";
      return out;
    }
  }
  throw std::logic_error("gen_degree: I(" + std::to_string(bound) + ") is not generated below the bound");
}

GenDegree gen_degree(const IdealWindow& ideal) {
  int d = gkdim_quotient(ideal);
  int b = std::max(generating_degree_bound(d), mdeg(ideal));
  GenDegree g = gen_degree(ideal, b);
  g.note += "; bound from gkdim " + std::to_string(d);
  return g;
}

bool generates(const OperadElement& theta, const IdealWindow& ideal) {
  if (theta.arity() > ideal.window) return false;
  if (!ideal.at(theta.arity()).contains(theta.dense())) return false;
  auto pres = IdealPresentation::element(theta);
  for (int k = 0; k <= ideal.window; ++k) {
    std::size_t target = ideal.at(k).dim();
    if (ideal_component_reaches(pres, k, target)) continue;
    if (ideal_component(pres, k).dim() != target) return false;
  }
  return true;
}

OperadElement cyclic_generator(const Subspace& m, int n, std::uint64_t seed) {
  if (m.ambient_dim() != order_of(n)) throw std::invalid_argument("cyclic_generator: ambient mismatch");
  if (m.dim() == 0) throw std::invalid_argument("cyclic_generator: zero module");
  const auto maps = symmetric_generator_maps(n);
  std::vector<IntVector> rows;
  for (std::size_t j = 0; j < m.dim(); ++j) rows.push_back(m.scaled_row(j));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int attempt = 0; attempt < 64; ++attempt) {
    IntVector v(m.ambient_dim());
    for (const auto& r : rows) {
      int c = coef(rng);
      if (c == 0) continue;
      for (std::size_t t = 0; t < v.size(); ++t) {
        if (r[t] != 0) v[t] += c * r[t];
      }
    }
    if (std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; })) continue;
    if (invariant_closure_rank(m.ambient_dim(), {v}, maps) < m.dim()) continue;
    Vector q(v.begin(), v.end());
    return OperadElement::from_dense(n, q);
  }
  throw std::runtime_error("cyclic_generator: no cyclic vector found");
}

OperadElement single_generator(const IdealWindow& ideal, int m) {
  if (m < 1 || m > ideal.window) throw WindowExceeded("single_generator: arity outside the window");
  OperadElement zeta(m);
  for (int k = 1; k <= m; ++k) {
    Subspace t = ideal.top(k);
    if (t.dim() == 0) continue;
    zeta += iota(0, m - k, cyclic_generator(t, k));
  }
  auto pres = IdealPresentation::element(zeta);
  for (int k = 0; k <= m; ++k) {
    if (!ideal_component_reaches(pres, k, ideal.at(k).dim()) && ideal_component(pres, k) != ideal.at(k)) {
      throw std::logic_error("single_generator: components below the arity are not recovered");
    }
  }
  return zeta;
}

Subspace gt_type1_pointwise(int m, const Subspace& module, int n) {
  require_window(n, "gt_type1");
  const std::size_t ambient = order_of(n);
  if (n < m) return Subspace::zero(ambient);
  Subspace ann = module.annihilator();
  std::vector<IntVector> functionals;
  // membership in U(m): vanishing restrictions to (m−1)-subsets
  auto add_pullbacks = [&](int size, const std::vector<IntVector>& covectors) {
    std::vector<int> subset;
    auto rec = [&](auto&& self, int next) -> void {
      if (static_cast<int>(subset.size()) == size) {
        BasisMap map = restriction_map(n, subset);
        for (const auto& a : covectors) {
          IntVector f(ambient);
          bool nonzero = false;
          for (std::size_t s = 0; s < ambient; ++s) {
            f[s] = a[map.target[s]];
            nonzero = nonzero || f[s] != 0;
          }
          if (nonzero) functionals.push_back(std::move(f));
        }
        return;
      }
      for (int x = next; x <= n; ++x) {
        subset.push_back(x);
        self(self, x + 1);
        subset.pop_back();
      }
    };
    rec(rec, 1);
  };
  if (m >= 1) {
    std::vector<IntVector> coords;
    const std::size_t small = order_of(m - 1);
    for (std::size_t i = 0; i < small; ++i) {
      IntVector e(small);
      e[i] = 1;
      coords.push_back(std::move(e));
    }
    add_pullbacks(m - 1, coords);
  }
  std::vector<IntVector> ann_rows;
  for (std::size_t j = 0; j < ann.dim(); ++j) ann_rows.push_back(ann.scaled_row(j));
  add_pullbacks(m, ann_rows);
  if (functionals.empty()) return Subspace::full(ambient);
  return span(functionals, ambient).annihilator();
}

IdealWindow gt_type1(int m, const Subspace& module) {
  if (m < 1) throw std::invalid_argument("gt_type1: m must be positive");
  require_submodule(module, m);
  if (!truncation_kernel(m, m).contains(module)) throw std::invalid_argument("gt_type1: module is not inside U(m)(m)");
  auto pres = IdealPresentation::module(m, module) + IdealPresentation::truncation(m + 1);
  IdealWindow w;
  w.window = window_bound();
  w.tail = m + 1;
  w.provenance = "GT1(" + std::to_string(m) + "; dim " + std::to_string(module.dim()) + ")";
  for (int n = 0; n <= w.window; ++n) {
    Subspace pointwise = gt_type1_pointwise(m, module, n);
    Subspace generated = ideal_component(pres, n);
    if (!(pointwise == generated)) {
      throw std::logic_error("gt_type1: the two constructions disagree at arity " + std::to_string(n));
    }
    w.components.push_back(std::move(pointwise));
  }
  return w;
}

AdmissibleReport admissible_check(const AdmissibleSequence& seq) {
  AdmissibleReport r;
  if (seq.modules.empty()) {
    r.message = "empty sequence";
    return r;
  }
  const int start = seq.start();
  if (start < 1) {
    r.message = "sequence starts below arity 1";
    return r;
  }
  for (int j = start; j <= seq.m; ++j) {
    const Subspace& mj = seq.at(j);
    if (mj.ambient_dim() != order_of(j) || !is_submodule(mj, j) || !truncation_kernel(j, j).contains(mj)) {
      r.failing_arity = j;
      r.message = "M_" + std::to_string(j) + " is not a submodule of U(" + std::to_string(j) + ")(" + std::to_string(j) + ")";
      return r;
    }
  }
  if (seq.at(start).dim() == 0) {
    r.failing_arity = start;
    r.message = "first module is zero";
    return r;
  }
  if (seq.at(seq.m) == truncation_kernel(seq.m, seq.m)) {
    r.failing_arity = seq.m;
    r.message = "last module is all of U(m)(m)";
    return r;
  }
  IdealPresentation below;
  for (int j = start + 1; j <= seq.m; ++j) {
    const Subspace& prev = seq.at(j - 1);
    if (prev.dim()) below += IdealPresentation::module(j - 1, prev);
    Subspace reach = intersect(ideal_component(below, j), truncation_kernel(j, j));
    if (!seq.at(j).contains(reach)) {
      r.failing_arity = j;
      r.message = "containment fails at arity " + std::to_string(j);
      return r;
    }
  }
  r.admissible = true;
  r.message = "admissible";
  return r;
}

IdealPresentation gt_presentation(const AdmissibleSequence& seq) {
  IdealPresentation pres;
  for (int j = seq.start(); j <= seq.m; ++j) {
    if (seq.at(j).dim()) pres += IdealPresentation::module(j, seq.at(j));
  }
  pres += IdealPresentation::truncation(seq.m + 1);
  return pres;
}

IdealWindow gt_general(const AdmissibleSequence& seq) {
  auto report = admissible_check(seq);
  if (!report.admissible) throw std::invalid_argument("gt_general: " + report.message);
  IdealWindow w = ideal_window(gt_presentation(seq));
  w.provenance = "GT(" + std::to_string(seq.m) + "; depth " + std::to_string(seq.depth()) + ")";
  for (int j = seq.start(); j <= seq.m && j <= w.window; ++j) {
    if (!(w.top(j) == seq.at(j))) throw std::logic_error("gt_general: top part differs from M_" + std::to_string(j));
  }
  return w;
}

int gkdim_quotient(const IdealWindow& ideal) {
  if (!ideal.tail) throw std::invalid_argument("gkdim_quotient: the ideal has no certified tail");
  const int tail = *ideal.tail;
  if (tail - 1 > ideal.window) throw WindowExceeded("gkdim_quotient: tail beyond the window");
  int d = 0;
  for (int k = 0; k < tail; ++k) {
    Integer full = k == 0 ? Integer(1) : gamma(k);
    if (Integer(ideal.top(k).dim()) != full) d = k + 1;
  }
  return d;
}

bool contains_ideal(const IdealWindow& big, const IdealWindow& small) {
  if (big.window != small.window) throw std::invalid_argument("contains_ideal: incomparable windows");
  for (int n = 0; n <= big.window; ++n) {
    if (!big.at(n).contains(small.at(n))) return false;
  }
  // Past the window, containment of ideals is containment of the tops.
  if (big.tail && *big.tail <= big.window + 1) return true;
  if (small.tail && *small.tail <= small.window + 1) {
    throw std::invalid_argument("contains_ideal: cannot decide past the window");
  }
  throw std::invalid_argument("contains_ideal: neither ideal is determined past the window");
}

bool maximal_wrt_gkdim(const IdealWindow& ideal, const std::vector<IdealWindow>& candidates) {
  const int d = gkdim_quotient(ideal);
  for (const auto& c : candidates) {
    if (gkdim_quotient(c) != d) continue;
    if (contains_ideal(c, ideal) && !contains_ideal(ideal, c)) return false;
  }
  return true;
}

Integer dimension_from_tops(const IdealWindow& ideal, int n) {
  Integer total = 0;
  for (int k = 0; k <= n; ++k) total += Integer(ideal.top(k).dim()) * binomial(n, k);
  return total;
}

}  // namespace uas
