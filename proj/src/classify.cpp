#include "uas/classify.hpp"

#include "uas/config.hpp"
#include "uas/truncation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

namespace uas {

namespace {

std::size_t order_of(int n) { return SymmetricGroup::get(n).order(); }

Subspace top_of(int k) { return truncation_kernel(k, k); }

// Rows of `outer` extending a basis of `inner` (which lies inside it).
std::vector<Vector> complement_rows(const Subspace& inner, const Subspace& outer) {
  std::vector<Vector> rows = inner.rows();
  std::vector<Vector> out;
  std::size_t rank = inner.dim();
  for (std::size_t j = 0; j < outer.dim() && rank < outer.dim(); ++j) {
    rows.push_back(outer.row(j));
    std::size_t r = rref(rows, outer.ambient_dim()).rank;
    if (r > rank) {
      rank = r;
      out.push_back(outer.row(j));
    } else {
      rows.pop_back();
    }
  }
  return out;
}

struct Slice {
  Partition lambda;
  int total = 0;     // multiplicity in U(m)(m)
  int reached = 0;   // multiplicity in the reach
  Subspace reach_space;
  std::vector<Vector> extra;  // completes reach_space to the full multiplicity space
};

std::vector<Slice> slices_of(const AdmissibleClass& c) {
  Subspace full = top_of(c.m);
  Decomposition whole = decompose_subspace(full, c.m);
  std::vector<Slice> out;
  for (const auto& [lambda, mult] : whole.multiplicity) {
    Slice s;
    s.lambda = lambda;
    s.total = mult;
    s.reached = c.reach_type.of(lambda);
    s.reach_space = multiplicity_space(c.reach, c.m, lambda);
    Subspace all = multiplicity_space(full, c.m, lambda);
    s.extra = complement_rows(s.reach_space, all);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<TopChoice> top_choices(int m, const Subspace& reach, const Decomposition& reach_type, bool type_one) {
  Decomposition whole = decompose_subspace(top_of(m), m);
  std::vector<std::pair<Partition, std::pair<int, int>>> ranges;
  for (const auto& [lambda, mult] : whole.multiplicity) ranges.push_back({lambda, {reach_type.of(lambda), mult}});
  std::vector<TopChoice> out;
  std::vector<int> pick(ranges.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == ranges.size()) {
      TopChoice t;
      t.type.n = m;
      bool full = true, zero = true;
      for (std::size_t k = 0; k < ranges.size(); ++k) {
        const auto& [lambda, range] = ranges[k];
        if (pick[k]) t.type.multiplicity[lambda] = pick[k];
        full = full && pick[k] == range.second;
        zero = zero && pick[k] == 0;
        if (pick[k] != range.first && pick[k] != range.second) t.unique = false;
      }
      if (full || (type_one && zero)) return;
      t.dimension = t.type.dimension();
      out.push_back(std::move(t));
      return;
    }
    for (int v = ranges[i].second.first; v <= ranges[i].second.second; ++v) {
      pick[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  (void)reach;
  return out;
}

Subspace reach_at(const std::vector<std::pair<int, Subspace>>& modules, int j) {
  IdealPresentation pres;
  for (const auto& [arity, m] : modules) {
    if (m.dim()) pres += IdealPresentation::module(arity, m);
  }
  return intersect(ideal_component(pres, j), top_of(j));
}

const std::vector<std::pair<Decomposition, Subspace>>& lattice_of(int j) {
  static std::map<int, std::vector<std::pair<Decomposition, Subspace>>> cache;
  static std::mutex guard;
  std::lock_guard lock(guard);
  auto it = cache.find(j);
  if (it != cache.end()) return it->second;
  auto e = enumerate_submodules(top_of(j), j);
  if (!e.multiplicity_free) {
    throw std::invalid_argument("admissible_classes: U(" + std::to_string(j) + ")(" + std::to_string(j) +
                                ") is not multiplicity free");
  }
  return cache.emplace(j, e.lattice).first->second;
}

}  // namespace

std::string type_label(const Decomposition& d) {
  std::string out;
  for (const auto& [lambda, mult] : d.multiplicity) {
    if (mult == 0) continue;
    if (!out.empty()) out += "+";
    if (mult > 1) out += std::to_string(mult);
    out += irreducible_label(lambda);
  }
  return out.empty() ? "0" : out;
}

std::string AdmissibleClass::prefix_label() const {
  std::string out;
  for (std::size_t i = 0; i < prefix_types.size(); ++i) {
    if (i) out += ", ";
    out += "M" + std::to_string(start + static_cast<int>(i)) + "=" + type_label(prefix_types[i]);
  }
  return out;
}

std::optional<std::size_t> AdmissibleClass::count() const {
  std::size_t n = 0;
  for (const auto& t : tops) {
    if (!t.unique) return std::nullopt;
    ++n;
  }
  return n;
}

std::vector<Subspace> AdmissibleClass::realize(const TopChoice& choice, int samples, std::uint64_t seed) const {
  const auto slices = slices_of(*this);
  // Options per slice: lists of extra vectors to adjoin to the reach slice.
  std::vector<std::vector<std::vector<Vector>>> canonical;
  for (const auto& s : slices) {
    const int add = choice.type.of(s.lambda) - s.reached;
    const int room = static_cast<int>(s.extra.size());
    std::vector<std::vector<Vector>> options;
    if (add == 0) {
      options.push_back({});
    } else {
      std::vector<int> pick(add);
      for (int i = 0; i < add; ++i) pick[i] = i;
      while (true) {
        std::vector<Vector> chosen;
        for (int i : pick) chosen.push_back(s.extra[i]);
        options.push_back(chosen);
        int k = add - 1;
        while (k >= 0 && pick[k] == room - add + k) --k;
        if (k < 0) break;
        ++pick[k];
        for (int j = k + 1; j < add; ++j) pick[j] = pick[j - 1] + 1;
      }
      if (add == 1 && room > 1) {
        Vector ones(s.extra[0].size());
        for (const auto& v : s.extra) {
          for (std::size_t t = 0; t < v.size(); ++t) ones[t] += v[t];
        }
        options.push_back({ones});
      }
    }
    canonical.push_back(std::move(options));
  }

  auto build = [&](const std::vector<std::vector<Vector>>& per_slice) {
    std::vector<IntVector> seeds;
    for (std::size_t j = 0; j < reach.dim(); ++j) seeds.push_back(reach.scaled_row(j));
    for (const auto& vs : per_slice) {
      for (const auto& v : vs) seeds.push_back(primitive_integer_vector(v));
    }
    Subspace out = seeds.empty() ? Subspace::zero(order_of(m)) : cyclic_span(m, seeds);
    if (Integer(out.dim()) != choice.dimension) throw std::logic_error("realize: unexpected dimension");
    return out;
  };

  std::vector<Subspace> out;
  std::vector<std::size_t> idx(canonical.size(), 0);
  while (true) {
    std::vector<std::vector<Vector>> pick;
    for (std::size_t i = 0; i < canonical.size(); ++i) pick.push_back(canonical[i][idx[i]]);
    out.push_back(build(pick));
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == canonical[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  if (!choice.unique && samples > 0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int sample = 0; sample < samples; ++sample) {
      std::vector<std::vector<Vector>> pick;
      for (const auto& s : slices) {
        const int add = choice.type.of(s.lambda) - s.reached;
        std::vector<Vector> chosen;
        for (int a = 0; a < add; ++a) {
          Vector v(s.extra.empty() ? 0 : s.extra[0].size());
          for (const auto& e : s.extra) {
            int c = coef(rng);
            for (std::size_t t = 0; t < v.size(); ++t) v[t] += c * e[t];
          }
          chosen.push_back(v);
        }
        pick.push_back(chosen);
      }
      try {
        out.push_back(build(pick));
      } catch (const std::logic_error&) {
        // a degenerate draw; skip it
      }
    }
  }
  return out;
}

AdmissibleSequence AdmissibleClass::sequence(const Subspace& top) const {
  AdmissibleSequence seq;
  seq.m = m;
  seq.modules = prefix;
  seq.modules.push_back(top);
  return seq;
}

std::vector<AdmissibleClass> admissible_classes(int m) {
  if (m < 1) throw std::invalid_argument("admissible_classes: m must be positive");
  require_window(m, "admissible_classes");
  std::vector<AdmissibleClass> out;
  const Subspace full_top = top_of(m);
  std::vector<std::pair<int, Subspace>> chosen;
  std::vector<Decomposition> chosen_types;
  auto finish = [&](int start) {
    AdmissibleClass c;
    c.m = m;
    c.start = start;
    for (const auto& [a, s] : chosen) c.prefix.push_back(s);
    c.prefix_types = chosen_types;
    c.reach = chosen.empty() ? Subspace::zero(order_of(m)) : reach_at(chosen, m);
    if (c.reach == full_top) return;
    c.reach_type = decompose_subspace(c.reach, m);
    c.tops = top_choices(m, c.reach, c.reach_type, chosen.empty());
    if (!c.tops.empty()) out.push_back(std::move(c));
  };
  auto extend = [&](auto&& self, int start, int j) -> void {
    if (j == m) {
      finish(start);
      return;
    }
    // A prefix whose reach already fills the top arity cannot be completed.
    if (!chosen.empty() && reach_at(chosen, m) == full_top) return;
    Subspace reach = chosen.empty() ? Subspace::zero(order_of(j)) : reach_at(chosen, j);
    for (const auto& [type, module] : lattice_of(j)) {
      if (chosen.empty() && module.dim() == 0) continue;
      if (!module.contains(reach)) continue;
      chosen.emplace_back(j, module);
      chosen_types.push_back(type);
      self(self, start, j + 1);
      chosen.pop_back();
      chosen_types.pop_back();
    }
  };
  for (int start = 1; start < m; ++start) {
    if (top_of(start).dim() == 0) continue;
    extend(extend, start, start);
  }
  finish(m);
  return out;
}

std::vector<ClassifiedIdeal> classify_gkdim(int d) {
  if (d < 1 || d > 5) throw std::invalid_argument("classify_gkdim: supported for 1 <= d <= 5");
  std::vector<ClassifiedIdeal> out;
  const int m = d - 1;
  {
    ClassifiedIdeal bare;
    bare.kind = "truncation";
    bare.label = "U(" + std::to_string(d) + ")";
    bare.ideal = ideal_window(IdealPresentation::truncation(d));
    bare.series = gamma_series_of_quotient(bare.ideal);
    if (bare.series.gkdim() == d) out.push_back(std::move(bare));
  }
  if (m < 1) return out;
  for (const auto& c : admissible_classes(m)) {
    for (const auto& t : c.tops) {
      if (!t.unique) throw std::logic_error("classify_gkdim: infinite family at GK dimension " + std::to_string(d));
      Subspace top = c.realize(t).front();
      ClassifiedIdeal ci;
      ci.sequence = c.sequence(top);
      if (c.type_one()) {
        ci.kind = "type I";
        ci.label = "GT1(" + std::to_string(m) + "; " + type_label(t.type) + ")";
        ci.ideal = gt_type1(m, top);
      } else {
        ci.kind = "type II";
        ci.label = "GT2(" + std::to_string(m) + "; " + c.prefix_label() + ", M" + std::to_string(m) + "=" +
                   type_label(t.type) + ")";
        ci.ideal = gt_general(ci.sequence);
      }
      ci.ideal.provenance = ci.label;
      ci.series = gamma_series_of_quotient(ci.ideal);
      if (ci.series.gkdim() != d) throw std::logic_error("classify_gkdim: " + ci.label + " has the wrong GK dimension");
      out.push_back(std::move(ci));
    }
  }
  return out;
}

GenDegree classified_gen_degree(const ClassifiedIdeal& c) { return gen_degree(c.ideal); }

std::vector<GammaSeries> series_of_gkdim(int d) {
  if (d < 1) return {};
  if (d > 6) throw std::invalid_argument("series_of_gkdim: supported for d <= 6");
  std::set<GammaSeries> out;
  auto base = [](int k) { return k == 0 ? Integer(1) : gamma(k); };
  {
    std::vector<Integer> g;
    for (int k = 0; k < d; ++k) g.push_back(base(k));
    GammaSeries s(g);
    if (s.gkdim() == d) out.insert(s);
  }
  const int m = d - 1;
  if (m >= 1) {
    for (const auto& c : admissible_classes(m)) {
      for (const auto& t : c.tops) {
        std::vector<Integer> g;
        for (int k = 0; k < d; ++k) g.push_back(base(k));
        for (std::size_t i = 0; i < c.prefix.size(); ++i) g[c.start + i] -= Integer(c.prefix[i].dim());
        g[m] -= t.dimension;
        out.insert(GammaSeries(g));
      }
    }
  }
  return {out.begin(), out.end()};
}

std::vector<PairRow> gkdim6_pair_table(int samples, std::uint64_t seed) {
  std::vector<PairRow> rows;
  for (const auto& c : admissible_classes(5)) {
    if (c.start != 4) continue;
    for (const auto& t : c.tops) {
      PairRow row;
      row.m4 = c.prefix_types.front();
      row.m5 = t.type;
      row.unique = t.unique;
      for (const auto& top : c.realize(t, samples, seed)) {
        IdealWindow w = gt_general(c.sequence(top));
        row.gen_degrees.insert(gen_degree(w).value);
        ++row.realizations;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace uas
