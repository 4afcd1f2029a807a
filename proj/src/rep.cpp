#include "uas/rep.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace uas {

namespace {

std::size_t order_of(int n) { return SymmetricGroup::get(n).order(); }

void check_ambient(const Subspace& w, int n) {
  if (w.ambient_dim() != order_of(n)) throw std::invalid_argument("subspace does not live in arity " + std::to_string(n));
}

void check_weight(const Partition& lambda, int n) {
  if (lambda.weight() != n) throw std::invalid_argument("partition " + lambda.str() + " is not a partition of " + std::to_string(n));
}

// Σ_k coefs[k] · (v * σ_k), where maps[k] is right multiplication by σ_k.
IntVector right_multiply(const IntVector& v, const std::vector<std::vector<std::uint32_t>>& maps,
                         const std::vector<Integer>& coefs) {
  IntVector out(v.size());
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (v[t] == 0) continue;
    for (std::size_t k = 0; k < maps.size(); ++k) out[maps[k][t]] += coefs[k] * v[t];
  }
  return out;
}

}  // namespace

int Decomposition::of(const Partition& lambda) const {
  auto it = multiplicity.find(lambda);
  return it == multiplicity.end() ? 0 : it->second;
}

Integer Decomposition::dimension() const {
  Integer total = 0;
  for (const auto& [lambda, m] : multiplicity) total += m * hook_dimension(lambda);
  return total;
}

bool Decomposition::multiplicity_free() const {
  return std::all_of(multiplicity.begin(), multiplicity.end(), [](const auto& kv) { return kv.second <= 1; });
}

CharacterVector Decomposition::character() const {
  CharacterVector chi = CharacterVector::zero(n);
  for (const auto& [lambda, m] : multiplicity) chi += Rational(m) * irreducible_character(lambda);
  return chi;
}

std::string Decomposition::str() const {
  if (multiplicity.empty()) return "0";
  std::string out;
  for (const auto& [lambda, m] : multiplicity) {
    if (!out.empty()) out += " + ";
    if (m != 1) out += std::to_string(m);
    out += "chi(" + lambda.label() + ")";
  }
  return out;
}

OperadElement group_algebra_product(const OperadElement& a, const OperadElement& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("group_algebra_product: arity mismatch");
  OperadElement out(a.arity());
  for (const auto& [p, c] : a.terms()) {
    for (const auto& [q, d] : b.terms()) out.add_term(p * q, c * d);
  }
  return out;
}

bool is_submodule(const Subspace& w, int n) {
  check_ambient(w, n);
  if (w.dim() == 0 || w.dim() == w.ambient_dim()) return true;
  for (const auto& map : symmetric_generator_maps(n)) {
    for (std::size_t j = 0; j < w.dim(); ++j) {
      if (!w.contains(map.apply(w.scaled_row(j)))) return false;
    }
  }
  return true;
}

void require_submodule(const Subspace& w, int n) {
  if (!is_submodule(w, n)) throw std::invalid_argument("subspace is not closed under the symmetric group action");
}

CharacterVector character_of_subspace(const Subspace& w, int n) {
  require_submodule(w, n);
  const auto& g = SymmetricGroup::get(n);
  const auto& classes = conjugacy_classes(n);
  CharacterVector chi = CharacterVector::zero(n);
  std::vector<std::int64_t> free_index(w.ambient_dim(), -1);
  for (std::size_t c = 0; c < w.free_columns().size(); ++c) free_index[w.free_columns()[c]] = static_cast<std::int64_t>(c);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    std::size_t inv = g.inverse(g.rank(classes[k].representative));
    // trace of θ ↦ θσ on W: coordinate j of row_j·σ is its entry at the pivot,
    // which comes from entry (pivot_j · σ⁻¹) of row_j.
    Rational trace = 0;
    for (std::size_t j = 0; j < w.dim(); ++j) {
      std::size_t col = g.multiply(w.pivots()[j], inv);
      if (col == w.pivots()[j]) {
        trace += 1;
      } else if (free_index[col] >= 0) {
        trace += w.block(j, static_cast<std::size_t>(free_index[col]));
      }
    }
    chi.values[k] = trace;
  }
  return chi;
}

Decomposition decompose(const CharacterVector& chi) {
  Decomposition d;
  d.n = chi.n;
  const auto& table = character_table(chi.n);
  const auto& parts = partitions(chi.n);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Rational m = character_inner_product(chi, table[i]);
    if (m.get_den() != 1 || m < 0) {
      throw std::invalid_argument("decompose: multiplicity of " + parts[i].str() + " is " + to_string(m));
    }
    if (m != 0) d.multiplicity[parts[i]] = static_cast<int>(m.get_num().get_si());
  }
  return d;
}

Decomposition decompose_subspace(const Subspace& w, int n) { return decompose(character_of_subspace(w, n)); }

OperadElement isotypic_projector(const Partition& lambda, int n) {
  check_weight(lambda, n);
  const auto& g = SymmetricGroup::get(n);
  OperadElement e(n);
  for (std::size_t r = 0; r < g.order(); ++r) {
    e.add_term(g.element(r), character_value(lambda, g.element(r).cycle_type()));
  }
  return e;
}

Subspace apply_right(const Subspace& w, int n, const OperadElement& g) {
  check_ambient(w, n);
  const auto& grp = SymmetricGroup::get(n);
  std::vector<std::vector<std::uint32_t>> maps;
  std::vector<Integer> coefs;
  Integer den = 1;
  for (const auto& [p, c] : g.terms()) den = lcm(den, Integer(c.get_den()));
  for (const auto& [p, c] : g.terms()) {
    maps.push_back(grp.right_multiplication(grp.rank(p)));
    coefs.push_back(Integer(c * den));
  }
  SpanBuilder builder(w.ambient_dim());
  for (std::size_t j = 0; j < w.dim(); ++j) builder.add(right_multiply(w.scaled_row(j), maps, coefs));
  return builder.certify();
}

const Subspace& isotypic_block(const Partition& lambda) {
  static std::mutex mutex;
  static std::map<Partition, Subspace> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(lambda);
  if (it != cache.end()) return it->second;
  int n = lambda.weight();
  Subspace block = cyclic_span(isotypic_projector(lambda, n));
  return cache.emplace(lambda, std::move(block)).first->second;
}

Subspace isotypic_component(const Subspace& w, int n, const Partition& lambda) {
  check_ambient(w, n);
  check_weight(lambda, n);
  return intersect(w, isotypic_block(lambda));
}

Subspace cyclic_span(int n, const std::vector<IntVector>& seeds) {
  return invariant_closure(order_of(n), seeds, symmetric_generator_maps(n));
}

Subspace cyclic_span(const OperadElement& v) {
  if (v.is_zero()) throw std::invalid_argument("cyclic_span: zero vector");
  return cyclic_span(v.arity(), {v.dense_integer()});
}

OperadElement component_generator(const Partition& lambda, const Subspace& w, int n) {
  int m = decompose_subspace(w, n).of(lambda);
  if (m != 1) {
    throw std::invalid_argument("component_generator: multiplicity of " + lambda.str() + " is " + std::to_string(m));
  }
  Subspace comp = isotypic_component(w, n, lambda);
  Vector v(comp.ambient_dim());
  IntVector row = comp.scaled_row(0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = row[i];
  return OperadElement::from_dense(n, v);
}

std::vector<std::vector<int>> row_reading_tableau(const Partition& lambda) {
  std::vector<std::vector<int>> t;
  int next = 1;
  for (int len : lambda.parts()) {
    t.emplace_back();
    for (int i = 0; i < len; ++i) t.back().push_back(next++);
  }
  return t;
}

OperadElement young_symmetrizer(const Partition& lambda) {
  const int n = lambda.weight();
  const auto& g = SymmetricGroup::get(n);
  auto tableau = row_reading_tableau(lambda);
  std::vector<int> row_of(n + 1), col_of(n + 1);
  for (std::size_t r = 0; r < tableau.size(); ++r) {
    for (std::size_t c = 0; c < tableau[r].size(); ++c) {
      row_of[tableau[r][c]] = static_cast<int>(r);
      col_of[tableau[r][c]] = static_cast<int>(c);
    }
  }
  OperadElement rows(n), cols(n);
  for (std::size_t r = 0; r < g.order(); ++r) {
    const auto& s = g.element(r).seq();
    bool keeps_rows = true, keeps_cols = true;
    for (int i = 1; i <= n; ++i) {
      keeps_rows = keeps_rows && row_of[s[i - 1]] == row_of[i];
      keeps_cols = keeps_cols && col_of[s[i - 1]] == col_of[i];
    }
    if (keeps_rows) rows.add_term(g.element(r), 1);
    if (keeps_cols) cols.add_term(g.element(r), g.sign(r));
  }
  return group_algebra_product(rows, cols);
}

Subspace multiplicity_space(const Subspace& w, int n, const Partition& lambda) {
  check_ambient(w, n);
  check_weight(lambda, n);
  // W·y_T only sees the λ-isotypic part of W.
  Subspace comp = isotypic_component(w, n, lambda);
  if (comp.dim() == 0) return Subspace::zero(w.ambient_dim());
  return apply_right(comp, n, young_symmetrizer(lambda));
}

Subspace submodule_from_multiplicity_subspace(const Subspace& u, int n) {
  check_ambient(u, n);
  std::vector<IntVector> seeds;
  for (std::size_t j = 0; j < u.dim(); ++j) seeds.push_back(u.scaled_row(j));
  return cyclic_span(n, seeds);
}

bool SubmoduleFamily::is_single() const {
  return std::all_of(parts.begin(), parts.end(), [](const FamilyPart& p) { return p.chosen == 0 || p.chosen == p.multiplicity; });
}

Integer SubmoduleFamily::dimension() const {
  Integer total = 0;
  for (const auto& p : parts) total += p.chosen * hook_dimension(p.lambda);
  return total;
}

Decomposition SubmoduleFamily::type() const {
  Decomposition d;
  d.n = n;
  for (const auto& p : parts) {
    if (p.chosen) d.multiplicity[p.lambda] = p.chosen;
  }
  return d;
}

Subspace SubmoduleFamily::realize(const Parameters& params) const {
  if (params.size() != parts.size()) throw std::invalid_argument("realize: one parameter list per part expected");
  std::vector<IntVector> seeds;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& part = parts[i];
    if (static_cast<int>(params[i].size()) != part.chosen) throw std::invalid_argument("realize: wrong number of vectors");
    for (const auto& coords : params[i]) {
      if (coords.size() != part.multiplicity_space.dim()) throw std::invalid_argument("realize: wrong coordinate count");
      Vector v(part.multiplicity_space.ambient_dim());
      for (std::size_t j = 0; j < coords.size(); ++j) {
        if (coords[j] == 0) continue;
        Vector row = part.multiplicity_space.row(j);
        for (std::size_t t = 0; t < v.size(); ++t) v[t] += coords[j] * row[t];
      }
      seeds.push_back(primitive_integer_vector(v));
    }
  }
  Subspace out = seeds.empty() ? Subspace::zero(order_of(n)) : cyclic_span(n, seeds);
  if (Integer(out.dim()) != dimension()) throw std::invalid_argument("realize: parameters are linearly dependent");
  return out;
}

std::vector<SubmoduleFamily::Parameters> SubmoduleFamily::canonical_parameters() const {
  std::vector<std::vector<std::vector<Vector>>> per_part;
  for (const auto& part : parts) {
    std::vector<std::vector<Vector>> options;
    const int m = part.multiplicity, d = part.chosen;
    auto axis = [m](int i) {
      Vector v(m);
      v[i] = 1;
      return v;
    };
    if (d == 0) {
      options.push_back({});
    } else {
      std::vector<int> pick(d);
      for (int i = 0; i < d; ++i) pick[i] = i;
      while (true) {
        std::vector<Vector> choice;
        for (int i : pick) choice.push_back(axis(i));
        options.push_back(choice);
        int k = d - 1;
        while (k >= 0 && pick[k] == m - d + k) --k;
        if (k < 0) break;
        ++pick[k];
        for (int j = k + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
      }
      if (d == 1 && m > 1) options.push_back({Vector(m, Rational(1))});
    }
    per_part.push_back(std::move(options));
  }
  std::vector<Parameters> out{Parameters{}};
  for (const auto& options : per_part) {
    std::vector<Parameters> next;
    for (const auto& prefix : out) {
      for (const auto& o : options) {
        Parameters p = prefix;
        p.push_back(o);
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  return out;
}

SubmoduleFamily::Parameters SubmoduleFamily::sample(std::mt19937_64& rng) const {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  Parameters params;
  for (const auto& part : parts) {
    std::vector<Vector> vecs;
    while (true) {
      vecs.assign(part.chosen, Vector(part.multiplicity));
      for (auto& v : vecs) {
        for (auto& x : v) {
          x = Rational(num(rng), den(rng));
          x.canonicalize();
        }
      }
      if (part.chosen == 0 || span(vecs, part.multiplicity).dim() == static_cast<std::size_t>(part.chosen)) break;
    }
    params.push_back(std::move(vecs));
  }
  return params;
}

std::string SubmoduleFamily::str() const {
  std::string fixed, fam;
  for (const auto& p : parts) {
    if (p.chosen == 0) continue;
    if (p.chosen == p.multiplicity) {
      if (!fixed.empty()) fixed += "+";
      if (p.chosen > 1) fixed += std::to_string(p.chosen) + "*";
      fixed += irreducible_label(p.lambda);
    } else {
      fam += " ; fam(" + p.lambda.label() + "):" + std::to_string(p.chosen) + "/" + std::to_string(p.multiplicity);
    }
  }
  if (fixed.empty()) fixed = fam.empty() ? "0" : "";
  return fam.empty() ? fixed : (fixed.empty() ? fam.substr(3) : fixed + fam);
}

std::size_t SubmoduleEnumeration::type_count() const {
  return multiplicity_free ? lattice.size() : families.size();
}

std::set<Integer> SubmoduleEnumeration::achievable_dimensions() const {
  std::set<Integer> out;
  for (const auto& d : submodule_types(decomposition)) out.insert(d.dimension());
  return out;
}

std::vector<Decomposition> submodule_types(const Decomposition& d) {
  std::vector<std::pair<Partition, int>> entries(d.multiplicity.begin(), d.multiplicity.end());
  std::vector<Decomposition> out;
  std::vector<int> choice(entries.size(), 0);
  while (true) {
    Decomposition t;
    t.n = d.n;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (choice[i]) t.multiplicity[entries[i].first] = choice[i];
    }
    out.push_back(std::move(t));
    std::size_t k = entries.size();
    while (k > 0 && choice[k - 1] == entries[k - 1].second) choice[--k] = 0;
    if (k == 0) break;
    ++choice[k - 1];
  }
  return out;
}

SubmoduleEnumeration enumerate_submodules(const Subspace& w, int n) {
  SubmoduleEnumeration e;
  e.decomposition = decompose_subspace(w, n);
  e.multiplicity_free = e.decomposition.multiplicity_free();
  std::map<Partition, Subspace> components;
  for (const auto& [lambda, m] : e.decomposition.multiplicity) components[lambda] = isotypic_component(w, n, lambda);
  if (e.multiplicity_free) {
    for (const auto& t : submodule_types(e.decomposition)) {
      Subspace s = Subspace::zero(w.ambient_dim());
      for (const auto& [lambda, m] : t.multiplicity) s = sum(s, components[lambda]);
      e.lattice.emplace_back(t, std::move(s));
    }
    return e;
  }
  std::vector<FamilyPart> base;
  for (const auto& [lambda, m] : e.decomposition.multiplicity) {
    base.push_back({lambda, m, 0, m == 1 ? Subspace() : multiplicity_space(w, n, lambda)});
  }
  for (const auto& t : submodule_types(e.decomposition)) {
    SubmoduleFamily fam;
    fam.n = n;
    fam.parts = base;
    for (auto& p : fam.parts) {
      p.chosen = t.of(p.lambda);
      if (p.multiplicity == 1 && p.chosen == 1) p.multiplicity_space = multiplicity_space(w, n, p.lambda);
    }
    e.families.push_back(std::move(fam));
  }
  return e;
}

std::vector<Partition> parse_irreducible_labels(std::string_view text) {
  std::vector<Partition> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  while (true) {
    skip();
    if (text.substr(i, 2) != "V[") throw std::invalid_argument("expected V[...] at column " + std::to_string(i + 1));
    i += 2;
    auto close = text.find(']', i);
    if (close == std::string_view::npos) throw std::invalid_argument("unterminated label at column " + std::to_string(i + 1));
    out.push_back(Partition::parse(text.substr(i, close - i)));
    i = close + 1;
    skip();
    if (i == text.size()) break;
    if (text[i] != '+') throw std::invalid_argument("expected '+' at column " + std::to_string(i + 1));
    ++i;
  }
  return out;
}

std::string irreducible_label(const Partition& lambda) { return "V[" + lambda.label() + "]"; }

Subspace components_by_label(const Subspace& w, int n, const std::vector<Partition>& labels) {
  Subspace s = Subspace::zero(w.ambient_dim());
  for (const auto& lambda : labels) s = sum(s, isotypic_component(w, n, lambda));
  return s;
}

}  // namespace uas
