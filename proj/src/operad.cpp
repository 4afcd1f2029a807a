#include "uas/operad.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace uas {

namespace {

using Word = std::vector<int>;

void check_subset(const std::vector<int>& subset, int n) {
  std::vector<bool> seen(n + 1, false);
  for (int i : subset) {
    if (i < 1 || i > n || seen[i]) throw std::invalid_argument("subset is not inside [n]");
    seen[i] = true;
  }
}

std::vector<bool> membership(const std::vector<int>& subset, int n) {
  std::vector<bool> in(n + 1, false);
  for (int i : subset) in[i] = true;
  return in;
}

// Deletes letters outside the subset and renumbers the survivors in order.
Word restrict_word(const Word& w, const std::vector<bool>& in, const std::vector<int>& new_label) {
  Word out;
  for (int x : w) {
    if (in[x]) out.push_back(new_label[x]);
  }
  return out;
}

}  // namespace

OperadElement::OperadElement(int arity) : arity_(arity) {
  if (arity < 0) throw std::invalid_argument("negative arity");
}

OperadElement OperadElement::unit(int n) { return basis(Permutation::identity(n)); }

OperadElement OperadElement::basis(const Permutation& p, const Rational& c) {
  OperadElement e(p.arity());
  e.add_term(p, c);
  return e;
}

Rational OperadElement::coefficient(const Permutation& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void OperadElement::add_term(const Permutation& p, const Rational& c) {
  if (p.arity() != arity_) throw std::invalid_argument("term arity mismatch");
  if (c == 0) return;
  Rational v = c;
  v.canonicalize();
  auto [it, inserted] = terms_.emplace(p, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

OperadElement& OperadElement::operator+=(const OperadElement& o) {
  if (o.arity_ != arity_) throw std::invalid_argument("sum of elements of different arity");
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

OperadElement& OperadElement::operator-=(const OperadElement& o) {
  if (o.arity_ != arity_) throw std::invalid_argument("difference of elements of different arity");
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

OperadElement& OperadElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  Rational f = c;
  f.canonicalize();
  for (auto& [p, v] : terms_) v *= f;
  return *this;
}

Vector OperadElement::dense() const {
  const auto& g = SymmetricGroup::get(arity_);
  Vector v(g.order());
  for (const auto& [p, c] : terms_) v[g.rank(p)] = c;
  return v;
}

IntVector OperadElement::dense_integer() const { return primitive_integer_vector(dense()); }

OperadElement OperadElement::from_dense(int arity, const Vector& coords) {
  const auto& g = SymmetricGroup::get(arity);
  if (coords.size() != g.order()) throw std::invalid_argument("from_dense: wrong coordinate count");
  OperadElement e(arity);
  for (std::size_t r = 0; r < coords.size(); ++r) {
    if (coords[r] != 0) e.terms_.emplace(g.element(r), coords[r]);
  }
  return e;
}

std::string OperadElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += p.str();
    first = false;
  }
  return out;
}

OperadElement OperadElement::parse(std::string_view text, std::optional<int> arity) {
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw std::invalid_argument("element parse error at column " + std::to_string(i + 1) + ": " + msg);
  };
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  struct Term {
    Rational c;
    std::optional<Permutation> p;
  };
  std::vector<Term> parsed;
  skip();
  if (i == text.size()) fail("empty element");
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    Rational c = 1;
    bool has_coef = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t start = i;
      while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
      try {
        c = parse_rational(text.substr(start, i - start));
      } catch (const std::invalid_argument& e) {
        i = start;
        fail(e.what());
      }
      has_coef = true;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      }
    }
    std::optional<Permutation> p;
    if (i < text.size() && text[i] == '(') {
      std::size_t start = i;
      while (i < text.size() && text[i] != ')') ++i;
      if (i == text.size()) fail("unterminated permutation");
      ++i;
      try {
        p = Permutation::parse(text.substr(start, i - start));
      } catch (const std::invalid_argument& e) {
        i = start;
        fail(e.what());
      }
    } else if (!has_coef) {
      fail("expected a coefficient or a permutation");
    }
    parsed.push_back({sign * c, p});
    first = false;
  }
  std::optional<int> ar = arity;
  for (const auto& t : parsed) {
    int a = t.p ? t.p->arity() : 0;
    if (!t.p && t.c == 0) continue;
    if (ar && *ar != a) throw std::invalid_argument("element parse error: inconsistent arities");
    ar = a;
  }
  OperadElement e(ar.value_or(0));
  for (const auto& t : parsed) {
    if (!t.p) {
      if (t.c == 0) continue;
      e.add_term(Permutation(), t.c);
    } else {
      e.add_term(*t.p, t.c);
    }
  }
  return e;
}

OperadElement full_compose(const OperadElement& outer, const std::vector<OperadElement>& inners) {
  if (static_cast<int>(inners.size()) != outer.arity()) {
    throw std::invalid_argument("full_compose: number of inputs differs from the outer arity");
  }
  std::vector<int> offset(inners.size() + 1, 0);
  for (std::size_t i = 0; i < inners.size(); ++i) offset[i + 1] = offset[i] + inners[i].arity();
  // shifted blocks of each inner element
  std::vector<std::vector<std::pair<Word, Rational>>> blocks(inners.size());
  for (std::size_t i = 0; i < inners.size(); ++i) {
    for (const auto& [p, c] : inners[i].terms()) {
      Word w = p.seq();
      for (int& x : w) x += offset[i];
      blocks[i].emplace_back(std::move(w), c);
    }
  }
  OperadElement result(offset.back());
  for (const auto& [sigma, c] : outer.terms()) {
    std::vector<std::pair<Word, Rational>> partial{{Word{}, c}};
    for (int letter : sigma.seq()) {
      const auto& options = blocks[letter - 1];
      std::vector<std::pair<Word, Rational>> next;
      next.reserve(partial.size() * options.size());
      for (const auto& [w, wc] : partial) {
        for (const auto& [b, bc] : options) {
          Word joined = w;
          joined.insert(joined.end(), b.begin(), b.end());
          next.emplace_back(std::move(joined), wc * bc);
        }
      }
      partial = std::move(next);
      if (partial.empty()) break;
    }
    for (const auto& [w, wc] : partial) result.add_term(Permutation(w), wc);
  }
  return result;
}

OperadElement partial_compose(const OperadElement& mu, int slot, const OperadElement& nu) {
  if (slot < 1 || slot > mu.arity()) throw std::invalid_argument("partial_compose: slot out of range");
  std::vector<OperadElement> inners(mu.arity(), OperadElement::unit(1));
  inners[slot - 1] = nu;
  return full_compose(mu, inners);
}

OperadElement act(const OperadElement& theta, const Permutation& sigma) {
  if (theta.arity() != sigma.arity()) throw std::invalid_argument("act: arity mismatch");
  OperadElement out(theta.arity());
  for (const auto& [p, c] : theta.terms()) out.add_term(p * sigma, c);
  return out;
}

OperadElement restrict(const OperadElement& theta, const std::vector<int>& subset) {
  const int n = theta.arity();
  check_subset(subset, n);
  auto in = membership(subset, n);
  std::vector<int> label(n + 1, 0);
  for (int x = 1, k = 0; x <= n; ++x) {
    if (in[x]) label[x] = ++k;
  }
  OperadElement out(static_cast<int>(subset.size()));
  for (const auto& [p, c] : theta.terms()) out.add_term(Permutation(restrict_word(p.seq(), in, label)), c);
  return out;
}

OperadElement extend(const OperadElement& theta, const std::vector<int>& subset) {
  const int n = theta.arity();
  check_subset(subset, n);
  auto in = membership(subset, n);
  std::vector<int> offset(n + 2, 0);
  for (int x = 1; x <= n; ++x) offset[x + 1] = offset[x] + (in[x] ? 2 : 1);
  OperadElement out(n + static_cast<int>(subset.size()));
  for (const auto& [p, c] : theta.terms()) {
    Word w;
    for (int x : p.seq()) {
      w.push_back(offset[x] + 1);
      if (in[x]) w.push_back(offset[x] + 2);
    }
    out.add_term(Permutation(w), c);
  }
  return out;
}

OperadElement iota(int left, int right, const OperadElement& theta) {
  if (left < 0 || right < 0) throw std::invalid_argument("iota: negative padding");
  const int n = theta.arity();
  OperadElement out(left + n + right);
  for (const auto& [p, c] : theta.terms()) {
    Word w;
    for (int x = 1; x <= left; ++x) w.push_back(x);
    for (int x : p.seq()) w.push_back(x + left);
    for (int x = 1; x <= right; ++x) w.push_back(left + n + x);
    out.add_term(Permutation(w), c);
  }
  return out;
}

void MultilinearPolynomial::add_term(const Word& w, const Rational& c) {
  if (static_cast<int>(w.size()) != degree_) throw std::invalid_argument("monomial degree mismatch");
  std::vector<bool> seen(degree_ + 1, false);
  for (int x : w) {
    if (x < 1 || x > degree_ || seen[x]) throw std::invalid_argument("polynomial is not multilinear");
    seen[x] = true;
  }
  if (c == 0) return;
  Rational v = c;
  v.canonicalize();
  auto [it, inserted] = terms_.emplace(w, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

MultilinearPolynomial MultilinearPolynomial::act(const Permutation& rho) const {
  if (rho.arity() != degree_) throw std::invalid_argument("act: degree mismatch");
  MultilinearPolynomial out(degree_);
  for (const auto& [w, c] : terms_) {
    Word v;
    for (int x : w) v.push_back(rho.seq()[x - 1]);
    out.add_term(v, c);
  }
  return out;
}

std::string MultilinearPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + "*";
    if (w.empty()) out += "1";
    for (int x : w) out += "x" + std::to_string(x);
    first = false;
  }
  return out;
}

MultilinearPolynomial phi(const OperadElement& theta) {
  MultilinearPolynomial f(theta.arity());
  for (const auto& [p, c] : theta.terms()) f.add_term(p.seq(), c);
  return f;
}

OperadElement psi(const MultilinearPolynomial& f) {
  OperadElement e(f.degree());
  for (const auto& [w, c] : f.terms()) e.add_term(Permutation(w), c);
  return e;
}

OperadElement proper_polynomial(const std::vector<std::vector<int>>& brackets) {
  int n = 0;
  for (const auto& b : brackets) {
    if (b.size() < 2) throw std::invalid_argument("proper_polynomial: bracket shorter than 2");
    n += static_cast<int>(b.size());
  }
  std::vector<bool> seen(n + 1, false);
  for (const auto& b : brackets) {
    for (int x : b) {
      if (x < 1 || x > n || seen[x]) throw std::invalid_argument("proper_polynomial: variables must partition [n]");
      seen[x] = true;
    }
  }
  using Poly = std::map<Word, Rational>;
  auto multiply = [](const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [wa, ca] : a) {
      for (const auto& [wb, cb] : b) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        out[w] += ca * cb;
      }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  };
  Poly product{{Word{}, Rational(1)}};
  for (const auto& b : brackets) {
    Poly acc{{Word{b[0]}, Rational(1)}};
    for (std::size_t k = 1; k < b.size(); ++k) {
      Poly x{{Word{b[k]}, Rational(1)}};
      Poly left = multiply(acc, x), right = multiply(x, acc);
      for (const auto& [w, c] : right) left[w] -= c;
      std::erase_if(left, [](const auto& kv) { return kv.second == 0; });
      acc = std::move(left);
    }
    product = multiply(product, acc);
  }
  MultilinearPolynomial f(n);
  for (const auto& [w, c] : product) f.add_term(w, c);
  return psi(f);
}

OperadElement tau() { return OperadElement::parse("(1,2) - (2,1)"); }

OperadElement tau_n(int n) {
  if (n < 1) throw std::invalid_argument("tau_n: n must be positive");
  if (n == 1) return OperadElement::unit(1);
  OperadElement t = tau();
  for (int k = 3; k <= n; ++k) t = partial_compose(tau(), 1, t);
  return t;
}

OperadElement tau_composite(const std::vector<int>& lengths) {
  std::vector<OperadElement> inners;
  for (int k : lengths) inners.push_back(tau_n(k));
  return full_compose(OperadElement::unit(static_cast<int>(lengths.size())), inners);
}

OperadElement alternating_sum(int n) {
  const auto& g = SymmetricGroup::get(n);
  OperadElement e(n);
  for (std::size_t r = 0; r < g.order(); ++r) e.add_term(g.element(r), g.sign(r));
  return e;
}

namespace {

template <class WordFn>
BasisMap word_map(int n, int out_arity, WordFn&& fn) {
  const auto& src = SymmetricGroup::get(n);
  const auto& dst = SymmetricGroup::get(out_arity);
  BasisMap m{src.order(), dst.order(), std::vector<std::uint32_t>(src.order())};
  Word w;
  for (std::size_t r = 0; r < src.order(); ++r) {
    w.clear();
    fn(src.element(r).seq(), w);
    m.target[r] = static_cast<std::uint32_t>(dst.rank_of(w.data()));
  }
  return m;
}

}  // namespace

BasisMap right_action_map(int n, const Permutation& sigma) {
  if (sigma.arity() != n) throw std::invalid_argument("right_action_map: arity mismatch");
  const auto& g = SymmetricGroup::get(n);
  return BasisMap{g.order(), g.order(), g.right_multiplication(g.rank(sigma))};
}

BasisMap unit_deletion_map(int n, int slot) {
  if (slot < 1 || slot > n) throw std::invalid_argument("unit_deletion_map: slot out of range");
  return word_map(n, n - 1, [slot](const Word& s, Word& w) {
    for (int x : s) {
      if (x != slot) w.push_back(x > slot ? x - 1 : x);
    }
  });
}

BasisMap unit_doubling_map(int n, int slot) {
  if (slot < 1 || slot > n) throw std::invalid_argument("unit_doubling_map: slot out of range");
  return word_map(n, n + 1, [slot](const Word& s, Word& w) {
    for (int x : s) {
      if (x < slot) {
        w.push_back(x);
      } else if (x == slot) {
        w.push_back(slot);
        w.push_back(slot + 1);
      } else {
        w.push_back(x + 1);
      }
    }
  });
}

BasisMap left_product_map(int n) {
  return word_map(n, n + 1, [](const Word& s, Word& w) {
    w.push_back(1);
    for (int x : s) w.push_back(x + 1);
  });
}

BasisMap right_product_map(int n) {
  return word_map(n, n + 1, [n](const Word& s, Word& w) {
    w = s;
    w.push_back(n + 1);
  });
}

BasisMap composite_map(int m, int left, int right, const std::vector<int>& blocks) {
  if (static_cast<int>(blocks.size()) != m || left < 0 || right < 0) {
    throw std::invalid_argument("composite_map: bad shape");
  }
  std::vector<int> offset(m + 1, 0);
  for (int i = 0; i < m; ++i) {
    if (blocks[i] < 0) throw std::invalid_argument("composite_map: negative block");
    offset[i + 1] = offset[i] + blocks[i];
  }
  const int inner = offset[m];
  return word_map(m, left + inner + right, [&](const Word& s, Word& w) {
    for (int x = 1; x <= left; ++x) w.push_back(x);
    for (int x : s) {
      for (int k = 1; k <= blocks[x - 1]; ++k) w.push_back(left + offset[x - 1] + k);
    }
    for (int x = 1; x <= right; ++x) w.push_back(left + inner + x);
  });
}

BasisMap restriction_map(int n, const std::vector<int>& subset) {
  check_subset(subset, n);
  auto in = membership(subset, n);
  std::vector<int> label(n + 1, 0);
  for (int x = 1, k = 0; x <= n; ++x) {
    if (in[x]) label[x] = ++k;
  }
  return word_map(n, static_cast<int>(subset.size()),
                  [&](const Word& s, Word& w) { w = restrict_word(s, in, label); });
}

std::vector<BasisMap> symmetric_generator_maps(int n) {
  const auto& g = SymmetricGroup::get(n);
  std::vector<BasisMap> maps;
  for (std::size_t gen : g.generators()) maps.push_back(BasisMap{g.order(), g.order(), g.right_multiplication(gen)});
  return maps;
}

}  // namespace uas
