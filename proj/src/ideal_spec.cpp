#include "uas/ideal_spec.hpp"

#include "uas/config.hpp"
#include "uas/json_io.hpp"
#include "uas/rep.hpp"
#include "uas/truncation.hpp"

#include <cctype>
#include <algorithm>
#include <charconv>
#include <regex>

namespace uas {

SpecError::SpecError(int line_, int column_, const std::string& message)
    : std::invalid_argument("ideal spec error at line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " +
                            message),
      line(line_),
      column(column_) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  IdealSpec run() {
    IdealSpec spec;
    skip_space();
    if (at_end()) fail("empty ideal expression");
    while (true) {
      spec.terms.push_back(term());
      skip_space();
      if (at_end()) break;
      expect('+');
    }
    return spec;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::pair<int, int> position(std::size_t offset) const {
    int line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    return {line, column};
  }

  [[noreturn]] void fail_at(std::size_t offset, const std::string& message) const {
    auto [line, column] = position(offset);
    throw SpecError(line, column, message);
  }
  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'" + (at_end() ? " before the end of input" : ""));
    ++pos_;
  }

  bool accept_word(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an arity");
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc()) fail_at(start, "arity out of range");
    return value;
  }

  void check_arity(int k, std::size_t at, int lowest) const {
    if (k < lowest) fail_at(at, "arity " + std::to_string(k) + " is below " + std::to_string(lowest));
    if (k > window_bound()) fail_at(at, "arity " + std::to_string(k) + " is beyond the window " + std::to_string(window_bound()));
  }

  IdealTerm term() {
    skip_space();
    IdealTerm t;
    if (accept_word("elem:")) return element_term();
    if (accept_word("GT1")) {
      t.kind = IdealTerm::Kind::type_one;
    } else if (accept_word("GT2")) {
      t.kind = IdealTerm::Kind::type_two;
    } else if (accept_word("U")) {
      t.kind = IdealTerm::Kind::truncation;
    } else if (accept_word("T")) {
      t.kind = IdealTerm::Kind::top_generated;
    } else {
      fail("expected U(k), T(k), GT1(m; labels), GT2(m; file) or elem:");
    }
    expect('(');
    skip_space();
    const std::size_t arity_at = pos_;
    t.arity = integer();
    switch (t.kind) {
      case IdealTerm::Kind::truncation:
      case IdealTerm::Kind::top_generated:
        check_arity(t.arity, arity_at, t.kind == IdealTerm::Kind::truncation ? 0 : 2);
        break;
      case IdealTerm::Kind::type_one:
        check_arity(t.arity, arity_at, 2);
        expect(';');
        t.labels = labels(t.arity);
        break;
      case IdealTerm::Kind::type_two: {
        check_arity(t.arity, arity_at, 2);
        expect(';');
        skip_space();
        const std::size_t path_at = pos_;
        // the path ends at the first ')' followed by '+' or the end of input
        std::size_t end = text_.find(')', pos_);
        while (end != std::string_view::npos) {
          std::size_t after = end + 1;
          while (after < text_.size() && std::isspace(static_cast<unsigned char>(text_[after]))) ++after;
          if (after == text_.size() || text_[after] == '+') break;
          end = text_.find(')', end + 1);
        }
        if (end == std::string_view::npos) fail("expected ')' after the sequence file");
        std::string path = std::string(text_.substr(pos_, end - pos_));
        while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back()))) path.pop_back();
        if (path.empty()) fail_at(path_at, "expected a sequence file");
        t.path = path;
        pos_ = end;
        break;
      }
      case IdealTerm::Kind::element:
        break;
    }
    expect(')');
    return t;
  }

  std::vector<Partition> labels(int m) {
    skip_space();
    if (peek() == '0') {
      ++pos_;
      return {};
    }
    std::vector<Partition> out;
    while (true) {
      skip_space();
      const std::size_t at = pos_;
      if (!accept_word("V[")) fail("expected an irreducible label V[...] or 0");
      const std::size_t close = text_.find(']', pos_);
      if (close == std::string_view::npos) fail("expected ']'");
      Partition lambda;
      try {
        lambda = Partition::parse(text_.substr(pos_, close - pos_));
      } catch (const std::exception&) {
        fail_at(pos_, "unknown label " + std::string(text_.substr(at, close + 1 - at)));
      }
      if (lambda.weight() != m) {
        fail_at(at, "label " + irreducible_label(lambda) + " is not a partition of " + std::to_string(m));
      }
      if (isotypic_component(truncation_kernel(m, m), m, lambda).dim() == 0) {
        fail_at(at, "label " + irreducible_label(lambda) + " is not a constituent of U(" + std::to_string(m) + ")(" +
                        std::to_string(m) + ")");
      }
      for (const auto& seen : out) {
        if (seen == lambda) fail_at(at, "label " + irreducible_label(lambda) + " repeated");
      }
      out.push_back(lambda);
      pos_ = close + 1;
      skip_space();
      if (peek() != '+') break;
      // a '+' followed by a new term ends the label list
      std::size_t next = pos_ + 1;
      while (next < text_.size() && std::isspace(static_cast<unsigned char>(text_[next]))) ++next;
      if (text_.substr(next, 2) != "V[") break;
      pos_ = next;
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  IdealTerm element_term() {
    IdealTerm t;
    t.kind = IdealTerm::Kind::element;
    skip_space();
    std::size_t body_start, body_end;
    if (peek() == '{') {
      body_start = pos_ + 1;
      body_end = text_.find('}', body_start);
      if (body_end == std::string_view::npos) fail("expected '}'");
      pos_ = body_end + 1;
    } else {
      body_start = pos_;
      body_end = text_.size();
      pos_ = body_end;
    }
    const std::string body(text_.substr(body_start, body_end - body_start));
    try {
      t.element = OperadElement::parse(body);
    } catch (const std::invalid_argument& e) {
      static const std::regex column_of(R"(column (\d+))");
      std::cmatch m;
      std::size_t at = body_start;
      if (std::regex_search(e.what(), m, column_of)) at += std::stoul(m[1].str()) - 1;
      fail_at(at, e.what());
    }
    t.arity = t.element.arity();
    if (t.arity > window_bound()) fail_at(body_start, "element arity is beyond the window");
    if (t.element.is_zero()) fail_at(body_start, "zero element");
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string labels_str(const std::vector<Partition>& labels) {
  if (labels.empty()) return "0";
  std::string out;
  for (const auto& lambda : labels) {
    if (!out.empty()) out += "+";
    out += irreducible_label(lambda);
  }
  return out;
}

Subspace type_one_module(const IdealTerm& t) {
  return components_by_label(truncation_kernel(t.arity, t.arity), t.arity, t.labels);
}

}  // namespace

IdealSpec parse_ideal_spec(std::string_view text) { return Parser(text).run(); }

std::string IdealSpec::str() const {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    const std::string m = std::to_string(t.arity);
    switch (t.kind) {
      case IdealTerm::Kind::truncation: out += "U(" + m + ")"; break;
      case IdealTerm::Kind::top_generated: out += "T(" + m + ")"; break;
      case IdealTerm::Kind::type_one: out += "GT1(" + m + "; " + labels_str(t.labels) + ")"; break;
      case IdealTerm::Kind::type_two: out += "GT2(" + m + "; " + t.path + ")"; break;
      case IdealTerm::Kind::element: out += "elem:{" + t.element.str() + "}"; break;
    }
  }
  return out;
}

IdealPresentation presentation_of(const IdealSpec& spec) {
  IdealPresentation pres;
  for (const auto& t : spec.terms) {
    switch (t.kind) {
      case IdealTerm::Kind::truncation: pres += IdealPresentation::truncation(t.arity); break;
      case IdealTerm::Kind::top_generated:
        pres += IdealPresentation::module(t.arity, truncation_kernel(t.arity, t.arity));
        break;
      case IdealTerm::Kind::type_one:
        pres += IdealPresentation::module(t.arity, type_one_module(t)) + IdealPresentation::truncation(t.arity + 1);
        break;
      case IdealTerm::Kind::type_two: {
        AdmissibleSequence seq = read_sequence(t.path);
        if (seq.m != t.arity) {
          throw std::invalid_argument("sequence file " + t.path + " ends in arity " + std::to_string(seq.m) + ", not " +
                                      std::to_string(t.arity));
        }
        pres += gt_presentation(seq);
        break;
      }
      case IdealTerm::Kind::element: pres += IdealPresentation::element(t.element); break;
    }
  }
  pres.label = spec.str();
  return pres;
}

IdealWindow window_of(const IdealSpec& spec, int window) {
  IdealWindow w;
  if (spec.terms.size() == 1 && spec.terms[0].kind == IdealTerm::Kind::type_one) {
    w = gt_type1(spec.terms[0].arity, type_one_module(spec.terms[0]));
  } else if (spec.terms.size() == 1 && spec.terms[0].kind == IdealTerm::Kind::type_two) {
    AdmissibleSequence seq = read_sequence(spec.terms[0].path);
    if (seq.m != spec.terms[0].arity) throw std::invalid_argument("sequence file arity mismatch");
    w = gt_general(seq);
  } else {
    w = ideal_window(presentation_of(spec), window);
  }
  w.provenance = spec.str();
  return w;
}

}  // namespace uas
