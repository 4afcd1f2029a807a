#ifndef UAS_IDEAL_SPEC_HPP
#define UAS_IDEAL_SPEC_HPP

#include "uas/ideal.hpp"
#include "uas/operad.hpp"
#include "uas/symmetric.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace uas {

// Ideal expressions:
//   spec   := term ("+" term)*
//   term   := "U(" int ")" | "T(" int ")" | "GT1(" int ";" labels ")"
//           | "GT2(" int ";" path ")" | "elem:{" element "}"
//   labels := "0" | "V[" partition "]" ("+" "V[" partition "]")*
// U(k) is the truncation ideal, T(k) the ideal generated by U(k)(k). A final
// elem: term may omit the braces and then runs to the end of the text.
struct SpecError : std::invalid_argument {
  SpecError(int line, int column, const std::string& message);
  int line;
  int column;
};

struct IdealTerm {
  enum class Kind { truncation, top_generated, type_one, type_two, element };
  Kind kind = Kind::truncation;
  int arity = 0;
  std::vector<Partition> labels;  // type_one; empty for the zero module
  std::string path;               // type_two
  OperadElement element;          // element
  friend bool operator==(const IdealTerm&, const IdealTerm&) = default;
};

struct IdealSpec {
  std::vector<IdealTerm> terms;
  std::string str() const;
  friend bool operator==(const IdealSpec&, const IdealSpec&) = default;
};

IdealSpec parse_ideal_spec(std::string_view text);

// Generators of the ideal; GT2 terms read their admissible sequence from the file.
IdealPresentation presentation_of(const IdealSpec& spec);
IdealWindow window_of(const IdealSpec& spec, int window = -1);

}  // namespace uas

#endif
