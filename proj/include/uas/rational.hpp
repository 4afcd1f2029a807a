#ifndef UAS_RATIONAL_HPP
#define UAS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace uas {

// Always canonical: mpq_class keeps numerator/denominator reduced with a
// positive denominator as long as every constructor path calls canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

// Scales a rational vector to a primitive integer vector (gcd 1, first
// nonzero entry keeps its sign). Returns the empty-content zero vector as-is.
std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v);

}  // namespace uas

#endif
