#ifndef LIEOBS_RATIONAL_HPP
#define LIEOBS_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <vector>

namespace lieobs {

// Exact rational scalar. mpq_class keeps values canonical (positive
// denominator, coprime numerator/denominator), which is exactly the
// representation every equality test in the library relies on.
using Rational = mpq_class;

using Vec = std::vector<Rational>;

/// Parses "p" or "p/q" with optional sign. Throws ParseError on anything else.
Rational parse_rational(const std::string& text);

/// Renders canonically: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);

bool is_zero(const Vec& v);
Vec zero_vec(std::size_t n);
/// i-th standard basis vector of Q^n.
Vec basis_vec(std::size_t n, std::size_t i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& s, const Vec& v);
/// a += s*b
void axpy(Vec& a, const Rational& s, const Vec& b);
Rational dot(const Vec& a, const Vec& b);
Vec concat(const Vec& a, const Vec& b);

} // namespace lieobs

#endif
