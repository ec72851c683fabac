#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace simplexcolor {

/// Arbitrary-precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;

/// A point in R^d with exact coordinates.
using Point = std::vector<Rational>;

/// Parses "p", "p/q", or a decimal literal such as "-1.25e-3" exactly.
/// Throws ParseError on anything else or on a zero denominator.
Rational parse_rational(std::string_view text);

/// num/den in canonical form. Throws InputError when den is zero.
Rational make_rational(long num, long den);

/// Exact conversion of a finite double (every double is a dyadic rational).
Rational rational_from_double(double value);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

int sign(const Rational& value);

}  // namespace simplexcolor
