#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace rwords {

/// Arbitrary-precision integer.
using Int = mpz_class;
/// Exact rational, always kept in lowest terms.
using Rat = mpq_class;

/// Builds num/den in canonical (reduced) form. den must be nonzero.
Rat make_rat(long num, long den);

/// Parses "num/den" or a bare integer ("5/7", "-3/4", "1").
/// Whitespace is not accepted. Throws ParseError on anything else.
Rat parse_rational(const std::string& text);

/// Parses a comma-separated list of rationals ("5/7,2/7").
std::vector<Rat> parse_rational_list(const std::string& text);

/// Canonical "num/den" rendering with an explicit denominator ("1/1").
std::string fraction_string(const Rat& q);

/// Fixed-point decimal rendering with `digits` places, computed in exact
/// arithmetic and rounded half away from zero.
std::string decimal_string(const Rat& q, int digits);

/// n!
Int factorial(unsigned long n);

/// Binomial coefficient C(n, k); zero when k > n.
Int binomial(unsigned long n, unsigned long k);

/// base^exp for integer exp of either sign; base must be nonzero when
/// exp < 0.
Rat rat_pow(const Rat& base, long exp);

/// base^exp for nonnegative exp.
Int int_pow(const Int& base, unsigned long exp);

} // namespace rwords
