#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nlg {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Builds a canonical (reduced, positive denominator) fraction.
Rational make_fraction(long num, long den = 1);

/// Renders a rational with an explicit denominator, e.g. "8/9", "0/1", "8/1".
std::string to_fraction_string(const Rational& value);

/// Parses "p" or "p/q" with optional sign on either part.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_fraction(std::string_view text);

}  // namespace nlg
