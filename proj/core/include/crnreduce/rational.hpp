#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace crnreduce {

/// Arbitrary-precision rational number. Always kept in canonical form
/// (reduced, positive denominator).
using Rational = mpq_class;

/// Parses "7", "-3/4" or a plain decimal such as "0.125" exactly.
/// Throws Error(syntax_error) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" for non-integers, "p" otherwise. Never uses floating point.
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace crnreduce
