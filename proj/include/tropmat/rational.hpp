#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tropmat {

/// Exact rational scalar. All coordinates in the library use this type.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is one, "p/q" otherwise.
std::string to_string(const Rational& value);

}  // namespace tropmat
