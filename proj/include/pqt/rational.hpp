#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pqt {

// Exact rational in lowest terms with positive denominator. GMP keeps
// mpq_class canonical after every arithmetic operation.
using Rational = mpq_class;

// Parses "a", "-a", "a/b" (b != 0). The result is canonicalized.
// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

}  // namespace pqt
