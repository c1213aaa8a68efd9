#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace webtrace {

// Exact rational scalar. All values passed around the library are kept in
// canonical form (gcd(num, den) == 1, den > 0); the helpers below are the
// sanctioned constructors because mpq_class(int, int) does not canonicalize.
using Rat = mpq_class;
using Int = mpz_class;

Rat make_rat(long num, long den = 1);

// Accepts "p" or "p/q" with optional leading minus on either part; both an
// ASCII '-' and the U+2212 minus sign are understood. Throws Error on
// malformed text or a zero denominator.
Rat parse_rational(std::string_view text);

// Canonical rendering: "p/q" with q > 0 and gcd(p, q) == 1, or plain "p"
// when q == 1. Never emits "/1".
std::string format_rational(const Rat& value);

}  // namespace webtrace
