#pragma once

#include <gmpxx.h>

#include <string>

namespace rephom {

// Exact arbitrary-precision rational scalar.  All engine arithmetic is exact;
// GMP keeps values canonical (reduced, positive denominator).
using Rat = mpq_class;
using Int = mpz_class;

// Parses "p", "-p" or "p/q" with q > 0 after canonicalization.
// Throws InputError on malformed input or zero denominator.
Rat rat_from_string(const std::string& text);

// Canonical textual form: "p" or "p/q" with q > 1.
std::string rat_to_string(const Rat& value);

inline bool is_zero(const Rat& value) { return sgn(value) == 0; }

}  // namespace rephom
