#pragma once

#include <gmpxx.h>

#include <string>

#include "mlim/errors.hpp"

namespace mlim {

// Exact rational coefficient type. mpq_class keeps values canonical
// (gcd(num, den) = 1, den > 0) through all arithmetic.
using Rat = mpq_class;
using Int = mpz_class;

inline int sgn(const Rat& r) { return ::sgn(r); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline double to_double(const Rat& r) { return r.get_d(); }

// Renders "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rat& r) { return r.get_str(); }

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat acc(1), b = base;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

// Parses "p", "p/q" or a decimal literal like "0.25" into an exact rational.
Rat rat_from_string(const std::string& text);

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a > b ? a : b; }

} // namespace mlim
