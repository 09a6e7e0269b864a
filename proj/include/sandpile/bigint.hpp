#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>

namespace sandpile {

// Exact arbitrary-precision integer. Group orders, determinants and
// polynomial coefficients all use this type; there is no fixed-width
// fast path anywhere in the library.
using Int = mpz_class;

inline Int pow2(unsigned long k) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

// Natural log of a positive integer, accurate to double precision even
// when the integer itself far exceeds the double range.
inline double log_int(const Int& v) {
    signed long e2 = 0;
    double mant = mpz_get_d_2exp(&e2, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(e2) * std::log(2.0);
}

inline std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace sandpile
