#pragma once

#include <gmpxx.h>

#include <string>

#include "wgcalc/errors.hpp"

namespace wgcalc {

// Arbitrary-precision rational, always in canonical form: gcd(|num|, den) = 1
// and den > 0. GMP maintains both invariants through mpq canonicalisation.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p/q" or "p" with optional sign, decimal digits only.
inline Rational rat_from_string(const std::string& s) {
    try {
        Rational q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("invalid rational literal: " + s);
    }
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Integer factorial(unsigned n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Integer binomial(unsigned n, unsigned k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

} // namespace wgcalc
