#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "logder/errors.hpp"

namespace logder {

// Arbitrary-precision integers and rationals. mpq_class keeps values in
// lowest terms with positive denominator, which is exactly the contract
// the rest of the library relies on.
using Int = mpz_class;
using Rational = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int int_pow(unsigned long base, unsigned long exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

// gcd of all entries, non-negative; 0 for the zero vector.
inline Int content(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// Scales an integer vector to canonical primitive form: entries divided by
// their gcd, first nonzero entry positive. Returns false for the zero vector.
inline bool normalize_primitive(std::vector<Int>& v) {
    Int g = content(v);
    if (g == 0) return false;
    for (const Int& x : v) {
        if (x != 0) {
            if (x < 0) g = -g;
            break;
        }
    }
    if (g != 1) {
        for (Int& x : v) x /= g;
    }
    return true;
}

// Parses an integer or "p/q" token.
inline Rational parse_rational(const std::string& token) {
    Rational r;
    if (r.set_str(token, 10) != 0 || r.get_den() == 0) {
        throw InputError("malformed rational token '" + token + "'");
    }
    r.canonicalize();
    return r;
}

}  // namespace logder
