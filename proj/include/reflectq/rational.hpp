#pragma once

// Exact rational coefficients on top of GMP. Everything downstream assumes
// these are always canonical (reduced, denominator > 0), which mpq_class
// arithmetic guarantees as long as construction goes through make_rat.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace reflectq {

using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("0 raised to a negative power");
        return Rat(0);
    }
    Rat b = e < 0 ? Rat(1) / base : base;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

// gcd for contents: gcd of numerators over lcm of denominators, positive.
inline Rat rat_gcd(const Rat& a, const Rat& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    mpz_class gn, dl;
    mpz_gcd(gn.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    mpz_lcm(dl.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    Rat r(gn, dl);
    r.canonicalize();
    return r;
}

inline double rat_to_double(const Rat& r) { return r.get_d(); }

}  // namespace reflectq
