#pragma once

// Exact integer and rational scalars.  Everything in this library is computed
// over Z or Q; no floating point is used anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace steinberg {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown when an internal identity that must hold by construction fails
// (e.g. a group order that does not divide |W|, or a series coefficient that
// should be integral but is not).  Seeing this exception means a bug, not bad
// input.
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline Int factorial(unsigned n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned n, unsigned k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int pow2(unsigned k) {
    Int r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), k);
    return r;
}

inline Int pow_int(const Int& base, unsigned e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// mpq_class(num, den) does not reduce the fraction; GMP requires canonical
// form for arithmetic, so always build rationals through this helper.
inline Rat rat_frac(long num, unsigned long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace steinberg
