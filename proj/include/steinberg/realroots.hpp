#pragma once

// Exact real-root counting via Sturm sequences.
//
// The Sturm chain is computed fraction-free: every remainder is scaled to a
// primitive integer polynomial (scaling by positive constants preserves the
// sign variations that Sturm's theorem counts).  Root counts over all of R
// come from the sign variations of the leading coefficients at -oo and +oo,
// so no isolating intervals are ever needed.

#include <steinberg/polynomial.hpp>

namespace steinberg {

// Number of distinct real roots.  Throws std::domain_error for the zero
// polynomial (every point is a root).
int count_real_roots(const Polynomial& p);

// Number of real roots counted with multiplicity: distinct roots of p plus,
// recursively, the roots of gcd(p, p') which carries each m-fold root of p
// as an (m-1)-fold root.
int count_real_roots_with_multiplicity(const Polynomial& p);

// True iff every complex root is real, i.e. the count with multiplicity
// equals the degree.  Nonzero constants are vacuously real-rooted.
bool is_real_rooted(const Polynomial& p);

}  // namespace steinberg
