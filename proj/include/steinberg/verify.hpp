#pragma once

// Machine checks for the identities, expansion formulas, generating
// functions, torus properties and real-rootedness statements implemented by
// this library.  Every check compares two independently computed exact
// quantities and reports a structured result; nothing is approximate.

#include <steinberg/diagram.hpp>
#include <steinberg/flag_polynomial.hpp>
#include <steinberg/polynomial.hpp>
#include <steinberg/series.hpp>
#include <steinberg/signed_permutation.hpp>
#include <steinberg/torus.hpp>

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace steinberg {

struct CheckResult {
    std::string name;
    bool ok = false;
    double elapsed_seconds = 0.0;
    // Exact difference (left side minus right side) when a comparison fails.
    std::variant<std::monostate, Polynomial, FlagPolynomial> residual;
    std::string note;  // informational, e.g. for recorded-only results
};

// ------------------------------------------------------- expansion formulas
// Multivariate descent generating functions computed by enumerating the full
// group (left side) versus the S_n-indexed product formulas (right side).
// The parameter n is the window length.
CheckResult check_flag_formula_A(unsigned n);  // n >= 2
CheckResult check_flag_formula_C(unsigned n);  // n >= 1
CheckResult check_flag_formula_B(unsigned n);  // n >= 2
CheckResult check_flag_formula_D(unsigned n);  // n >= 4

// ---------------------------------------------------------- gamma formulas
// Peak-statistic expansions witnessing nonnegative gamma-vectors.  Stated
// ranges: affC/C/A n >= 1, affB n >= 2, affD/D n >= 4; the two type-D
// formulas also run at n = 3 in recorded-only mode (ok reflects the actual
// outcome, the note marks them as outside the stated range).
enum class GammaFormula : unsigned char { affC, C, A, affB, affD, D };
CheckResult check_gamma_expansion(GammaFormula f, unsigned n);

// -------------------------------------------------------------- identities
enum class IdentityKind : unsigned char {
    CBC,  // 2 ~C_n = ~B_n + 2nt C_{n-1},        n >= 2
    BDD,  // ~B_n = ~D_n + 2nt D_{n-1},          n >= 3
    BDA,  // B_n = C_n = D_n + n 2^(n-1) t A_{n-2},  n >= 2
};
CheckResult check_identity(IdentityKind k, unsigned n);

// Affine Eulerian polynomials as multiples of classical ones:
//   A: affine Eulerian of S_{n+1} = (n+1) t A_{n-1}(t),  n >= 1
//   C: ~C_n = 2^n t A_{n-1}(t),                          n >= 1
enum class CyclicKind : unsigned char { A, C };
CheckResult check_cyclic(CyclicKind k, unsigned n);

// ----------------------------------------------------- generating functions
// EGF coefficient extraction versus direct enumeration for every genuine
// window length up to n_max.
std::vector<CheckResult> check_egf_enumeration(SeriesId id, unsigned n_max);

// The series-level identities, compared through z^order:
//   affA = z A,   affC = A(t, 2z),   2 affC = affB + 2tz BC,
//   affB = affD + 2tz D,   BC = D + z A(t, 2z).
std::vector<CheckResult> check_series_identities(unsigned order);

// Sturm-count certificates: every series-extracted polynomial with window
// length in [genuine minimum, n_max] has all roots real.
std::vector<CheckResult> check_real_rooted(SeriesId id, unsigned n_max);

// ------------------------------------------------------------------- torus
// Euler characteristic and Dehn-Sommerville for any type; for classical
// types additionally the face-count identity f_J = #{w : descents inside J}
// and the coset partition certificate.
std::vector<CheckResult> check_torus(WeylType t, unsigned n);

// --------------------------------------------------------------- execution
// Runs the closures (optionally on `jobs` threads) and returns the results
// in input order regardless of completion order.
std::vector<CheckResult> run_checks(std::vector<std::function<CheckResult()>> tasks,
                                    unsigned jobs = 1);

}  // namespace steinberg
