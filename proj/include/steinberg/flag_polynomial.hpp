#pragma once

// Multivariate "flag" polynomials: integer linear combinations of square-free
// monomials in the variables t_0..t_n, one variable per color.  A monomial is
// identified with the subset of colors it uses, stored as a bitmask.  These
// carry flag f- and h-vectors of colored complexes and the multivariate
// descent generating functions of (affine) Weyl groups.
//
// The flag f- and h-vector of a balanced complex determine each other by the
// inclusion-exclusion pair
//     h_J = sum_{I subset J} (-1)^(|J \ I|) f_I,
//     f_J = sum_{I subset J} h_I,
// implemented as subset Moebius/zeta transforms over the boolean lattice.

#include <steinberg/numbers.hpp>
#include <steinberg/polynomial.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace steinberg {

class FlagPolynomial {
  public:
    // Colors run over [0, n]; n+1 may not exceed 62 (bitmask-backed).
    explicit FlagPolynomial(unsigned n);

    unsigned rank() const { return n_; }
    std::uint64_t full_mask() const { return (std::uint64_t(1) << (n_ + 1)) - 1; }

    const Int& coeff(std::uint64_t subset) const;
    void add(std::uint64_t subset, const Int& c);       // accumulate one term
    void set(std::uint64_t subset, Int c);

    FlagPolynomial operator-() const;
    FlagPolynomial& operator+=(const FlagPolynomial& o);
    FlagPolynomial& operator-=(const FlagPolynomial& o);
    FlagPolynomial& operator*=(const Int& s);
    friend FlagPolynomial operator+(FlagPolynomial a, const FlagPolynomial& b) { return a += b; }
    friend FlagPolynomial operator-(FlagPolynomial a, const FlagPolynomial& b) { return a -= b; }
    bool operator==(const FlagPolynomial& o) const;
    bool is_zero() const { return terms_.empty(); }

    // Terms sorted by (cardinality, lexicographic order of the sorted index
    // lists); this is the canonical order used by every serializer.
    std::vector<std::pair<std::uint64_t, Int>> sorted_terms() const;

    // Sum of all coefficients (every variable set to 1).
    Int coefficient_sum() const;

  private:
    unsigned n_;
    std::map<std::uint64_t, Int> terms_;  // no zero coefficients stored
};

// Subset as a sorted list of color indices, and back.
std::vector<unsigned> subset_to_indices(std::uint64_t mask);
std::uint64_t indices_to_subset(const std::vector<unsigned>& idx, unsigned n);

// Flag f -> flag h (Moebius transform) and its inverse (zeta transform).
FlagPolynomial f_to_h(const FlagPolynomial& f);
FlagPolynomial h_to_f(const FlagPolynomial& h);

// Substitute each variable by t or by 1.  `assignment` must provide one value
// per color 0..n (std::invalid_argument otherwise).
enum class VarValue : unsigned char { t, one };
Polynomial specialize(const FlagPolynomial& p, const std::vector<VarValue>& assignment);

// All variables to t.
Polynomial specialize_all(const FlagPolynomial& p);

// Dehn-Sommerville symmetry: coeff(J) == coeff(complement of J) for every J.
bool dehn_sommerville_check(const FlagPolynomial& h);

}  // namespace steinberg
