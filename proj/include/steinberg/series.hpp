#pragma once

// Truncated exponential generating functions with polynomial coefficients:
// elements of Q[t][z] / (z^(N+1)), stored as plain power-series coefficients
// (not divided by factorials).  The named Eulerian series and their closed
// forms are
//
//   A    = 1/(1 - t G_1)              = 1 + sum_{n>=1} t A_{n-1}(t) z^n/n!
//   BC   = E/(1 - t G_2)              = 1 + (1+t) z + sum_{n>=2} B_n(t) z^n/n!
//   D    = (E - z)/(1 - t G_2)        = 1 + t z + sum_{n>=2} D_n(t) z^n/n!
//   affA = z/(1 - t G_1)              = z + sum_{n>=2} ~A_{n-1}(t) z^n/n!
//   affC = 1/(1 - t G_2)              = 1 + sum_{n>=1} ~C_n(t) z^n/n!
//   affB = 2(1 - t z E)/(1 - t G_2)   = 2 + 2t z + sum_{n>=2} ~B_n(t) z^n/n!
//   affD = 2(1 + t z^2 - 2t z E)/(1 - t G_2)
//                                     = 2 + 4t z^2/2 + sum_{n>=3} ~D_n(t) z^n/n!
//
// with E = e^{z(1-t)} and G_c = sum_{k>=1} c^k (1-t)^(k-1) z^k / k!.  These
// are the textbook closed forms with the common factor (1-t) cancelled from
// numerator and denominator, which makes every denominator start with the
// constant 1 so that division happens entirely inside Q[t][[z]].
//
// The z-exponent counts the window length, so the low-order coefficients
// marked above as explicit terms are conventions, not group polynomials;
// eulerian_from_egf refuses those indices.

#include <steinberg/polynomial.hpp>

#include <vector>

namespace steinberg {

class TruncatedSeries {
  public:
    explicit TruncatedSeries(unsigned order);  // zero series mod z^(order+1)
    static TruncatedSeries constant(RatPoly c, unsigned order);
    static TruncatedSeries z(unsigned order);

    unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }
    const RatPoly& coeff(unsigned k) const;
    void set_coeff(unsigned k, RatPoly c);

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const RatPoly& s);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

    // Division requires the divisor's z^0 coefficient to be a nonzero
    // rational constant (std::domain_error otherwise).
    TruncatedSeries divide_by(const TruncatedSeries& den) const;

    // Substitute z -> s*z (coefficient k picks up s^k).
    TruncatedSeries scale_z(const Rat& s) const;
    // Multiply by z^k, truncating at the order.
    TruncatedSeries shift_z(unsigned k) const;

  private:
    std::vector<RatPoly> c_;  // c_[k] multiplies z^k; size order+1
};

// sum_{k=0..order} a^k z^k / k!  =  e^{a z} for a polynomial a.
TruncatedSeries exp_series(const RatPoly& a, unsigned order);

enum class SeriesId : unsigned char { A, BC, D, affA, affC, affB, affD };

TruncatedSeries eulerian_egf(SeriesId id, unsigned order);

// n! times the z^n coefficient; integral for the named series by
// construction (consistency_error otherwise).  Defined for every n up to the
// truncation, conventions included.
Polynomial egf_coefficient(const TruncatedSeries& s, unsigned n);
Polynomial egf_coefficient(SeriesId id, unsigned n);

// Smallest window length n for which the z^n coefficient is a genuine group
// polynomial: A/BC/affC 1, D/affA/affB 2, affD 3.
unsigned egf_min_window(SeriesId id);

// The Eulerian polynomial of the window-length-n group:
//   A: of S_n (so degree n-1 in t after dividing the EGF coefficient by t),
//   BC: B_n = C_n,  D: D_n,  affA: of the affine symmetric group on n
//   letters, affC: ~C_n, affB: ~B_n, affD: ~D_n.
// Indices below egf_min_window are conventions and throw std::domain_error.
Polynomial eulerian_from_egf(SeriesId id, unsigned n);

// Batch version: polynomials for every genuine n <= n_max (indexed by n;
// entries below egf_min_window are left zero).  Builds the series once.
std::vector<Polynomial> eulerian_from_egf_upto(SeriesId id, unsigned n_max);

}  // namespace steinberg
