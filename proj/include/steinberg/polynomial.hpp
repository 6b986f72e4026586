#pragma once

// Dense univariate polynomials with exact integer (Polynomial) or rational
// (RatPoly) coefficients, plus the gamma-vector machinery for symmetric
// polynomials:
//
//   a polynomial p with p(t) = t^m p(1/t) ("symmetric with center of symmetry
//   m/2") has a unique expansion p = sum_i gamma_i t^i (1+t)^(m-2i),
//   0 <= i <= m/2.  Nonnegativity of the gamma_i implies unimodality of the
//   coefficient sequence of p.

#include <steinberg/numbers.hpp>

#include <cstddef>
#include <vector>

namespace steinberg {

class Polynomial {
  public:
    Polynomial() = default;                       // zero polynomial
    explicit Polynomial(Int constant);
    explicit Polynomial(std::vector<Int> coeffs);  // coeffs[k] multiplies t^k

    static Polynomial monomial(Int c, unsigned k);
    static Polynomial t();  // the variable itself

    // Degree of the zero polynomial is reported as -1; use is_zero() to
    // distinguish it from nonzero constants.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    // Coefficient of t^k; zero beyond the degree.
    const Int& coeff(std::size_t k) const;
    const std::vector<Int>& coeffs() const { return c_; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Int& s);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(const Int& s, Polynomial p) { return p *= s; }
    bool operator==(const Polynomial& o) const { return c_ == o.c_; }

    Polynomial pow(unsigned e) const;
    Polynomial derivative() const;
    Int operator()(const Int& x) const;   // evaluation by Horner
    Rat operator()(const Rat& x) const;

    // Sum of all coefficients, i.e. p(1).
    Int coefficient_sum() const;

  private:
    void trim();
    std::vector<Int> c_;  // trailing entry always nonzero
};

// gamma-vector of a polynomial symmetric about m/2: entries gamma_0..gamma_{m/2}.
struct GammaVector {
    unsigned center_times_two = 0;  // the m above (coefficient symmetry c_k = c_{m-k})
    std::vector<Int> entries;

    bool operator==(const GammaVector&) const = default;
};

// True when c_k == c_{m-k} for all k.  Requires m >= degree(p) (else
// std::invalid_argument): coefficients above m would have no mirror image.
bool is_symmetric(const Polynomial& p, unsigned m);

// Expand p = sum gamma_i t^i (1+t)^(m-2i).  Throws std::invalid_argument when
// p is not symmetric about m/2; entries may be negative for symmetric input.
GammaVector gamma_vector(const Polynomial& p, unsigned m);

// Inverse of gamma_vector: rebuild the polynomial from its gamma-vector.
Polynomial gamma_reconstruct(const GammaVector& g);

bool is_nonnegative(const GammaVector& g);

// Weak unimodality of the coefficient sequence c_0..c_deg (rises weakly, then
// falls weakly).  The zero polynomial counts as unimodal.
bool is_unimodal(const Polynomial& p);

// --------------------------------------------------------------------------
// Rational-coefficient polynomials.  Used as the coefficient ring of the
// truncated exponential generating functions and inside the real-root
// counting routines; deliberately minimal.

class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(Rat constant);
    explicit RatPoly(std::vector<Rat> coeffs);
    explicit RatPoly(const Polynomial& p);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& coeff(std::size_t k) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    RatPoly operator-() const;
    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    RatPoly& operator*=(const RatPoly& o);
    RatPoly& operator*=(const Rat& s);
    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
    friend RatPoly operator*(const Rat& s, RatPoly p) { return p *= s; }
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }

    // Conversion back to integer coefficients; throws consistency_error if
    // any coefficient has a denominator != 1.
    Polynomial to_integer() const;

  private:
    void trim();
    std::vector<Rat> c_;
};

}  // namespace steinberg
