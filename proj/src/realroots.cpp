#include <steinberg/realroots.hpp>

#include <stdexcept>
#include <vector>

namespace steinberg {
namespace {

using ZP = std::vector<Int>;  // little-endian, trailing entry nonzero

void trim(ZP& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const ZP& p) { return static_cast<int>(p.size()) - 1; }

ZP derivative(const ZP& p) {
    ZP d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(Int(k) * p[k]);
    trim(d);
    return d;
}

// Divide out the content (gcd of coefficients), keeping signs.
void make_primitive(ZP& p) {
    Int g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder: returns r with lc(g)^(deg f - deg g + 1) * f = q*g + r,
// then corrects the sign so that the result has the sign of the true
// euclidean remainder rem(f, g) (they differ by the positive-or-negative
// factor lc(g)^(delta+1)).
ZP signed_pseudo_rem(ZP f, const ZP& g) {
    const int dg = deg(g);
    const Int& lg = g.back();
    int steps = 0;
    while (deg(f) >= dg) {
        ++steps;
        Int lead = f.back();
        for (auto& c : f) c *= lg;
        const std::size_t shift = f.size() - g.size();
        for (std::size_t k = 0; k < g.size(); ++k) f[shift + k] -= lead * g[k];
        trim(f);
    }
    // Total scaling applied is lg^steps (one factor per reduction step).
    if (lg < 0 && (steps & 1))
        for (auto& c : f) c = -c;
    return f;
}

// Primitive polynomial gcd (Euclid on primitive parts); result has positive
// leading coefficient and is correct up to a constant, which is all the
// square-free decomposition needs.
ZP primitive_gcd(ZP a, ZP b) {
    make_primitive(a);
    make_primitive(b);
    while (!b.empty()) {
        ZP r = signed_pseudo_rem(std::move(a), b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() < 0)
        for (auto& c : a) c = -c;
    return a;
}

// Exact division of integer polynomials, used only when divisibility is
// guaranteed (primitive part by its gcd with the derivative, per Gauss).
ZP exact_div(ZP num, const ZP& den) {
    ZP q(num.size() - den.size() + 1, Int(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        if (num.size() < den.size() + k || num[den.size() - 1 + k] == 0) continue;
        Int c;
        mpz_divexact(c.get_mpz_t(), num[den.size() - 1 + k].get_mpz_t(),
                     den.back().get_mpz_t());
        q[k] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[j + k] -= c * den[j];
        trim(num);
    }
    if (!num.empty())
        throw consistency_error("realroots: inexact polynomial division");
    return q;
}

int sign_of(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

// Sturm count of distinct real roots of a square-free polynomial:
// variations(-oo) - variations(+oo), read off the leading coefficients.
int sturm_distinct(const ZP& squarefree) {
    std::vector<ZP> chain;
    chain.push_back(squarefree);
    chain.push_back(derivative(squarefree));
    make_primitive(chain.back());
    while (!chain.back().empty() && deg(chain.back()) > 0) {
        ZP r = signed_pseudo_rem(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        make_primitive(r);
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    int var_pos = 0, var_neg = 0;
    int prev_pos = 0, prev_neg = 0;
    for (const auto& s : chain) {
        if (s.empty()) continue;
        const int lead = sign_of(s.back());
        const int at_pos = lead;
        const int at_neg = (deg(s) % 2 == 0) ? lead : -lead;
        if (prev_pos && at_pos != prev_pos) ++var_pos;
        if (prev_neg && at_neg != prev_neg) ++var_neg;
        prev_pos = at_pos;
        prev_neg = at_neg;
    }
    return var_neg - var_pos;
}

ZP to_zp(const Polynomial& p) {
    ZP z(p.coeffs().begin(), p.coeffs().end());
    return z;
}

int distinct_roots(ZP p) {
    make_primitive(p);
    if (deg(p) == 0) return 0;
    ZP g = primitive_gcd(p, derivative(p));
    if (deg(g) > 0) p = exact_div(std::move(p), g);  // square-free part
    return sturm_distinct(p);
}

int mult_roots(ZP p) {
    make_primitive(p);
    int total = 0;
    while (deg(p) > 0) {
        ZP g = primitive_gcd(p, derivative(p));
        ZP sf = deg(g) > 0 ? exact_div(std::move(p), g) : std::move(p);
        total += sturm_distinct(sf);
        p = std::move(g);
    }
    return total;
}

}  // namespace

int count_real_roots(const Polynomial& p) {
    if (p.is_zero())
        throw std::domain_error("count_real_roots: zero polynomial");
    return distinct_roots(to_zp(p));
}

int count_real_roots_with_multiplicity(const Polynomial& p) {
    if (p.is_zero())
        throw std::domain_error("count_real_roots_with_multiplicity: zero polynomial");
    return mult_roots(to_zp(p));
}

bool is_real_rooted(const Polynomial& p) {
    if (p.is_zero())
        throw std::domain_error("is_real_rooted: zero polynomial");
    return count_real_roots_with_multiplicity(p) == p.degree();
}

}  // namespace steinberg
