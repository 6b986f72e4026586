#include <steinberg/polynomial.hpp>

#include <stdexcept>
#include <utility>

namespace steinberg {

namespace {
const Int kZeroInt = 0;
const Rat kZeroRat = 0;
}  // namespace

Polynomial::Polynomial(Int constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(Int c, unsigned k) {
    Polynomial p;
    if (c != 0) {
        p.c_.assign(k + 1, Int(0));
        p.c_[k] = std::move(c);
    }
    return p;
}

Polynomial Polynomial::t() { return monomial(Int(1), 1); }

const Int& Polynomial::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : kZeroInt;
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Int& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r(Int(1));
    Polynomial base = *this;
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Int> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Int(k) * c_[k];
    return Polynomial(std::move(d));
}

Int Polynomial::operator()(const Int& x) const {
    Int r = 0;
    for (std::size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
    return r;
}

Rat Polynomial::operator()(const Rat& x) const {
    Rat r = 0;
    for (std::size_t k = c_.size(); k-- > 0;) r = r * x + Rat(c_[k]);
    return r;
}

Int Polynomial::coefficient_sum() const {
    Int s = 0;
    for (const auto& c : c_) s += c;
    return s;
}

bool is_symmetric(const Polynomial& p, unsigned m) {
    if (p.degree() > static_cast<int>(m))
        throw std::invalid_argument("is_symmetric: center parameter below the degree");
    for (unsigned k = 0; 2 * k <= m; ++k)
        if (p.coeff(k) != p.coeff(m - k)) return false;
    return true;
}

GammaVector gamma_vector(const Polynomial& p, unsigned m) {
    if (!is_symmetric(p, m))
        throw std::invalid_argument("gamma_vector: polynomial is not symmetric about m/2");
    GammaVector g;
    g.center_times_two = m;
    g.entries.resize(m / 2 + 1);
    Polynomial rest = p;
    Polynomial one_plus_t(std::vector<Int>{Int(1), Int(1)});
    for (unsigned i = 0; 2 * i <= m; ++i) {
        g.entries[i] = rest.coeff(i);
        if (g.entries[i] != 0)
            rest -= Polynomial::monomial(g.entries[i], i) * one_plus_t.pow(m - 2 * i);
    }
    if (!rest.is_zero())
        throw consistency_error("gamma_vector: nonzero remainder for symmetric input");
    return g;
}

Polynomial gamma_reconstruct(const GammaVector& g) {
    Polynomial p;
    Polynomial one_plus_t(std::vector<Int>{Int(1), Int(1)});
    for (unsigned i = 0; i < g.entries.size(); ++i) {
        if (2 * i > g.center_times_two)
            throw std::invalid_argument("gamma_reconstruct: too many entries for the center");
        if (g.entries[i] != 0)
            p += Polynomial::monomial(g.entries[i], i) *
                 one_plus_t.pow(g.center_times_two - 2 * i);
    }
    return p;
}

bool is_nonnegative(const GammaVector& g) {
    for (const auto& e : g.entries)
        if (e < 0) return false;
    return true;
}

bool is_unimodal(const Polynomial& p) {
    const auto& c = p.coeffs();
    std::size_t k = 1;
    while (k < c.size() && c[k - 1] <= c[k]) ++k;   // weakly rising prefix
    for (; k < c.size(); ++k)
        if (c[k - 1] < c[k]) return false;          // must weakly fall afterwards
    return true;
}

// ----------------------------------------------------------------- RatPoly

RatPoly::RatPoly(Rat constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(const Polynomial& p) {
    c_.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) c_.emplace_back(c);
}

const Rat& RatPoly::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : kZeroRat;
}

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const Rat& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Polynomial RatPoly::to_integer() const {
    std::vector<Int> r;
    r.reserve(c_.size());
    for (const auto& c : c_) {
        if (c.get_den() != 1)
            throw consistency_error("RatPoly::to_integer: non-integral coefficient");
        r.push_back(c.get_num());
    }
    return Polynomial(std::move(r));
}

}  // namespace steinberg
