#include <steinberg/series.hpp>

#include <stdexcept>

namespace steinberg {

TruncatedSeries::TruncatedSeries(unsigned order) : c_(order + 1) {}

TruncatedSeries TruncatedSeries::constant(RatPoly c, unsigned order) {
    TruncatedSeries s(order);
    s.c_[0] = std::move(c);
    return s;
}

TruncatedSeries TruncatedSeries::z(unsigned order) {
    TruncatedSeries s(order);
    if (order >= 1) s.c_[1] = RatPoly(Rat(1));
    return s;
}

const RatPoly& TruncatedSeries::coeff(unsigned k) const {
    if (k >= c_.size()) throw std::invalid_argument("TruncatedSeries::coeff: beyond the order");
    return c_[k];
}

void TruncatedSeries::set_coeff(unsigned k, RatPoly c) {
    if (k >= c_.size()) throw std::invalid_argument("TruncatedSeries::set_coeff: beyond the order");
    c_[k] = std::move(c);
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (c_.size() != o.c_.size())
        throw std::invalid_argument("TruncatedSeries: mismatched truncation orders");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    if (c_.size() != o.c_.size())
        throw std::invalid_argument("TruncatedSeries: mismatched truncation orders");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
    if (c_.size() != o.c_.size())
        throw std::invalid_argument("TruncatedSeries: mismatched truncation orders");
    std::vector<RatPoly> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    c_ = std::move(r);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const RatPoly& s) {
    for (auto& c : c_) c *= s;
    return *this;
}

TruncatedSeries TruncatedSeries::divide_by(const TruncatedSeries& den) const {
    if (c_.size() != den.c_.size())
        throw std::invalid_argument("TruncatedSeries: mismatched truncation orders");
    const RatPoly& lead = den.c_[0];
    if (lead.is_zero() || lead.degree() != 0)
        throw std::domain_error(
            "TruncatedSeries::divide_by: z^0 coefficient must be a nonzero constant");
    const Rat inv = Rat(1) / lead.coeff(0);
    TruncatedSeries q(order());
    for (std::size_t k = 0; k < c_.size(); ++k) {
        RatPoly acc = c_[k];
        for (std::size_t i = 1; i <= k; ++i) {
            if (den.c_[i].is_zero() || q.c_[k - i].is_zero()) continue;
            acc -= den.c_[i] * q.c_[k - i];
        }
        acc *= inv;
        q.c_[k] = std::move(acc);
    }
    return q;
}

TruncatedSeries TruncatedSeries::scale_z(const Rat& s) const {
    TruncatedSeries r = *this;
    Rat p = 1;
    for (std::size_t k = 1; k < r.c_.size(); ++k) {
        p *= s;
        r.c_[k] *= p;
    }
    return r;
}

TruncatedSeries TruncatedSeries::shift_z(unsigned k) const {
    TruncatedSeries r(order());
    for (std::size_t i = 0; i + k < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

TruncatedSeries exp_series(const RatPoly& a, unsigned order) {
    TruncatedSeries s(order);
    RatPoly term(Rat(1));
    s.set_coeff(0, term);
    for (unsigned k = 1; k <= order; ++k) {
        term *= a;
        term *= Rat(1, k);
        s.set_coeff(k, term);
    }
    return s;
}

namespace {

// G_c = sum_{k>=1} c^k (1-t)^(k-1) z^k / k!
TruncatedSeries g_series(unsigned c, unsigned order) {
    const RatPoly one_minus_t(std::vector<Rat>{Rat(1), Rat(-1)});
    TruncatedSeries s(order);
    RatPoly pw(Rat(1));  // c^k (1-t)^(k-1) / k!
    for (unsigned k = 1; k <= order; ++k) {
        pw *= rat_frac(c, k);
        if (k > 1) pw *= one_minus_t;
        s.set_coeff(k, pw);
    }
    return s;
}

}  // namespace

TruncatedSeries eulerian_egf(SeriesId id, unsigned order) {
    const RatPoly t_poly(std::vector<Rat>{Rat(0), Rat(1)});
    const RatPoly one_minus_t(std::vector<Rat>{Rat(1), Rat(-1)});
    const RatPoly two(Rat(2));

    auto denom = [&](unsigned c) {
        TruncatedSeries d = g_series(c, order);
        d *= t_poly;
        return TruncatedSeries::constant(RatPoly(Rat(1)), order) - d;
    };

    switch (id) {
        case SeriesId::A:
            return TruncatedSeries::constant(RatPoly(Rat(1)), order).divide_by(denom(1));
        case SeriesId::affA:
            return TruncatedSeries::z(order).divide_by(denom(1));
        case SeriesId::affC:
            return TruncatedSeries::constant(RatPoly(Rat(1)), order).divide_by(denom(2));
        case SeriesId::BC:
            return exp_series(one_minus_t, order).divide_by(denom(2));
        case SeriesId::D: {
            TruncatedSeries num = exp_series(one_minus_t, order) - TruncatedSeries::z(order);
            return num.divide_by(denom(2));
        }
        case SeriesId::affB: {
            // 2 (1 - t z E)
            TruncatedSeries num = exp_series(one_minus_t, order).shift_z(1);
            num *= t_poly;
            num = TruncatedSeries::constant(RatPoly(Rat(1)), order) - num;
            num *= two;
            return num.divide_by(denom(2));
        }
        case SeriesId::affD: {
            // 2 (1 + t z^2 - 2 t z E)
            TruncatedSeries num = exp_series(one_minus_t, order).shift_z(1);
            num *= t_poly;
            num *= two;
            TruncatedSeries z2 = TruncatedSeries::z(order).shift_z(1);
            z2 *= t_poly;
            num = TruncatedSeries::constant(RatPoly(Rat(1)), order) + z2 - num;
            num *= two;
            return num.divide_by(denom(2));
        }
    }
    throw std::invalid_argument("eulerian_egf: unknown series");
}

Polynomial egf_coefficient(const TruncatedSeries& s, unsigned n) {
    RatPoly c = s.coeff(n);
    c *= Rat(factorial(n));
    return c.to_integer();
}

Polynomial egf_coefficient(SeriesId id, unsigned n) {
    return egf_coefficient(eulerian_egf(id, n), n);
}

unsigned egf_min_window(SeriesId id) {
    switch (id) {
        case SeriesId::A:
        case SeriesId::BC:
        case SeriesId::affC:
            return 1;
        case SeriesId::D:
        case SeriesId::affA:
        case SeriesId::affB:
            return 2;
        case SeriesId::affD:
            return 3;
    }
    throw std::invalid_argument("egf_min_window: unknown series");
}

namespace {

Polynomial finish_extraction(SeriesId id, unsigned n, Polynomial value) {
    if (id != SeriesId::A) return value;
    // A-series coefficients are t * (Eulerian polynomial of S_n).
    if (value.coeff(0) != 0)
        throw consistency_error("eulerian_from_egf: A-series coefficient at z^" +
                                std::to_string(n) + " not divisible by t");
    std::vector<Int> shifted(value.coeffs().begin() + (value.is_zero() ? 0 : 1),
                             value.coeffs().end());
    return Polynomial(std::move(shifted));
}

}  // namespace

Polynomial eulerian_from_egf(SeriesId id, unsigned n) {
    if (n < egf_min_window(id))
        throw std::domain_error(
            "eulerian_from_egf: index carries a convention value, not a group polynomial; "
            "use egf_coefficient for the raw series coefficient");
    return finish_extraction(id, n, egf_coefficient(id, n));
}

std::vector<Polynomial> eulerian_from_egf_upto(SeriesId id, unsigned n_max) {
    const TruncatedSeries s = eulerian_egf(id, n_max);
    std::vector<Polynomial> out(n_max + 1);
    for (unsigned n = egf_min_window(id); n <= n_max; ++n)
        out[n] = finish_extraction(id, n, egf_coefficient(s, n));
    return out;
}

}  // namespace steinberg
