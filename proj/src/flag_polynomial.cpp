#include <steinberg/flag_polynomial.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace steinberg {

namespace {
const Int kZero = 0;

// Transform sizes are 2^(n+1); keep them comfortably in memory.
constexpr unsigned kMaxTransformRank = 24;

void check_same_rank(const FlagPolynomial& a, const FlagPolynomial& b) {
    if (a.rank() != b.rank())
        throw std::invalid_argument("flag polynomial ranks differ");
}
}  // namespace

FlagPolynomial::FlagPolynomial(unsigned n) : n_(n) {
    if (n + 1 >= 62)
        throw std::invalid_argument("FlagPolynomial: rank too large for bitmask subsets");
}

const Int& FlagPolynomial::coeff(std::uint64_t subset) const {
    auto it = terms_.find(subset);
    return it == terms_.end() ? kZero : it->second;
}

void FlagPolynomial::add(std::uint64_t subset, const Int& c) {
    if (subset > full_mask())
        throw std::invalid_argument("FlagPolynomial: subset outside the color range");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(subset, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void FlagPolynomial::set(std::uint64_t subset, Int c) {
    if (subset > full_mask())
        throw std::invalid_argument("FlagPolynomial: subset outside the color range");
    if (c == 0)
        terms_.erase(subset);
    else
        terms_[subset] = std::move(c);
}

FlagPolynomial FlagPolynomial::operator-() const {
    FlagPolynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

FlagPolynomial& FlagPolynomial::operator+=(const FlagPolynomial& o) {
    check_same_rank(*this, o);
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

FlagPolynomial& FlagPolynomial::operator-=(const FlagPolynomial& o) {
    check_same_rank(*this, o);
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

FlagPolynomial& FlagPolynomial::operator*=(const Int& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

bool FlagPolynomial::operator==(const FlagPolynomial& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
}

std::vector<std::pair<std::uint64_t, Int>> FlagPolynomial::sorted_terms() const {
    std::vector<std::pair<std::uint64_t, Int>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        const int ca = std::popcount(a.first), cb = std::popcount(b.first);
        if (ca != cb) return ca < cb;
        if (a.first == b.first) return false;
        // Lexicographic comparison of the sorted index lists: the lists share
        // a prefix exactly where the masks agree from the low end, so the
        // first differing (lowest) bit decides; the mask owning that bit has
        // the smaller index there.
        const std::uint64_t diff = a.first ^ b.first;
        return ((a.first >> std::countr_zero(diff)) & 1) != 0;
    });
    return v;
}

Int FlagPolynomial::coefficient_sum() const {
    Int s = 0;
    for (const auto& [m, c] : terms_) s += c;
    return s;
}

std::vector<unsigned> subset_to_indices(std::uint64_t mask) {
    std::vector<unsigned> idx;
    for (unsigned j = 0; mask; ++j, mask >>= 1)
        if (mask & 1) idx.push_back(j);
    return idx;
}

std::uint64_t indices_to_subset(const std::vector<unsigned>& idx, unsigned n) {
    std::uint64_t m = 0;
    for (unsigned j : idx) {
        if (j > n) throw std::invalid_argument("subset index outside the color range");
        m |= std::uint64_t(1) << j;
    }
    return m;
}

namespace {

enum class Transform { moebius, zeta };

FlagPolynomial subset_transform(const FlagPolynomial& p, Transform kind) {
    const unsigned n = p.rank();
    if (n > kMaxTransformRank)
        throw std::invalid_argument("flag transform: rank too large");
    const std::uint64_t size = std::uint64_t(1) << (n + 1);
    std::vector<Int> a(size, Int(0));
    for (const auto& [m, c] : p.sorted_terms()) a[m] = c;
    for (unsigned b = 0; b <= n; ++b) {
        const std::uint64_t bit = std::uint64_t(1) << b;
        for (std::uint64_t m = 0; m < size; ++m)
            if (m & bit) {
                if (kind == Transform::zeta)
                    a[m] += a[m ^ bit];
                else
                    a[m] -= a[m ^ bit];
            }
    }
    FlagPolynomial r(n);
    for (std::uint64_t m = 0; m < size; ++m)
        if (a[m] != 0) r.set(m, std::move(a[m]));
    return r;
}

}  // namespace

FlagPolynomial f_to_h(const FlagPolynomial& f) { return subset_transform(f, Transform::moebius); }

FlagPolynomial h_to_f(const FlagPolynomial& h) { return subset_transform(h, Transform::zeta); }

Polynomial specialize(const FlagPolynomial& p, const std::vector<VarValue>& assignment) {
    if (assignment.size() != p.rank() + 1)
        throw std::invalid_argument("specialize: need one value per color");
    std::uint64_t t_mask = 0;
    for (unsigned j = 0; j < assignment.size(); ++j)
        if (assignment[j] == VarValue::t) t_mask |= std::uint64_t(1) << j;
    std::vector<Int> coeffs(p.rank() + 2, Int(0));
    for (const auto& [m, c] : p.sorted_terms()) coeffs[std::popcount(m & t_mask)] += c;
    return Polynomial(std::move(coeffs));
}

Polynomial specialize_all(const FlagPolynomial& p) {
    return specialize(p, std::vector<VarValue>(p.rank() + 1, VarValue::t));
}

bool dehn_sommerville_check(const FlagPolynomial& h) {
    const std::uint64_t full = h.full_mask();
    for (const auto& [m, c] : h.sorted_terms())
        if (c != h.coeff(full ^ m)) return false;
    return true;
}

}  // namespace steinberg
