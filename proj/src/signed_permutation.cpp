#include <steinberg/signed_permutation.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace steinberg {

Int group_cardinality(Family f, unsigned n) {
    if (n == 0) throw std::domain_error("group_cardinality: window length must be positive");
    switch (f) {
        case Family::A:
            return factorial(n);
        case Family::B:
        case Family::C:
            return pow2(n) * factorial(n);
        case Family::D:
            if (n < 2) throw std::domain_error("group_cardinality: family D needs n >= 2");
            return pow2(n - 1) * factorial(n);
    }
    throw std::invalid_argument("group_cardinality: unknown family");
}

unsigned min_window(Family f, Statistic s) {
    const bool aff = s == Statistic::affine;
    switch (f) {
        case Family::A:
            return aff ? 2 : 1;
        case Family::B:
            return aff ? 2 : 1;
        case Family::C:
            return 1;
        case Family::D:
            return aff ? 3 : 2;
    }
    throw std::invalid_argument("min_window: unknown family");
}

void validate(const GroupElement& e) {
    const auto& w = e.window;
    const unsigned n = static_cast<unsigned>(w.size());
    if (n == 0) throw std::invalid_argument("validate: empty window");
    std::vector<bool> seen(n + 1, false);
    unsigned negatives = 0;
    for (int v : w) {
        const unsigned a = static_cast<unsigned>(v < 0 ? -v : v);
        if (a == 0 || a > n || seen[a])
            throw std::invalid_argument("validate: window is not a signed permutation of 1..n");
        seen[a] = true;
        if (v < 0) ++negatives;
    }
    if (e.family == Family::A && negatives > 0)
        throw std::invalid_argument("validate: family A windows must be positive");
    if (e.family == Family::D && (negatives % 2 != 0))
        throw std::invalid_argument("validate: family D needs an even number of negative entries");
    if (e.family == Family::D && n < 2)
        throw std::invalid_argument("validate: family D needs n >= 2");
}

std::uint64_t descent_mask(Family f, Statistic s, std::span<const int> w) {
    const std::size_t n = w.size();
    std::uint64_t m = 0;
    if (f == Family::A) {
        for (std::size_t i = 1; i < n; ++i)
            if (w[i - 1] > w[i]) m |= std::uint64_t(1) << i;
        if (s == Statistic::affine && w[n - 1] > w[0]) m |= 1;
        return m;
    }
    // B, C, D share the comparisons at colors 2..n.
    for (std::size_t i = 2; i <= n; ++i)
        if (w[i - 2] > w[i - 1]) m |= std::uint64_t(1) << i;
    if (f == Family::D) {
        if (w[0] + w[1] < 0) m |= 2;
    } else {
        if (w[0] < 0) m |= 2;
    }
    if (s == Statistic::affine) {
        const bool zero_descent = (f == Family::C) ? (w[n - 1] > 0)
                                                   : (w[n - 2] + w[n - 1] > 0);
        if (zero_descent) m |= 1;
    }
    return m;
}

std::vector<unsigned> descent_set(const GroupElement& e, Statistic s) {
    validate(e);
    const unsigned n = static_cast<unsigned>(e.window.size());
    if (n < min_window(e.family, s))
        throw std::domain_error("descent_set: window too short for this family/statistic");
    return subset_to_indices(descent_mask(e.family, s, e.window));
}

ElementStream::ElementStream(Family f, unsigned n) : family_(f), n_(n) {
    group_cardinality(f, n);  // validates the (family, n) pair
    perm_.resize(n);
    std::iota(perm_.begin(), perm_.end(), 1);
}

bool ElementStream::next(std::vector<int>& out) {
    if (done_) return false;
    if (family_ == Family::D) {
        // Skip sign vectors with odd parity.
        while (sign_ < (std::uint64_t(1) << n_) && (std::popcount(sign_) & 1)) ++sign_;
    }
    out.resize(n_);
    for (unsigned i = 0; i < n_; ++i)
        out[i] = (sign_ >> i) & 1 ? -perm_[i] : perm_[i];
    // Advance: sign counter first, then the permutation.
    const std::uint64_t sign_end = family_ == Family::A ? 1 : (std::uint64_t(1) << n_);
    do {
        ++sign_;
    } while (family_ == Family::D && sign_ < sign_end && (std::popcount(sign_) & 1));
    if (sign_ >= sign_end) {
        sign_ = 0;
        if (!std::next_permutation(perm_.begin(), perm_.end())) done_ = true;
    }
    return true;
}

FlagPolynomial flag_descent_polynomial(Family f, unsigned n, Statistic s) {
    if (n < min_window(f, s))
        throw std::domain_error("flag_descent_polynomial: window length below the family minimum");
    const unsigned rank = (f == Family::A) ? n - 1 : n;
    std::vector<unsigned long> counts(std::size_t(1) << (rank + 1), 0);
    for_each_window(f, n, [&](std::span<const int> w) {
        ++counts[descent_mask(f, s, w)];
    });
    FlagPolynomial p(rank);
    for (std::uint64_t m = 0; m < counts.size(); ++m)
        if (counts[m]) p.set(m, Int(counts[m]));
    return p;
}

Polynomial descent_polynomial(Family f, unsigned n, Statistic s) {
    if (n < min_window(f, s))
        throw std::domain_error("descent_polynomial: window length below the family minimum");
    const unsigned rank = (f == Family::A) ? n - 1 : n;
    std::vector<unsigned long> counts(rank + 2, 0);
    for_each_window(f, n, [&](std::span<const int> w) {
        ++counts[std::popcount(descent_mask(f, s, w))];
    });
    std::vector<Int> coeffs(counts.begin(), counts.end());
    return Polynomial(std::move(coeffs));
}

PeakCounts peak_counts(std::span<const int> u) {
    const std::size_t n = u.size();
    if (n == 0) throw std::invalid_argument("peak_counts: empty permutation");
    PeakCounts pc;
    auto at = [&](std::size_t i) -> int {  // u_0 = u_{n+1} = 0
        return (i == 0 || i == n + 1) ? 0 : u[i - 1];
    };
    for (std::size_t i = 1; i <= n; ++i) {
        if (at(i - 1) < at(i) && at(i) > at(i + 1)) {
            ++pc.extended;
            if (i <= n - 1) {
                ++pc.left;
                if (i >= 2) ++pc.interior;
            }
        }
    }
    return pc;
}

unsigned tail_weight_twice(std::span<const int> u) {
    const std::size_t n = u.size();
    if (n < 2) throw std::domain_error("tail_weight_twice: needs at least two entries");
    const int a = n >= 3 ? u[n - 3] : 0;
    const int b = u[n - 2];
    const int c = u[n - 1];
    if (a > b && b > c) return 2;
    if (a > c && c > b) return 0;
    return 1;
}

}  // namespace steinberg
