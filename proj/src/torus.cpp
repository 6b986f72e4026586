#include <steinberg/torus.hpp>

#include <bit>
#include <stdexcept>

namespace steinberg {

TorusModel build_torus(WeylType t, unsigned n, bool reduced) {
    const CoxeterDiagram d = extended_diagram(t, n);
    const Int w_order = weyl_order(t, n);
    TorusModel m;
    m.type = t;
    m.rank = n;
    m.reduced = reduced;
    m.flag_f = FlagPolynomial(n);
    const std::uint64_t full = m.flag_f.full_mask();
    if (!reduced) m.flag_f.set(0, Int(1));
    for (std::uint64_t J = 1; J <= full; ++J) {
        Int q;
        const Int par = subgroup_order(d, full ^ J);
        if (!mpz_divisible_p(w_order.get_mpz_t(), par.get_mpz_t()))
            throw consistency_error("build_torus: parabolic order does not divide |W|");
        mpz_divexact(q.get_mpz_t(), w_order.get_mpz_t(), par.get_mpz_t());
        m.flag_f.set(J, std::move(q));
    }
    m.flag_h = f_to_h(m.flag_f);
    return m;
}

Int euler_characteristic(const TorusModel& m) {
    Int chi = 0;
    for (const auto& [mask, c] : m.flag_f.sorted_terms()) {
        if (mask == 0) continue;
        if (std::popcount(mask) & 1)
            chi += c;
        else
            chi -= c;
    }
    return chi;
}

Int face_count(const TorusModel& m) {
    Int total = 0;
    for (const auto& [mask, c] : m.flag_f.sorted_terms())
        if (mask != 0) total += c;
    return total;
}

bool coset_partition_certificate(WeylType t, unsigned n) {
    const auto fam = classical_family(t);
    if (!fam)
        throw std::invalid_argument(
            "coset_partition_certificate: exceptional types cannot be enumerated");
    const CoxeterDiagram d = extended_diagram(t, n);
    const unsigned window = (t == WeylType::A) ? n + 1 : n;
    const Int w_order = group_cardinality(*fam, window);

    // Histogram of affine descent sets, then a superset-sum: avoid[J^c]
    // counts the elements with descent set inside J^c, i.e. disjoint from J.
    const std::uint64_t full = (std::uint64_t(1) << (n + 1)) - 1;
    std::vector<unsigned long> hist(full + 1, 0);
    for_each_window(*fam, window, [&](std::span<const int> w) {
        ++hist[descent_mask(*fam, Statistic::affine, w)];
    });
    std::vector<Int> inside(hist.begin(), hist.end());
    for (unsigned b = 0; b <= n; ++b) {
        const std::uint64_t bit = std::uint64_t(1) << b;
        for (std::uint64_t m = 0; m <= full; ++m)
            if (m & bit) inside[m] += inside[m ^ bit];
    }
    for (std::uint64_t J = 0; J < full; ++J)
        if (inside[full ^ J] * subgroup_order(d, J) != w_order) return false;
    return true;
}

}  // namespace steinberg
