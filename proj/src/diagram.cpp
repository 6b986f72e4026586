#include <steinberg/diagram.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace steinberg {

std::optional<Family> classical_family(WeylType t) {
    switch (t) {
        case WeylType::A: return Family::A;
        case WeylType::B: return Family::B;
        case WeylType::C: return Family::C;
        case WeylType::D: return Family::D;
        default: return std::nullopt;
    }
}

CoxeterDiagram::CoxeterDiagram(unsigned n) : n_(n), m_((n + 1) * (n + 1), 2) {
    if (n + 1 >= 62) throw std::invalid_argument("CoxeterDiagram: too many nodes");
    for (unsigned i = 0; i <= n; ++i) m_[i * (n + 1) + i] = 1;
}

unsigned CoxeterDiagram::bond(unsigned i, unsigned j) const {
    if (i > n_ || j > n_) throw std::invalid_argument("CoxeterDiagram::bond: node out of range");
    return m_[i * (n_ + 1) + j];
}

void CoxeterDiagram::set_bond(unsigned i, unsigned j, unsigned m) {
    if (i > n_ || j > n_ || i == j)
        throw std::invalid_argument("CoxeterDiagram::set_bond: bad node pair");
    if (m < 2 || (m > 6 && m != infinite_bond) || m == 5)
        throw std::invalid_argument("CoxeterDiagram::set_bond: bond label must be 2,3,4,6 or infinity");
    m_[i * (n_ + 1) + j] = m;
    m_[j * (n_ + 1) + i] = m;
}

Int IrreducibleType::order() const {
    switch (series) {
        case Series::A: return factorial(rank + 1);
        case Series::BC: return pow2(rank) * factorial(rank);
        case Series::D: return pow2(rank - 1) * factorial(rank);
        case Series::E6: return Int(51840);
        case Series::E7: return Int(2903040);
        case Series::E8: return Int(696729600);
        case Series::F4: return Int(1152);
        case Series::G2: return Int(12);
        case Series::H3: return Int(120);
        case Series::H4: return Int(14400);
        case Series::I2: return Int(2) * Int(dihedral_m);
    }
    throw std::invalid_argument("IrreducibleType::order: unknown series");
}

namespace {

// Integer coordinate vectors for the simple roots (indices 1..n) and the
// negative of the highest root (index 0) of the classical families.
std::vector<std::vector<int>> classical_roots(WeylType t, unsigned n) {
    std::vector<std::vector<int>> r(n + 1);
    auto e = [&](unsigned dim, unsigned i, int c) {
        std::vector<int> v(dim, 0);
        v[i - 1] = c;
        return v;
    };
    auto add = [](std::vector<int> a, const std::vector<int>& b) {
        for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
        return a;
    };
    auto neg = [](std::vector<int> a) {
        for (auto& x : a) x = -x;
        return a;
    };
    switch (t) {
        case WeylType::A: {  // ambient R^(n+1); highest root e_{n+1} - e_1
            const unsigned dim = n + 1;
            for (unsigned i = 1; i <= n; ++i) r[i] = add(e(dim, i + 1, 1), e(dim, i, -1));
            r[0] = add(e(dim, 1, 1), e(dim, n + 1, -1));
            return r;
        }
        case WeylType::B: {  // alpha_1 = e_1, highest root e_{n-1} + e_n
            for (unsigned i = 2; i <= n; ++i) r[i] = add(e(n, i, 1), e(n, i - 1, -1));
            r[1] = e(n, 1, 1);
            r[0] = neg(add(e(n, n - 1, 1), e(n, n, 1)));
            return r;
        }
        case WeylType::C: {  // alpha_1 = 2e_1, highest root 2e_n
            for (unsigned i = 2; i <= n; ++i) r[i] = add(e(n, i, 1), e(n, i - 1, -1));
            r[1] = e(n, 1, 2);
            r[0] = e(n, n, -2);
            return r;
        }
        case WeylType::D: {  // alpha_1 = e_1 + e_2, highest root e_{n-1} + e_n
            for (unsigned i = 3; i <= n; ++i) r[i] = add(e(n, i, 1), e(n, i - 1, -1));
            r[1] = add(e(n, 1, 1), e(n, 2, 1));
            r[2] = add(e(n, 2, 1), e(n, 1, -1));
            r[0] = neg(add(e(n, n - 1, 1), e(n, n, 1)));
            return r;
        }
        default:
            throw std::invalid_argument("classical_roots: not a classical type");
    }
}

long dot(const std::vector<int>& a, const std::vector<int>& b) {
    long s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += long(a[k]) * b[k];
    return s;
}

// Bond label from the exact value of 4 <a,b>^2 / (<a,a><b,b>).
unsigned bond_from_angle(const std::vector<int>& a, const std::vector<int>& b) {
    const long num = 4 * dot(a, b) * dot(a, b);
    const long den = dot(a, a) * dot(b, b);
    if (num == 0) return 2;
    if (num == den) return 3;      // 4c == 1
    if (num == 2 * den) return 4;  // 4c == 2
    if (num == 3 * den) return 6;  // 4c == 3
    if (num == 4 * den) return infinite_bond;  // proportional roots
    throw consistency_error("bond_from_angle: unexpected root angle");
}

struct TabulatedEdge {
    unsigned i, j, m;
};

CoxeterDiagram from_edges(unsigned n, std::initializer_list<TabulatedEdge> edges) {
    CoxeterDiagram d(n);
    for (const auto& e : edges) d.set_bond(e.i, e.j, e.m);
    return d;
}

}  // namespace

CoxeterDiagram extended_diagram(WeylType t, unsigned n) {
    switch (t) {
        case WeylType::A:
            if (n < 1) throw std::domain_error("extended_diagram: type A needs rank >= 1");
            break;
        case WeylType::B:
            if (n < 2) throw std::domain_error("extended_diagram: type B needs rank >= 2");
            break;
        case WeylType::C:
            if (n < 1) throw std::domain_error("extended_diagram: type C needs rank >= 1");
            break;
        case WeylType::D:
            if (n < 3) throw std::domain_error("extended_diagram: type D needs rank >= 3");
            break;
        case WeylType::E6:
            if (n != 6) throw std::domain_error("extended_diagram: E6 has rank 6");
            return from_edges(6, {{1, 3, 3}, {3, 4, 3}, {4, 5, 3}, {5, 6, 3}, {2, 4, 3}, {0, 2, 3}});
        case WeylType::E7:
            if (n != 7) throw std::domain_error("extended_diagram: E7 has rank 7");
            return from_edges(
                7, {{0, 1, 3}, {1, 3, 3}, {3, 4, 3}, {4, 5, 3}, {5, 6, 3}, {6, 7, 3}, {2, 4, 3}});
        case WeylType::E8:
            if (n != 8) throw std::domain_error("extended_diagram: E8 has rank 8");
            return from_edges(
                8,
                {{1, 3, 3}, {3, 4, 3}, {4, 5, 3}, {5, 6, 3}, {6, 7, 3}, {7, 8, 3}, {2, 4, 3}, {0, 8, 3}});
        case WeylType::F4:
            if (n != 4) throw std::domain_error("extended_diagram: F4 has rank 4");
            return from_edges(4, {{0, 1, 3}, {1, 2, 3}, {2, 3, 4}, {3, 4, 3}});
        case WeylType::G2:
            if (n != 2) throw std::domain_error("extended_diagram: G2 has rank 2");
            return from_edges(2, {{0, 2, 3}, {1, 2, 6}});
    }
    const auto roots = classical_roots(t, n);
    CoxeterDiagram d(n);
    for (unsigned i = 0; i <= n; ++i)
        for (unsigned j = i + 1; j <= n; ++j) {
            const unsigned m = bond_from_angle(roots[i], roots[j]);
            if (m != 2) d.set_bond(i, j, m);
        }
    return d;
}

Int weyl_order(WeylType t, unsigned n) {
    switch (t) {
        case WeylType::A: return factorial(n + 1);
        case WeylType::B:
        case WeylType::C: return pow2(n) * factorial(n);
        case WeylType::D: return pow2(n - 1) * factorial(n);
        case WeylType::E6: return Int(51840);
        case WeylType::E7: return Int(2903040);
        case WeylType::E8: return Int(696729600);
        case WeylType::F4: return Int(1152);
        case WeylType::G2: return Int(12);
    }
    throw std::invalid_argument("weyl_order: unknown type");
}

namespace {

IrreducibleType classify_component(const CoxeterDiagram& d, const std::vector<unsigned>& comp) {
    using Series = IrreducibleType::Series;
    const unsigned k = static_cast<unsigned>(comp.size());
    if (k == 1) return {Series::A, 1};

    // Degrees within the component, infinite bonds rejected outright.
    std::vector<unsigned> degree(k, 0);
    unsigned edge_count = 0;
    for (unsigned a = 0; a < k; ++a)
        for (unsigned b = a + 1; b < k; ++b) {
            const unsigned m = d.bond(comp[a], comp[b]);
            if (m == infinite_bond)
                throw classification_error("classify_subdiagram: infinite bond in a component");
            if (m > 2) {
                ++degree[a];
                ++degree[b];
                ++edge_count;
            }
        }
    if (edge_count != k - 1)
        throw classification_error("classify_subdiagram: component contains a cycle");

    std::vector<unsigned> branch_local;
    for (unsigned a = 0; a < k; ++a) {
        if (degree[a] > 3)
            throw classification_error("classify_subdiagram: node of degree > 3");
        if (degree[a] == 3) branch_local.push_back(a);
    }
    if (branch_local.size() > 1)
        throw classification_error("classify_subdiagram: more than one branch node");

    auto bond_of = [&](unsigned a, unsigned b) { return d.bond(comp[a], comp[b]); };

    if (branch_local.empty()) {
        // A path: order it from an endpoint and read off the bond labels.
        unsigned start = 0;
        while (degree[start] != 1) ++start;
        std::vector<unsigned> path{start};
        std::vector<bool> used(k, false);
        used[start] = true;
        while (path.size() < k) {
            const unsigned cur = path.back();
            for (unsigned b = 0; b < k; ++b)
                if (!used[b] && bond_of(cur, b) > 2) {
                    path.push_back(b);
                    used[b] = true;
                    break;
                }
        }
        std::vector<unsigned> labels(k - 1);
        for (unsigned a = 0; a + 1 < k; ++a) labels[a] = bond_of(path[a], path[a + 1]);
        const unsigned heavy =
            static_cast<unsigned>(std::count_if(labels.begin(), labels.end(),
                                                [](unsigned m) { return m > 3; }));
        if (heavy == 0) return {Series::A, k};
        if (heavy == 1) {
            const auto it = std::find_if(labels.begin(), labels.end(),
                                         [](unsigned m) { return m > 3; });
            const unsigned pos = static_cast<unsigned>(it - labels.begin());
            if (*it == 4) {
                if (pos == 0 || pos == k - 2) return {Series::BC, k};
                if (k == 4 && pos == 1) return {Series::F4, 4};
                throw classification_error("classify_subdiagram: misplaced 4-bond");
            }
            if (*it == 6 && k == 2) return {Series::G2, 2};
            throw classification_error("classify_subdiagram: unrecognized bond pattern");
        }
        throw classification_error("classify_subdiagram: too many marked bonds");
    }

    // One branch node: arms must be simply laced paths.
    for (unsigned a = 0; a < k; ++a)
        for (unsigned b = a + 1; b < k; ++b)
            if (bond_of(a, b) > 3)
                throw classification_error("classify_subdiagram: marked bond on a branched diagram");
    const unsigned center = branch_local[0];
    std::vector<unsigned> arms;
    std::vector<bool> used(k, false);
    used[center] = true;
    for (unsigned b = 0; b < k; ++b) {
        if (bond_of(center, b) <= 2 || used[b]) continue;
        unsigned len = 0, cur = b;
        bool grown = true;
        while (grown) {
            used[cur] = true;
            ++len;
            grown = false;
            for (unsigned c = 0; c < k; ++c)
                if (!used[c] && c != center && bond_of(cur, c) > 2) {
                    cur = c;
                    grown = true;
                    break;
                }
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() != 3)
        throw classification_error("classify_subdiagram: branch node without three arms");
    if (arms[0] == 1 && arms[1] == 1) return {Series::D, arms[2] + 3};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2) return {Series::E6, 6};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3) return {Series::E7, 7};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] == 4) return {Series::E8, 8};
    throw classification_error("classify_subdiagram: arm lengths match no finite type");
}

}  // namespace

std::vector<IrreducibleType> classify_subdiagram(const CoxeterDiagram& d, std::uint64_t J) {
    if (J > ((std::uint64_t(1) << d.nodes()) - 1))
        throw std::invalid_argument("classify_subdiagram: subset outside the node range");
    std::vector<IrreducibleType> result;
    std::uint64_t remaining = J;
    while (remaining) {
        // Grow the connected component of the lowest remaining node.
        std::uint64_t comp = std::uint64_t(1) << std::countr_zero(remaining);
        for (;;) {
            std::uint64_t grown = comp;
            for (unsigned i = 0; i < d.nodes(); ++i) {
                if (!((comp >> i) & 1)) continue;
                for (unsigned j = 0; j < d.nodes(); ++j)
                    if (((remaining >> j) & 1) && d.bond(i, j) > 2) grown |= std::uint64_t(1) << j;
            }
            if (grown == comp) break;
            comp = grown;
        }
        remaining &= ~comp;
        result.push_back(classify_component(d, subset_to_indices(comp)));
    }
    std::sort(result.begin(), result.end());
    return result;
}

Int subgroup_order(const CoxeterDiagram& d, std::uint64_t J) {
    Int order = 1;
    for (const auto& t : classify_subdiagram(d, J)) order *= t.order();
    return order;
}

FlagPolynomial affine_flag_eulerian(WeylType t, unsigned n) {
    const CoxeterDiagram d = extended_diagram(t, n);
    const Int w_order = weyl_order(t, n);
    const std::uint64_t full = (std::uint64_t(1) << (n + 1)) - 1;
    std::vector<Int> acc(full + 1, Int(0));
    for (std::uint64_t J = 0; J < full; ++J) {  // proper subsets only
        Int q;
        const Int par = subgroup_order(d, J);
        if (!mpz_divisible_p(w_order.get_mpz_t(), par.get_mpz_t()))
            throw consistency_error("affine_flag_eulerian: parabolic order does not divide |W|");
        mpz_divexact(q.get_mpz_t(), w_order.get_mpz_t(), par.get_mpz_t());
        // prod_{j in J}(1 - t_j) prod_{j not in J} t_j expands over I subset J
        // as (-1)^|I| times the monomial on I union complement(J).
        const std::uint64_t comp = full ^ J;
        std::uint64_t I = J;
        for (;;) {
            if (std::popcount(I) & 1)
                acc[I | comp] -= q;
            else
                acc[I | comp] += q;
            if (I == 0) break;
            I = (I - 1) & J;
        }
    }
    FlagPolynomial p(n);
    for (std::uint64_t m = 0; m <= full; ++m)
        if (acc[m] != 0) p.set(m, std::move(acc[m]));
    return p;
}

}  // namespace steinberg
