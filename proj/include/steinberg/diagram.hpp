#pragma once

// Extended (affine) Coxeter diagrams of the irreducible Weyl groups, the
// classifier for their proper subdiagrams, and the closed-form flag Eulerian
// polynomial
//
//     sum over proper subsets J of the node set [0, n] of
//         |W| / |W_J| * prod_{j in J} (1 - t_j) * prod_{j not in J} t_j,
//
// where W_J is the (finite) standard parabolic subgroup spanned by the nodes
// in J.  |W_J| is obtained by classifying the induced subdiagram into
// irreducible finite types and multiplying their orders.
//
// Classical diagrams are generated from explicit root coordinates; the bond
// label between two roots a, b comes from the exact rational
// <a,b>^2 / (<a,a><b,b>)  (0, 1/4, 1/2, 3/4, 1  <->  m = 2, 3, 4, 6, oo).
// The exceptional diagrams are tabulated.

#include <steinberg/flag_polynomial.hpp>
#include <steinberg/numbers.hpp>
#include <steinberg/signed_permutation.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace steinberg {

enum class WeylType : unsigned char { A, B, C, D, E6, E7, E8, F4, G2 };

// The classical Weyl family behind a type, when there is one.
std::optional<Family> classical_family(WeylType t);

inline constexpr unsigned infinite_bond = std::numeric_limits<unsigned>::max();

class CoxeterDiagram {
  public:
    explicit CoxeterDiagram(unsigned n);  // nodes 0..n, no edges

    unsigned rank() const { return n_; }
    unsigned nodes() const { return n_ + 1; }

    // Bond label m(i, j): 2 means "no edge"; infinite_bond is allowed.
    unsigned bond(unsigned i, unsigned j) const;
    void set_bond(unsigned i, unsigned j, unsigned m);

    bool operator==(const CoxeterDiagram&) const = default;

  private:
    unsigned n_;
    std::vector<unsigned> m_;  // (n+1) x (n+1), symmetric, diagonal 1
};

struct IrreducibleType {
    enum class Series : unsigned char { A, BC, D, E6, E7, E8, F4, G2, H3, H4, I2 };
    Series series;
    unsigned rank;
    unsigned dihedral_m = 0;  // only for I2(m)

    Int order() const;
    auto operator<=>(const IrreducibleType&) const = default;
};

// Thrown when a subdiagram is not a disjoint union of finite irreducible
// types; for the diagrams produced here that indicates malformed input
// (e.g. a subset that is not proper).
struct classification_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Ranks accepted: A >= 1, B >= 2, C >= 1, D >= 3, and the exceptional types
// only with their own rank.  Throws std::domain_error otherwise.
CoxeterDiagram extended_diagram(WeylType t, unsigned n);

// Order of the finite Weyl group W of the given type.
Int weyl_order(WeylType t, unsigned n);

// Decompose the subdiagram induced on the node subset J (a bitmask) into
// irreducible finite types, sorted.  J must consist of existing nodes; the
// empty set yields an empty list.
std::vector<IrreducibleType> classify_subdiagram(const CoxeterDiagram& d, std::uint64_t J);

// |W_J| = product of the component orders (1 for the empty set).
Int subgroup_order(const CoxeterDiagram& d, std::uint64_t J);

// The displayed sum over proper subsets of [0, n].  Every |W|/|W_J| is an
// exact integer division (consistency_error otherwise).
FlagPolynomial affine_flag_eulerian(WeylType t, unsigned n);

}  // namespace steinberg
