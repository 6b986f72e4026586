#pragma once

// Face enumeration of the (reduced) Steinberg torus of an irreducible Weyl
// group: the boolean-lattice-graded flag f-vector
//
//     f_J = |W| / |W_{[0,n] \ J}|      (J != empty),
//
// its flag h-vector, the reduced Euler characteristic, and an enumeration
// certificate that the faces of each color set partition into parabolic
// cosets (equivalently, f_J counts the group elements whose affine descent
// set is contained in J).
//
// "Reduced" deletes the empty face (f_empty = 0); the unreduced variant keeps
// it (f_empty = 1), which destroys the nonnegativity of the flag h-vector.

#include <steinberg/diagram.hpp>
#include <steinberg/flag_polynomial.hpp>

namespace steinberg {

struct TorusModel {
    WeylType type;
    unsigned rank = 0;
    bool reduced = true;
    FlagPolynomial flag_f;
    FlagPolynomial flag_h;

    TorusModel() : flag_f(0), flag_h(0) {}
};

TorusModel build_torus(WeylType t, unsigned n, bool reduced = true);

// sum_{J != empty} (-1)^(|J|-1) f_J; zero for these tori.
Int euler_characteristic(const TorusModel& m);

// Total number of nonempty faces, sum_J f_J.
Int face_count(const TorusModel& m);

// For every proper color set J, count the elements whose affine descent set
// avoids J by direct enumeration and compare |W| with count * |W_J|.
// Only the classical types can be enumerated; exceptional types throw
// std::invalid_argument.
bool coset_partition_certificate(WeylType t, unsigned n);

}  // namespace steinberg
