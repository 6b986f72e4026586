#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <steinberg/torus.hpp>

#include <initializer_list>

using namespace steinberg;

namespace {

std::uint64_t mask_of(std::initializer_list<unsigned> idx, unsigned n) {
    return indices_to_subset(std::vector<unsigned>(idx), n);
}

}  // namespace

TEST_CASE("reduced torus of the smallest simply laced group") {
    const TorusModel m = build_torus(WeylType::A, 2);
    CHECK(m.type == WeylType::A);
    CHECK(m.rank == 2);
    CHECK(m.reduced);

    // f: vertices 1+1+1, edges 3+3+3, triangles 6.
    CHECK(m.flag_f.coeff(0) == 0);
    for (unsigned j = 0; j <= 2; ++j) CHECK(m.flag_f.coeff(mask_of({j}, 2)) == 1);
    CHECK(m.flag_f.coeff(mask_of({0, 1}, 2)) == 3);
    CHECK(m.flag_f.coeff(mask_of({0, 2}, 2)) == 3);
    CHECK(m.flag_f.coeff(mask_of({1, 2}, 2)) == 3);
    CHECK(m.flag_f.coeff(mask_of({0, 1, 2}, 2)) == 6);
    CHECK(face_count(m) == 18);

    // h: 1 on every proper nonempty color set, 0 on the extremes.
    CHECK(m.flag_h.coeff(0) == 0);
    CHECK(m.flag_h.coeff(mask_of({0, 1, 2}, 2)) == 0);
    for (std::uint64_t J = 1; J < 7; ++J) CHECK(m.flag_h.coeff(J) == 1);

    CHECK(euler_characteristic(m) == 0);
    CHECK(dehn_sommerville_check(m.flag_h));
    CHECK(m.flag_h == flag_descent_polynomial(Family::A, 3, Statistic::affine));
    CHECK(h_to_f(m.flag_h) == m.flag_f);
}

TEST_CASE("unreduced variant keeps the empty face") {
    const TorusModel m = build_torus(WeylType::A, 2, /*reduced=*/false);
    CHECK_FALSE(m.reduced);
    CHECK(m.flag_f.coeff(0) == 1);
    CHECK(face_count(m) == 18);  // the empty face is not a face

    CHECK(m.flag_h.coeff(0) == 1);
    for (unsigned j = 0; j <= 2; ++j) CHECK(m.flag_h.coeff(mask_of({j}, 2)) == 0);
    CHECK(m.flag_h.coeff(mask_of({0, 1}, 2)) == 2);
    CHECK(m.flag_h.coeff(mask_of({0, 2}, 2)) == 2);
    CHECK(m.flag_h.coeff(mask_of({1, 2}, 2)) == 2);
    CHECK(m.flag_h.coeff(mask_of({0, 1, 2}, 2)) == -1);

    CHECK_FALSE(dehn_sommerville_check(m.flag_h));
    CHECK(euler_characteristic(m) == 0);  // the alternating sum ignores the empty face
    CHECK(h_to_f(m.flag_h) == m.flag_f);
}

TEST_CASE("reduced torus of the rank-two symplectic group") {
    const TorusModel m = build_torus(WeylType::C, 2);

    CHECK(m.flag_f.coeff(mask_of({0}, 2)) == 1);
    CHECK(m.flag_f.coeff(mask_of({1}, 2)) == 1);
    CHECK(m.flag_f.coeff(mask_of({2}, 2)) == 2);
    CHECK(m.flag_f.coeff(mask_of({0, 1}, 2)) == 4);
    CHECK(m.flag_f.coeff(mask_of({0, 2}, 2)) == 4);
    CHECK(m.flag_f.coeff(mask_of({1, 2}, 2)) == 4);
    CHECK(m.flag_f.coeff(mask_of({0, 1, 2}, 2)) == 8);

    CHECK(m.flag_h.coeff(mask_of({0}, 2)) == 1);
    CHECK(m.flag_h.coeff(mask_of({1}, 2)) == 1);
    CHECK(m.flag_h.coeff(mask_of({2}, 2)) == 2);
    CHECK(m.flag_h.coeff(mask_of({0, 1}, 2)) == 2);
    CHECK(m.flag_h.coeff(mask_of({0, 2}, 2)) == 1);
    CHECK(m.flag_h.coeff(mask_of({1, 2}, 2)) == 1);
    CHECK(m.flag_h.coeff(mask_of({0, 1, 2}, 2)) == 0);

    CHECK(euler_characteristic(m) == 0);
    CHECK(dehn_sommerville_check(m.flag_h));
    CHECK(m.flag_h == flag_descent_polynomial(Family::C, 2, Statistic::affine));
}

TEST_CASE("B2 and C2 tori differ as flags but not univariately") {
    const TorusModel b = build_torus(WeylType::B, 2);
    const TorusModel c = build_torus(WeylType::C, 2);
    CHECK(b.flag_h != c.flag_h);
    CHECK(b.flag_h.coeff(mask_of({1}, 2)) == 2);  // the 4-bonds meet at node 1
    CHECK(specialize_all(b.flag_h) == specialize_all(c.flag_h));
    CHECK(specialize_all(b.flag_h) == Polynomial(std::vector<Int>{Int(0), Int(4), Int(4)}));
}

TEST_CASE("structural invariants across the types") {
    const std::vector<std::pair<WeylType, unsigned>> cases = {
        {WeylType::A, 1}, {WeylType::A, 3}, {WeylType::B, 3}, {WeylType::C, 3},
        {WeylType::D, 4}, {WeylType::G2, 2}, {WeylType::F4, 4}, {WeylType::E6, 6},
        {WeylType::E7, 7}, {WeylType::E8, 8},
    };
    for (const auto& [t, n] : cases) {
        CAPTURE(n);
        const TorusModel m = build_torus(t, n);
        CHECK(euler_characteristic(m) == 0);
        CHECK(dehn_sommerville_check(m.flag_h));
        CHECK(h_to_f(m.flag_h) == m.flag_f);
        CHECK(m.flag_f.coeff(m.flag_f.full_mask()) == weyl_order(t, n));
        // The unreduced variant only adds the empty face to the f-vector.
        const TorusModel u = build_torus(t, n, false);
        CHECK(u.flag_f.coeff(0) == 1);
        CHECK(face_count(u) == face_count(m));
        CHECK(euler_characteristic(u) == 0);
    }
}

TEST_CASE("faces partition into parabolic cosets") {
    CHECK(coset_partition_certificate(WeylType::A, 2));
    CHECK(coset_partition_certificate(WeylType::C, 2));
    CHECK(coset_partition_certificate(WeylType::B, 3));
    CHECK(coset_partition_certificate(WeylType::D, 4));
    CHECK_THROWS_AS((void)coset_partition_certificate(WeylType::F4, 4),
                    std::invalid_argument);
}

TEST_CASE("rank guards propagate") {
    CHECK_THROWS_AS((void)build_torus(WeylType::D, 2), std::domain_error);
    CHECK_THROWS_AS((void)build_torus(WeylType::E6, 4), std::domain_error);
}
