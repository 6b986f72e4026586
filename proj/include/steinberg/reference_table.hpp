#pragma once

// Reference values for the affine Eulerian polynomials of the exceptional
// types and of the small classical ranks, listed as the coefficients of
// t^1 .. t^n (the constant term is always zero).  Used by the `table1` CLI
// subcommand and by the acceptance suite, which recompute every row from the
// extended diagrams and compare.

#include <steinberg/diagram.hpp>
#include <steinberg/numbers.hpp>
#include <steinberg/polynomial.hpp>

#include <vector>

namespace steinberg {

struct ReferenceRow {
    WeylType type;
    unsigned rank;
    std::vector<Int> body;  // coefficients of t^1 .. t^rank
};

inline const std::vector<ReferenceRow>& reference_affine_eulerian() {
    static const std::vector<ReferenceRow> rows = {
        {WeylType::B, 3, {Int(10), Int(28), Int(10)}},
        {WeylType::B, 4, {Int(24), Int(168), Int(168), Int(24)}},
        {WeylType::B, 5, {Int(54), Int(904), Int(1924), Int(904), Int(54)}},
        {WeylType::B, 6, {Int(116), Int(4452), Int(18472), Int(18472), Int(4452), Int(116)}},
        {WeylType::B, 7,
         {Int(242), Int(20612), Int(157294), Int(288824), Int(157294), Int(20612), Int(242)}},
        {WeylType::D, 4, {Int(16), Int(80), Int(80), Int(16)}},
        {WeylType::D, 5, {Int(44), Int(464), Int(904), Int(464), Int(44)}},
        {WeylType::D, 6, {Int(104), Int(2568), Int(8848), Int(8848), Int(2568), Int(104)}},
        {WeylType::D, 7,
         {Int(228), Int(13192), Int(79580), Int(136560), Int(79580), Int(13192), Int(228)}},
        {WeylType::E6, 6, {Int(351), Int(5427), Int(20142), Int(20142), Int(5427), Int(351)}},
        {WeylType::E7, 7,
         {Int(4064), Int(115728), Int(710112), Int(1243232), Int(710112), Int(115728),
          Int(4064)}},
        {WeylType::E8, 8,
         {Int(157200), Int(9253680), Int(87417360), Int(251536560), Int(251536560),
          Int(87417360), Int(9253680), Int(157200)}},
        {WeylType::F4, 4, {Int(72), Int(504), Int(504), Int(72)}},
        {WeylType::G2, 2, {Int(6), Int(6)}},
    };
    return rows;
}

// The polynomial t^1 .. t^n form of a row (degree rank, zero constant term).
inline Polynomial reference_row_polynomial(const ReferenceRow& row) {
    std::vector<Int> c(row.body.size() + 1, Int(0));
    for (std::size_t k = 0; k < row.body.size(); ++k) c[k + 1] = row.body[k];
    return Polynomial(std::move(c));
}

}  // namespace steinberg
