#pragma once

// Window notation for the classical Weyl groups and their descent statistics.
//
// An element is a window (w_1, ..., w_n):
//   family A:  a permutation of 1..n            (the symmetric group S_n)
//   family B/C: a signed permutation            (|w_1|..|w_n| permute 1..n)
//   family D:  a signed permutation with an even number of negative entries
//
// The family parameter n is the window length throughout, so Family::A with
// n = 5 is S_5 (the Coxeter group A_4).  Descent colors live in [1, n] for
// the finite group (family A: [1, n-1]) and the affine statistic adds color 0:
//
//   A ordinary   i in [1,n-1]: w_i > w_{i+1}
//   A affine     adds 0 iff w_n > w_1
//   B/C ordinary 1 iff w_1 < 0 (B/C), 1 iff w_1 + w_2 < 0 (D);
//                i in [2,n]: w_{i-1} > w_i
//   C affine     adds 0 iff w_n > 0
//   B, D affine  add  0 iff w_{n-1} + w_n > 0

#include <steinberg/flag_polynomial.hpp>
#include <steinberg/numbers.hpp>
#include <steinberg/polynomial.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace steinberg {

enum class Family : unsigned char { A, B, C, D };
enum class Statistic : unsigned char { ordinary, affine };

struct GroupElement {
    Family family;
    std::vector<int> window;
};

// |W| for the given window length (A: n!, B/C: 2^n n!, D: 2^(n-1) n!).
// Throws std::domain_error for window lengths the family does not support
// (n = 0 anywhere, D with n < 2).
Int group_cardinality(Family f, unsigned n);

// Smallest window length for which the statistic is defined:
// A ordinary 1 / affine 2, B ordinary 1 / affine 2, C 1/1, D 2/3.
unsigned min_window(Family f, Statistic s);

// Throws std::invalid_argument when the window is not a valid element.
void validate(const GroupElement& e);

// Descent colors as a bitmask (bit j <=> color j).  The checked overload
// validates the element and the statistic's rank requirement; the span
// overload is the unchecked hot path used by the enumerators.
std::uint64_t descent_mask(Family f, Statistic s, std::span<const int> w);
std::vector<unsigned> descent_set(const GroupElement& e, Statistic s);

// Streams every element of the group in a fixed order: permutations in
// lexicographic order, and for each permutation all sign vectors as an
// ascending binary counter (bit i set <=> position i+1 negated); family D
// skips odd sign vectors.
class ElementStream {
  public:
    ElementStream(Family f, unsigned n);
    // Copies the next window into `out` (resized to n); false when exhausted.
    bool next(std::vector<int>& out);
    Int size() const { return group_cardinality(family_, n_); }

  private:
    Family family_;
    unsigned n_;
    bool done_ = false;
    std::uint64_t sign_ = 0;
    std::vector<int> perm_;
};

// Calls visit(std::span<const int>) for every element, same order as
// ElementStream.
template <typename F>
void for_each_window(Family f, unsigned n, F&& visit) {
    ElementStream stream(f, n);
    std::vector<int> w;
    while (stream.next(w)) visit(std::span<const int>(w));
}

// Multivariate descent generating function sum_w prod_{j in D(w)} t_j.
// Flag rank (largest color) is n for B/C/D and n-1 for A.
FlagPolynomial flag_descent_polynomial(Family f, unsigned n, Statistic s);

// Univariate specialization sum_w t^{#descents}.
Polynomial descent_polynomial(Family f, unsigned n, Statistic s);

// ---------------------------------------------------------------- peaks ----
// Peak statistics of a permutation u in S_n, with boundary values
// u_0 = u_{n+1} = 0:
//   interior: peaks at positions 2..n-1,
//   left:     peaks at positions 1..n-1 (u_0 = 0 makes position 1 possible),
//   extended: peaks at positions 1..n   (u_{n+1} = 0 makes n possible).
struct PeakCounts {
    unsigned interior = 0;
    unsigned left = 0;
    unsigned extended = 0;

    bool operator==(const PeakCounts&) const = default;
};
PeakCounts peak_counts(std::span<const int> u);

// Pairing weight of the last three entries, doubled to stay integral
// (defined for n >= 2, with u_0 = 0 standing in when n = 2):
//   2 if u_{n-2} > u_{n-1} > u_n,
//   0 if u_{n-2} > u_n > u_{n-1},
//   1 otherwise.
unsigned tail_weight_twice(std::span<const int> u);

}  // namespace steinberg
