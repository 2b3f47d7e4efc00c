#ifndef BICLOSED_BIJECTION_HPP
#define BICLOSED_BIJECTION_HPP

#include <compare>
#include <string>
#include <vector>

#include "biclosed/root_system.hpp"
#include "biclosed/semigroup.hpp"

namespace biclosed {

// Positions (i_1..i_t) of t disjoint simple-root intervals of lengths
// (k_1..k_t) inside {1..n}, with at least one gap between intervals:
//   1 <= i_1,  i_t + k_t - 1 <= n,  i_{j+1} >= i_j + k_j + 1.
// p = n+1 - sum(k) - t counts the positions not covered by any interval
// (each interval of length k occupies k+1 chain slots).
struct PositionVector {
    int n = 0;
    std::vector<int> sizes;
    std::vector<int> positions;

    int t() const { return static_cast<int>(sizes.size()); }
    int p() const;
    void validate() const;

    friend auto operator<=>(const PositionVector&, const PositionVector&) = default;
};

// One entry of the merged chain A_1 < ... < A_t, B_1 < ... < B_p: interval
// markers (A) and gap markers (B), each subsequence keeping its own order.
struct ChainLabel {
    bool interval = false; // true: A_j, false: B_j
    int index = 0;         // 1-based within its own family

    friend auto operator<=>(const ChainLabel&, const ChainLabel&) = default;
};

using LabelSequence = std::vector<ChainLabel>;

// A_j goes after exactly i_j - 1 - sum_{l<j}(k_l + 1) of the B's.
LabelSequence interleave(const PositionVector& pv);

// Inverse of interleave for the given interval sizes.
PositionVector deinterleave(const LabelSequence& order, const std::vector<int>& sizes, int n);

std::string label_sequence_string(const LabelSequence& order); // "B1<A1<B2<A2"

// w(Phi+_{delta1,delta2}) with the deterministic coset representative: the
// chain extending the preorder lists every class ascending, and w sends u to
// the u-th chain element.
struct CanonicalBiclosed {
    Permutation w;
    SimpleSubset delta1;
    SimpleSubset delta2;

    CanonicalBiclosed() : w(Permutation::identity(1)) {}
    CanonicalBiclosed(Permutation w_, SimpleSubset d1, SimpleSubset d2)
        : w(std::move(w_)), delta1(std::move(d1)), delta2(std::move(d2)) {}

    friend bool operator==(const CanonicalBiclosed&, const CanonicalBiclosed&) = default;
};

// Pairwise dictionary between arbitrary quasitrivial tables and arbitrary
// subsets of the root system. For each a < b the restriction of F to {a,b}
// picks which of (a,b), (b,a) belong to C:
//   neither  <->  F(a,b)=a, F(b,a)=b      (first projection)
//   (a,b)    <->  F(a,b)=F(b,a)=b         (max)
//   (b,a)    <->  F(a,b)=F(b,a)=a         (min)
//   both     <->  F(a,b)=b, F(b,a)=a      (second projection)
RootSet op_to_pairs(const OpTable& f);
OpTable pairs_to_op(const RootSet& c);

// Associativity of a quasitrivial table, decided through the root system:
// true iff op_to_pairs(f) is biclosed. Agrees with is_associative everywhere.
bool associative_via_biclosed(const OpTable& f);

// The mutually inverse correspondence between biclosed sets of rank n and
// associative quasitrivial tables on n+1 elements. biclosed_to_semigroup
// uses the pairwise dictionary; semigroup_to_biclosed rebuilds the set from
// the extracted preorder via interleaving and build_psi.
OpTable biclosed_to_semigroup(const RootSet& c);
RootSet semigroup_to_biclosed(const OpTable& f);

// Independent route for the forward direction: search for a presentation
// w(Phi+_{d1,d2}) of C by scanning orthogonal pairs and permutations, then
// read the operation off the interval structure of that presentation. Never
// consults the pairwise dictionary; tests diff it against
// biclosed_to_semigroup.
OpTable biclosed_to_semigroup_interleaving(const RootSet& c);

// Canonical presentation of a biclosed set; build_psi of the result
// reproduces the input.
CanonicalBiclosed classify(const RootSet& c);

// Position vector and projection-labelled intervals underlying an
// associative quasitrivial table; delta1/delta2 are the label-1/label-2
// interval unions, w the ascending-within-class chain permutation.
struct SemigroupStructure {
    PreorderDecomposition preorder;
    PositionVector positions;
    SimpleSubset delta1;
    SimpleSubset delta2;
    Permutation w;

    SemigroupStructure() : w(Permutation::identity(1)) {}
};

SemigroupStructure analyze_semigroup(const OpTable& f);

} // namespace biclosed

#endif
