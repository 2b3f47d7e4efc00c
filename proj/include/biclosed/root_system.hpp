#ifndef BICLOSED_ROOT_SYSTEM_HPP
#define BICLOSED_ROOT_SYSTEM_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "biclosed/errors.hpp"

namespace biclosed {

// A root of the type-A_n system as a signed index pair over {1..n+1}.
// (a,b) with a<b is the positive root alpha_a + ... + alpha_{b-1};
// (a,b) with a>b is its negative. Negation swaps the indices.
struct Root {
    int a = 0;
    int b = 0;

    friend auto operator<=>(const Root&, const Root&) = default;
};

constexpr Root negated(Root r) { return {r.b, r.a}; }
constexpr bool is_positive(Root r) { return r.a < r.b; }

// Sum of two roots when the sum is again a root: (a,b)+(b,d) = (a,d).
// Returns nothing when the sum leaves the root system (including x = -y).
std::optional<Root> root_sum(Root x, Root y, int rank);

// Element of S_{n+1} given by its image list (1-based).
// Composition is right-to-left: compose(v)(x) = (*this)(v(x)).
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    int apply(int x) const { return images_[static_cast<std::size_t>(x) - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation compose(const Permutation& inner) const;
    Permutation inverse() const;
    bool is_identity() const;

    // Cycle notation: "(2,3)", "(1,2,3)(4,5)", identity prints as "id".
    std::string cycles() const;
    static Permutation from_cycles(const std::string& text, int degree);

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

// All of S_m in lexicographic image order.
std::vector<Permutation> symmetric_group(int degree);

// Subset of the simple-root indices {1..n}; stored sorted and unique.
struct SimpleSubset {
    std::vector<int> indices;

    SimpleSubset() = default;
    SimpleSubset(std::initializer_list<int> init);
    explicit SimpleSubset(std::vector<int> idx);

    bool contains(int i) const;
    bool empty() const { return indices.empty(); }

    // Maximal runs of consecutive indices, as (start, length) ascending.
    std::vector<std::pair<int, int>> intervals() const;

    friend auto operator<=>(const SimpleSubset&, const SimpleSubset&) = default;
};

// alpha_i and alpha_j are orthogonal iff |i-j| >= 2; subsets are orthogonal
// when that holds pairwise (in particular they are disjoint).
bool orthogonal(const SimpleSubset& d1, const SimpleSubset& d2);

// A subset of the n(n+1) roots of rank n, as a membership bitmask.
// Slot of the ordered pair (a,b), a != b, in 1..n+1:
//   slot(a,b) = (a-1)*n + (b-1) - (b > a ? 1 : 0)
// so increasing slot order is lexicographic order on (a,b). The slot layout
// is fixed; serialization lists member pairs sorted lexicographically.
// Ranks up to 7 fit the 64-bit mask; larger ranks are rejected.
class RootSet {
public:
    static constexpr int max_rank = 7;

    explicit RootSet(int rank);
    static RootSet from_mask(int rank, std::uint64_t mask);
    static RootSet from_roots(int rank, const std::vector<Root>& roots);
    static RootSet standard_positive(int rank);
    static RootSet full(int rank);

    int rank() const { return n_; }
    int universe_size() const { return n_ * (n_ + 1); }
    std::uint64_t mask() const { return bits_; }

    bool contains(Root r) const;
    void insert(Root r);
    void erase(Root r);
    std::size_t size() const;
    bool empty() const { return bits_ == 0; }

    std::vector<Root> roots() const; // lexicographic by (a,b)

    RootSet complement() const;
    RootSet negated() const;
    bool subset_of(const RootSet& other) const;

    friend bool operator==(const RootSet&, const RootSet&) = default;

private:
    void check_root(Root r) const;

    int n_;
    std::uint64_t bits_ = 0;
};

int pair_slot(int rank, int a, int b);
Root slot_pair(int rank, int slot);

// Lexicographic order on the sorted member lists; the tie-free total order
// used for deterministic output and node ids.
bool lex_less(const RootSet& x, const RootSet& y);

// Two members of C whose sum is a root missing from C.
struct ClosureViolation {
    Root x;
    Root y;
    Root sum;
    bool in_complement = false; // violation found in the complement
};

std::optional<ClosureViolation> find_closure_violation(const RootSet& c);
bool is_closed(const RootSet& c);

std::optional<ClosureViolation> find_biclosed_violation(const RootSet& c);
bool is_biclosed(const RootSet& c);

// All roots spanned by the simple roots indexed by d: for every maximal run
// [i, i+k-1] of d, all pairs inside [i, i+k].
RootSet span_subsystem(const SimpleSubset& d, int rank);

// w((Phi+ \ span(d1)) union span(d2)); requires orthogonal(d1, d2).
// Every biclosed set arises this way.
RootSet build_psi(const Permutation& w, const SimpleSubset& d1, const SimpleSubset& d2, int rank);

// (a,b) -> (w(a), w(b)), elementwise on sets.
Root act_root(const Permutation& w, Root r);
RootSet act_set(const Permutation& w, const RootSet& c);

// Biclosed, and contains exactly one of each {alpha, -alpha} pair.
bool is_positive_system(const RootSet& c);

// Classification-based predicates; both require a biclosed input.
bool is_parabolic(const RootSet& c);   // canonical delta1 empty
bool is_horocyclic(const RootSet& c);  // canonical delta2 empty

// All sigma in S_{n+1} with sigma(C) = C, by exhaustive search.
std::vector<Permutation> stabilizer(const RootSet& c);

// Subgroup generated by the adjacent transpositions (i,i+1) for i in gens,
// conjugated by w. Used to compare against the brute-force stabilizer.
std::vector<Permutation> conjugated_parabolic_subgroup(const Permutation& w,
                                                       const SimpleSubset& gens);

} // namespace biclosed

#endif
