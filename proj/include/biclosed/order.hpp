#ifndef BICLOSED_ORDER_HPP
#define BICLOSED_ORDER_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "biclosed/bijection.hpp"
#include "biclosed/root_system.hpp"
#include "biclosed/semigroup.hpp"

namespace biclosed {

// How a quasitrivial table behaves on the two-element set {a,b}, encoded as
// the bit pair (contains (min,max), contains (max,min)). The containment
// order on these four states is the diamond that orders the whole poset:
// first projection at the bottom, second at the top, max and min
// incomparable in between.
enum class PairRestriction : unsigned {
    first = 0,  // neither pair
    larger = 1, // (a,b) only: the natural-order max
    smaller = 2,// (b,a) only: the natural-order min
    second = 3  // both
};

PairRestriction restriction(const OpTable& f, int a, int b);

// Restriction comparison on {a,b}: state-bit containment; reflexive.
bool leq_restriction(const OpTable& f, const OpTable& g, int a, int b);

// f <= g iff every two-element restriction compares.
bool leq_op(const OpTable& f, const OpTable& g);

// Plain containment of root sets.
bool leq_set(const RootSet& c, const RootSet& d);

// A finite collection of biclosed sets of one rank, paired with their
// operation tables, ordered by containment. Element order is the
// deterministic lexicographic order on serialized sets, which is also the
// stable node id in DOT output.
class PosetView {
public:
    explicit PosetView(std::vector<RootSet> sets);

    int size() const { return static_cast<int>(sets_.size()); }
    const std::vector<RootSet>& sets() const { return sets_; }
    const std::vector<OpTable>& ops() const { return ops_; }

    bool leq(int i, int j) const;

    // Covering relations, sorted by (lower, upper) index.
    std::vector<std::pair<int, int>> hasse_edges() const;

    // Greatest lower / least upper bound indices; LatticeViolation when the
    // bound is missing or not unique.
    int meet(int i, int j) const;
    int join(int i, int j) const;

    bool is_lattice(std::string* why = nullptr) const;

    // Hasse diagram with both the canonical presentation and the block
    // structure on each node.
    std::string to_dot() const;

private:
    std::vector<std::uint64_t>& row(int i);
    const std::vector<std::uint64_t>& row(int i) const;
    int extreme_bound(int i, int j, bool lower) const;

    std::vector<RootSet> sets_;
    std::vector<OpTable> ops_;
    std::vector<int> by_cardinality_;            // linear extension, ascending
    std::vector<int> topo_rank_;                 // inverse of by_cardinality_
    std::vector<std::vector<std::uint64_t>> down_; // down_[i] = bitset of {j : j <= i}
    std::size_t words_ = 0;
};

} // namespace biclosed

#endif
