#ifndef BICLOSED_SEMIGROUP_HPP
#define BICLOSED_SEMIGROUP_HPP

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "biclosed/errors.hpp"
#include "biclosed/root_system.hpp"

namespace biclosed {

// Binary operation table on {1..m}, row-major with at(a,b) = F(a,b).
// The table itself only guarantees entries in range; quasitriviality and
// associativity are predicates.
class OpTable {
public:
    OpTable(int m, std::vector<int> cells);
    static OpTable filled(int m, int fill = 1);
    static OpTable projection_first(int m);
    static OpTable projection_second(int m);

    int size() const { return m_; }
    int at(int a, int b) const { return cells_[index(a, b)]; }
    void set(int a, int b, int value);
    const std::vector<int>& cells() const { return cells_; }

    friend auto operator<=>(const OpTable&, const OpTable&) = default;

private:
    std::size_t index(int a, int b) const;

    int m_;
    std::vector<int> cells_;
};

bool is_quasitrivial(const OpTable& f);
void require_quasitrivial(const OpTable& f); // throws NotQuasitrivial with the offending cell

// Direct check over all m^3 triples. Requires a quasitrivial table.
bool is_associative(const OpTable& f);
std::optional<std::array<int, 3>> find_associativity_violation(const OpTable& f);

// Total preorder on {1..m} as its ordered equivalence classes, least first.
// Classes of size >= 2 carry the projection (1 or 2) the operation restricts
// to on that class; singletons carry none. Elements inside a block ascend.
struct PreorderBlock {
    std::vector<int> elements;
    std::optional<int> projection;

    friend auto operator<=>(const PreorderBlock&, const PreorderBlock&) = default;
};

struct PreorderDecomposition {
    int m = 0;
    std::vector<PreorderBlock> blocks;

    void validate() const; // partition of 1..m, labels exactly on big blocks

    friend auto operator<=>(const PreorderDecomposition&, const PreorderDecomposition&) = default;
};

// Extracts the preorder underlying an associative quasitrivial table:
// x ~ y iff F(x,y) != F(y,x), x below y iff F(x,y) = F(y,x) = y.
// Doubles as a constructive associativity witness: throws NotAssociative
// naming the violating pair or triple when the relation is not a preorder
// or a class mixes projections.
PreorderDecomposition to_preorder(const OpTable& f);

// max across blocks, the labeled projection inside a block. Inverse of
// to_preorder; the result is always quasitrivial and associative.
OpTable from_preorder(const PreorderDecomposition& p);

bool is_commutative(const OpTable& f);
bool is_anticommutative(const OpTable& f);
std::optional<int> identity_element(const OpTable& f);
std::optional<int> zero_element(const OpTable& f);

// sigma(F)(a,b) = sigma(F(sigma^-1(a), sigma^-1(b))).
OpTable act_op(const Permutation& sigma, const OpTable& f);

// "{1,3}^1<2" style rendering: blocks ascending, singletons bare,
// bigger classes with their projection exponent.
std::string block_string(const PreorderDecomposition& p);

} // namespace biclosed

#endif
