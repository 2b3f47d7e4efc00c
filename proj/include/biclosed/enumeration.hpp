#ifndef BICLOSED_ENUMERATION_HPP
#define BICLOSED_ENUMERATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "biclosed/root_system.hpp"
#include "biclosed/semigroup.hpp"

namespace biclosed {

// Desk-scale guards. Brute force walks 2^{n(n+1)} subsets: a million at
// rank 4, a billion at rank 5 (allowed only when forced). Nothing here is
// meant for rank > 5.
inline constexpr int brute_force_rank_limit = 4;
inline constexpr int forced_rank_limit = 5;

// All biclosed subsets, by scanning every subset mask and keeping those
// whose set and complement are both transitively closed. Sorted
// lexicographically on the serialized member list. jobs <= 0 picks the
// hardware concurrency.
std::vector<RootSet> enum_biclosed_bruteforce(int n, int jobs = 1, bool force_large = false);

// All w(Phi+_{d1,d2}) over orthogonal pairs and all permutations,
// deduplicated; identical to the brute-force list.
std::vector<RootSet> enum_biclosed_classified(int n);

// All associative quasitrivial tables on {1..m}, generated as ordered set
// partitions with a projection label on each block of size >= 2. Sorted by
// table cells.
std::vector<OpTable> enum_semigroups(int m);

// sum over ordered set partitions of 2^{#blocks of size >= 2}, without
// materializing tables.
std::uint64_t count_semigroups(int m);

struct MethodCount {
    std::string method;
    std::uint64_t count = 0;
    double seconds = 0.0;
};

struct EnumerationReport {
    int n = 0;
    std::vector<MethodCount> methods; // all equal or the report throws
    std::uint64_t total = 0;
    std::uint64_t positive_systems = 0;
    std::uint64_t parabolic = 0;
    std::uint64_t horocyclic = 0;
    std::uint64_t commutative = 0;
    std::uint64_t anticommutative = 0;
    std::uint64_t with_identity = 0;
    std::uint64_t with_zero = 0;
};

// Runs every method, tallies the classification counts, and cross-checks:
// the methods must agree element-for-element, positive systems must number
// (n+1)!, and commutative tables must coincide with positive systems.
// Throws CrossCheckFailure on any disagreement.
EnumerationReport make_report(int n, int jobs = 1, bool force_large = false);

} // namespace biclosed

#endif
