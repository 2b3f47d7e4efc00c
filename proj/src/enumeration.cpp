#include "biclosed/enumeration.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <thread>

#include "biclosed/bijection.hpp"

namespace biclosed {

namespace {

// Slot triples (ab, bc, ac) over distinct a, b, c: a mask is closed iff no
// triple has ab and bc set but ac clear, and likewise for its complement.
std::vector<std::array<int, 3>> closure_triples(int n) {
    std::vector<std::array<int, 3>> out;
    const int m = n + 1;
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b)
            for (int c = 1; c <= m; ++c)
                if (a != b && b != c && a != c)
                    out.push_back({pair_slot(n, a, b), pair_slot(n, b, c), pair_slot(n, a, c)});
    return out;
}

bool mask_closed(std::uint64_t mask, const std::vector<std::array<int, 3>>& triples) {
    for (const auto& t : triples)
        if (((mask >> t[0]) & 1) && ((mask >> t[1]) & 1) && !((mask >> t[2]) & 1))
            return false;
    return true;
}

void sort_sets(std::vector<RootSet>& sets) {
    std::sort(sets.begin(), sets.end(), lex_less);
}

} // namespace

std::vector<RootSet> enum_biclosed_bruteforce(int n, int jobs, bool force_large) {
    if (n < 0)
        throw InvalidArgument("enumeration: rank must be >= 0");
    if (n > brute_force_rank_limit && !(force_large && n <= forced_rank_limit))
        throw RankTooLarge("brute force enumeration capped at rank " +
                           std::to_string(brute_force_rank_limit) + " (rank " +
                           std::to_string(forced_rank_limit) + " with the large override)");

    const auto triples = closure_triples(n);
    const std::uint64_t full = RootSet::full(n).mask();
    const std::uint64_t count = n == 0 ? 1 : (std::uint64_t{1} << (n * (n + 1)));

    if (jobs <= 0)
        jobs = static_cast<int>(std::thread::hardware_concurrency());
    jobs = std::clamp<int>(jobs, 1, 64);

    std::vector<std::vector<std::uint64_t>> found(static_cast<std::size_t>(jobs));
    auto worker = [&](int id) {
        const std::uint64_t lo = count / static_cast<std::uint64_t>(jobs) * static_cast<std::uint64_t>(id);
        const std::uint64_t hi = id + 1 == jobs
                                     ? count
                                     : count / static_cast<std::uint64_t>(jobs) * static_cast<std::uint64_t>(id + 1);
        for (std::uint64_t mask = lo; mask < hi; ++mask)
            if (mask_closed(mask, triples) && mask_closed(full & ~mask, triples))
                found[static_cast<std::size_t>(id)].push_back(mask);
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int id = 0; id < jobs; ++id)
            pool.emplace_back(worker, id);
        for (std::thread& th : pool)
            th.join();
    }

    std::vector<RootSet> out;
    for (const auto& part : found)
        for (std::uint64_t mask : part)
            out.push_back(RootSet::from_mask(n, mask));
    sort_sets(out);
    return out;
}

std::vector<RootSet> enum_biclosed_classified(int n) {
    if (n < 0)
        throw InvalidArgument("enumeration: rank must be >= 0");
    if (n > forced_rank_limit)
        throw RankTooLarge("classified enumeration capped at rank " + std::to_string(forced_rank_limit));

    std::vector<RootSet> out;
    const auto group = symmetric_group(n + 1);
    const int subsets = 1 << n;
    for (int m1 = 0; m1 < subsets; ++m1)
        for (int m2 = 0; m2 < subsets; ++m2) {
            std::vector<int> v1, v2;
            for (int i = 1; i <= n; ++i) {
                if (m1 & (1 << (i - 1)))
                    v1.push_back(i);
                if (m2 & (1 << (i - 1)))
                    v2.push_back(i);
            }
            const SimpleSubset d1(std::move(v1)), d2(std::move(v2));
            if (!orthogonal(d1, d2))
                continue;
            for (const Permutation& w : group)
                out.push_back(build_psi(w, d1, d2, n));
        }
    sort_sets(out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Emits every ordered set partition of the remaining elements, each block of
// size >= 2 in both projection labelings. Block order matters: the next
// block is any nonempty subset of what is left.
void ordered_partitions(const std::vector<int>& free_elements,
                        PreorderDecomposition& current, std::vector<OpTable>& out) {
    if (free_elements.empty()) {
        out.push_back(from_preorder(current));
        return;
    }
    const int count = static_cast<int>(free_elements.size());
    for (int pick = 1; pick < (1 << count); ++pick) {
        PreorderBlock block;
        std::vector<int> remaining;
        for (int i = 0; i < count; ++i) {
            if (pick & (1 << i))
                block.elements.push_back(free_elements[static_cast<std::size_t>(i)]);
            else
                remaining.push_back(free_elements[static_cast<std::size_t>(i)]);
        }
        const bool big = block.elements.size() >= 2;
        for (int proj = 1; proj <= (big ? 2 : 1); ++proj) {
            block.projection = big ? std::optional<int>(proj) : std::nullopt;
            current.blocks.push_back(block);
            ordered_partitions(remaining, current, out);
            current.blocks.pop_back();
        }
    }
}

} // namespace

std::vector<OpTable> enum_semigroups(int m) {
    if (m < 1)
        throw InvalidArgument("enumeration: m must be >= 1");
    if (m > forced_rank_limit + 1)
        throw RankTooLarge("semigroup enumeration capped at m = " + std::to_string(forced_rank_limit + 1));

    std::vector<OpTable> out;
    std::vector<int> free_elements(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        free_elements[static_cast<std::size_t>(i)] = i + 1;
    PreorderDecomposition current{m, {}};
    ordered_partitions(free_elements, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t count_semigroups(int m) {
    return static_cast<std::uint64_t>(enum_semigroups(m).size());
}

EnumerationReport make_report(int n, int jobs, bool force_large) {
    EnumerationReport rep;
    rep.n = n;

    auto timed = [&](const char* name, auto fn) {
        const auto start = std::chrono::steady_clock::now();
        auto result = fn();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        rep.methods.push_back({name, static_cast<std::uint64_t>(result.size()), secs});
        return result;
    };

    const auto brute = timed("bruteforce", [&] { return enum_biclosed_bruteforce(n, jobs, force_large); });
    const auto classified = timed("classified", [&] { return enum_biclosed_classified(n); });
    const auto tables = timed("semigroups", [&] { return enum_semigroups(n + 1); });

    if (brute != classified)
        throw CrossCheckFailure("brute-force and classified enumerations disagree at rank " + std::to_string(n));

    std::vector<RootSet> via_tables;
    via_tables.reserve(tables.size());
    for (const OpTable& f : tables)
        via_tables.push_back(semigroup_to_biclosed(f));
    std::sort(via_tables.begin(), via_tables.end(), lex_less);
    if (via_tables != brute)
        throw CrossCheckFailure("semigroup images disagree with brute force at rank " + std::to_string(n));

    rep.total = static_cast<std::uint64_t>(brute.size());
    std::uint64_t factorial = 1;
    for (int i = 2; i <= n + 1; ++i)
        factorial *= static_cast<std::uint64_t>(i);

    for (const RootSet& c : brute) {
        const OpTable f = biclosed_to_semigroup(c);
        const bool positive = is_positive_system(c);
        if (positive)
            ++rep.positive_systems;

        // Pair restrictions: a parabolic set admits no first-projection
        // pair, a horocyclic set no second-projection pair.
        bool has_first = false, has_second = false;
        for (int a = 1; a <= f.size(); ++a)
            for (int b = a + 1; b <= f.size(); ++b) {
                if (f.at(a, b) == a && f.at(b, a) == b)
                    has_first = true;
                if (f.at(a, b) == b && f.at(b, a) == a)
                    has_second = true;
            }
        if (is_parabolic(c)) {
            ++rep.parabolic;
            if (has_first)
                throw CrossCheckFailure("parabolic set with a first-projection pair");
        } else if (!has_first) {
            throw CrossCheckFailure("non-parabolic set without a first-projection pair");
        }
        if (is_horocyclic(c)) {
            ++rep.horocyclic;
            if (has_second)
                throw CrossCheckFailure("horocyclic set with a second-projection pair");
        } else if (!has_second) {
            throw CrossCheckFailure("non-horocyclic set without a second-projection pair");
        }
        if (is_commutative(f)) {
            ++rep.commutative;
            if (!positive)
                throw CrossCheckFailure("commutative table paired with a non positive system");
        } else if (positive) {
            throw CrossCheckFailure("positive system paired with a non commutative table");
        }
        if (is_anticommutative(f))
            ++rep.anticommutative;
        if (identity_element(f))
            ++rep.with_identity;
        if (zero_element(f))
            ++rep.with_zero;
    }
    if (rep.positive_systems != factorial)
        throw CrossCheckFailure("positive system tally is not (n+1)! at rank " + std::to_string(n));
    if (n >= 1 && rep.anticommutative != 2)
        throw CrossCheckFailure("anticommutative tally is not 2 at rank " + std::to_string(n));
    return rep;
}

} // namespace biclosed
