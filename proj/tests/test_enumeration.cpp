#include <doctest.h>

#include <algorithm>
#include <map>

#include "biclosed/bijection.hpp"
#include "biclosed/enumeration.hpp"

using namespace biclosed;

TEST_SUITE_BEGIN("enumeration");

TEST_CASE("brute force counts") {
    const auto rank1 = enum_biclosed_bruteforce(1);
    REQUIRE(rank1.size() == 4);
    CHECK(rank1[0].empty());
    CHECK(std::find(rank1.begin(), rank1.end(), RootSet::from_roots(1, {{1, 2}})) != rank1.end());
    CHECK(std::find(rank1.begin(), rank1.end(), RootSet::from_roots(1, {{2, 1}})) != rank1.end());
    CHECK(std::find(rank1.begin(), rank1.end(), RootSet::full(1)) != rank1.end());

    CHECK(enum_biclosed_bruteforce(2).size() == 20);
    CHECK(enum_biclosed_bruteforce(3).size() == 138);
    CHECK(enum_biclosed_bruteforce(0).size() == 1);
}

TEST_CASE("rank guards") {
    CHECK_THROWS_AS(enum_biclosed_bruteforce(5), RankTooLarge);
    CHECK_THROWS_AS(enum_biclosed_bruteforce(9, 1, true), RankTooLarge);
    CHECK_THROWS_AS(enum_biclosed_classified(6), RankTooLarge);
    CHECK_THROWS_AS(enum_semigroups(7), RankTooLarge);
    CHECK_THROWS_AS(enum_biclosed_bruteforce(-1), InvalidArgument);
}

TEST_CASE("semigroup counts") {
    CHECK(enum_semigroups(1).size() == 1);
    CHECK(enum_semigroups(2).size() == 4);
    CHECK(enum_semigroups(3).size() == 20);
    CHECK(enum_semigroups(5).size() == 1182);

    SUBCASE("m = 4 against filtering all quasitrivial tables") {
        // the independent route: generate all 2^12 quasitrivial tables and
        // keep the associative ones
        std::vector<std::pair<int, int>> coords;
        for (int a = 1; a <= 4; ++a)
            for (int b = 1; b <= 4; ++b)
                if (a != b)
                    coords.emplace_back(a, b);
        std::vector<OpTable> filtered;
        OpTable f = OpTable::projection_first(4);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << 12); ++mask) {
            for (std::size_t i = 0; i < coords.size(); ++i)
                f.set(coords[i].first, coords[i].second,
                      ((mask >> i) & 1) ? coords[i].second : coords[i].first);
            if (!find_associativity_violation(f))
                filtered.push_back(f);
        }
        std::sort(filtered.begin(), filtered.end());
        CHECK(filtered == enum_semigroups(4));
        CHECK(filtered.size() == 138);
    }
}

TEST_CASE("methods agree") {
    for (int n = 0; n <= 3; ++n) {
        const auto brute = enum_biclosed_bruteforce(n);
        CHECK(enum_biclosed_classified(n) == brute);

        std::vector<RootSet> via;
        for (const OpTable& f : enum_semigroups(n + 1))
            via.push_back(semigroup_to_biclosed(f));
        std::sort(via.begin(), via.end(), lex_less);
        CHECK(via == brute);

        // every listed set really is biclosed, and the list is duplicate-free
        for (std::size_t i = 0; i < brute.size(); ++i) {
            CHECK(is_biclosed(brute[i]));
            if (i > 0)
                CHECK(lex_less(brute[i - 1], brute[i]));
        }
    }
}

TEST_CASE("parallel enumeration is deterministic") {
    CHECK(enum_biclosed_bruteforce(3, 1) == enum_biclosed_bruteforce(3, 4));
    CHECK(enum_biclosed_bruteforce(3, 1) == enum_biclosed_bruteforce(3, 0));
}

TEST_CASE("reports") {
    const EnumerationReport r2 = make_report(2);
    CHECK(r2.total == 20);
    CHECK(r2.positive_systems == 6);
    CHECK(r2.anticommutative == 2);
    CHECK(r2.methods.size() == 3);

    const EnumerationReport r1 = make_report(1);
    CHECK(r1.total == 4);
    CHECK(r1.positive_systems == 2);

    const EnumerationReport r3 = make_report(3);
    CHECK(r3.total == 138);
    CHECK(r3.positive_systems == 24);
}

TEST_CASE("orbit sizes divide the group order") {
    for (int n = 1; n <= 3; ++n) {
        const auto sets = enum_biclosed_bruteforce(n);
        const auto group = symmetric_group(n + 1);
        std::map<std::uint64_t, bool> seen;
        std::uint64_t covered = 0;
        for (const RootSet& c : sets) {
            if (seen[c.mask()])
                continue;
            std::vector<std::uint64_t> orbit;
            for (const Permutation& w : group) {
                const std::uint64_t mask = act_set(w, c).mask();
                if (std::find(orbit.begin(), orbit.end(), mask) == orbit.end())
                    orbit.push_back(mask);
            }
            for (std::uint64_t mask : orbit)
                seen[mask] = true;
            covered += orbit.size();
            CHECK(group.size() % orbit.size() == 0);
        }
        CHECK(covered == sets.size());
    }
}

TEST_SUITE_END();
