#include <doctest.h>

#include <algorithm>
#include <random>

#include "biclosed/enumeration.hpp"
#include "biclosed/semigroup.hpp"

using namespace biclosed;

namespace {

OpTable natural_max(int m) {
    OpTable f = OpTable::filled(m);
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b)
            f.set(a, b, std::max(a, b));
    return f;
}

// F(1,2)=2, F(2,1)=1, 1 and 3 meet at 1, 2 and 3 meet at 3: not associative.
OpTable broken_m3() {
    OpTable f = OpTable::projection_first(3);
    f.set(1, 2, 2);
    f.set(2, 1, 1);
    f.set(1, 3, 1);
    f.set(3, 1, 1);
    f.set(2, 3, 3);
    f.set(3, 2, 3);
    return f;
}

} // namespace

TEST_SUITE_BEGIN("semigroup");

TEST_CASE("quasitriviality") {
    CHECK(is_quasitrivial(OpTable::projection_first(3)));
    OpTable bad = OpTable::projection_first(3);
    bad.set(1, 2, 3);
    CHECK_FALSE(is_quasitrivial(bad));
    CHECK(is_quasitrivial(natural_max(3)));
    CHECK_THROWS_AS(require_quasitrivial(bad), NotQuasitrivial);
}

TEST_CASE("associativity") {
    CHECK(is_associative(natural_max(3)));
    CHECK_FALSE(is_associative(broken_m3()));
    CHECK(is_associative(OpTable::projection_second(4)));
    OpTable bad = OpTable::projection_first(3);
    bad.set(1, 2, 3);
    CHECK_THROWS_AS(is_associative(bad), NotQuasitrivial);

    // F(F(1,2),3) = F(2,3) = 3 but F(1,F(2,3)) = F(1,3) = 1
    const auto witness = find_associativity_violation(broken_m3());
    REQUIRE(witness.has_value());
}

TEST_CASE("preorder extraction") {
    const auto chain = to_preorder(natural_max(3));
    REQUIRE(chain.blocks.size() == 3);
    CHECK(chain.blocks[0].elements == std::vector<int>{1});
    CHECK(chain.blocks[2].elements == std::vector<int>{3});
    CHECK_FALSE(chain.blocks[0].projection.has_value());

    // {1,2} as a second-projection class below an absorbing 3
    PreorderDecomposition p{3, {{{1, 2}, 2}, {{3}, std::nullopt}}};
    const OpTable f = from_preorder(p);
    CHECK(f.at(1, 2) == 2);
    CHECK(f.at(2, 1) == 1);
    CHECK(f.at(1, 3) == 3);
    CHECK(f.at(3, 2) == 3);
    CHECK(to_preorder(f) == p);

    const auto single = to_preorder(OpTable::projection_first(3));
    REQUIRE(single.blocks.size() == 1);
    CHECK(single.blocks[0].elements == std::vector<int>{1, 2, 3});
    CHECK(single.blocks[0].projection == 1);

    CHECK_THROWS_AS(to_preorder(broken_m3()), NotAssociative);
    CHECK_THROWS_WITH_AS(to_preorder(broken_m3()),
                         doctest::Contains("not transitive"), NotAssociative);
}

TEST_CASE("from_preorder examples") {
    // [{2}, {1,3}^1]: 2 below, first projection on {1,3}
    PreorderDecomposition p{3, {{{2}, std::nullopt}, {{1, 3}, 1}}};
    const OpTable f = from_preorder(p);
    CHECK(f.at(2, 1) == 1);
    CHECK(f.at(2, 3) == 3);
    CHECK(f.at(1, 3) == 1);
    CHECK(f.at(3, 1) == 3);

    CHECK(from_preorder(PreorderDecomposition{4, {{{1, 2, 3, 4}, 1}}}) ==
          OpTable::projection_first(4));

    PreorderDecomposition bad{3, {{{1, 2}, std::nullopt}, {{3}, std::nullopt}}};
    CHECK_THROWS_AS(from_preorder(bad), InvalidArgument);
}

TEST_CASE("structure equivalence is a bijection") {
    for (int m = 1; m <= 4; ++m) {
        const auto tables = enum_semigroups(m);
        for (const OpTable& f : tables) {
            const PreorderDecomposition p = to_preorder(f);
            CHECK(from_preorder(p) == f);
        }
        // distinct decompositions give distinct tables: table count equals
        // decomposition count by construction, so injectivity follows from
        // the sorted list being duplicate-free
        for (std::size_t i = 1; i < tables.size(); ++i)
            CHECK(tables[i - 1] < tables[i]);
    }
}

TEST_CASE("classification predicates") {
    const OpTable max3 = natural_max(3);
    CHECK(is_commutative(max3));
    CHECK(identity_element(max3) == 1);
    CHECK(zero_element(max3) == 3);

    CHECK(is_anticommutative(OpTable::projection_first(3)));
    CHECK_FALSE(identity_element(OpTable::projection_first(3)).has_value());

    const OpTable f = from_preorder(PreorderDecomposition{3, {{{1, 2}, 2}, {{3}, std::nullopt}}});
    CHECK_FALSE(is_commutative(f));
    CHECK_FALSE(identity_element(f).has_value());
    CHECK(zero_element(f) == 3);

    SUBCASE("against the block structure, m <= 4") {
        for (int m = 1; m <= 4; ++m) {
            int anticommutative = 0;
            for (const OpTable& g : enum_semigroups(m)) {
                const PreorderDecomposition p = to_preorder(g);
                const bool all_singletons =
                    std::all_of(p.blocks.begin(), p.blocks.end(),
                                [](const PreorderBlock& b) { return b.elements.size() == 1; });
                CHECK(is_commutative(g) == all_singletons);
                CHECK(is_anticommutative(g) == (p.blocks.size() == 1));
                if (is_anticommutative(g))
                    ++anticommutative;
                CHECK(identity_element(g).has_value() == (p.blocks.front().elements.size() == 1));
                CHECK(zero_element(g).has_value() == (p.blocks.back().elements.size() == 1));
            }
            CHECK(anticommutative == (m == 1 ? 1 : 2));
        }
    }
}

TEST_CASE("m = 1 degenerate table") {
    const OpTable one = OpTable::filled(1);
    CHECK(is_quasitrivial(one));
    CHECK(is_associative(one));
    CHECK(is_commutative(one));
    CHECK(is_anticommutative(one));
    CHECK(identity_element(one) == 1);
    CHECK(zero_element(one) == 1);
    CHECK(to_preorder(one).blocks.size() == 1);
}

TEST_CASE("symmetric group action on tables") {
    const OpTable max3 = natural_max(3);
    CHECK(act_op(Permutation::identity(3), max3) == max3);

    // (1,2) turns the natural chain into 2 < 1 < 3
    const OpTable expected = from_preorder(
        PreorderDecomposition{3, {{{2}, std::nullopt}, {{1}, std::nullopt}, {{3}, std::nullopt}}});
    CHECK(act_op(Permutation::from_cycles("(1,2)", 3), max3) == expected);

    CHECK(act_op(Permutation::from_cycles("(1,3)", 3), OpTable::projection_first(3)) ==
          OpTable::projection_first(3));

    SUBCASE("composition and associativity preservation") {
        for (int m = 2; m <= 3; ++m) {
            const auto group = symmetric_group(m);
            for (const OpTable& f : enum_semigroups(m))
                for (const Permutation& s : group) {
                    CHECK(is_associative(act_op(s, f)));
                    for (const Permutation& t : group)
                        CHECK(act_op(s.compose(t), f) == act_op(s, act_op(t, f)));
                }
        }
        // sampled at m = 4
        std::mt19937 rng(20240811);
        const auto tables = enum_semigroups(4);
        const auto group = symmetric_group(4);
        for (int trial = 0; trial < 200; ++trial) {
            const OpTable& f = tables[rng() % tables.size()];
            const Permutation& s = group[rng() % group.size()];
            const Permutation& t = group[rng() % group.size()];
            CHECK(is_associative(act_op(s, f)));
            CHECK(act_op(s.compose(t), f) == act_op(s, act_op(t, f)));
        }
    }
}

TEST_CASE("block strings") {
    CHECK(block_string(to_preorder(natural_max(3))) == "1<2<3");
    CHECK(block_string(to_preorder(OpTable::projection_first(3))) == "{1,2,3}^1");
    CHECK(block_string(PreorderDecomposition{3, {{{1, 2}, 2}, {{3}, std::nullopt}}}) ==
          "{1,2}^2<3");
}

TEST_SUITE_END();
