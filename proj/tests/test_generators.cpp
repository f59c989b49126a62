#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"

using namespace pseudoline;

TEST(Generators, SmallRandomSimple) {
    EXPECT_EQ(gen_random_simple(1, 3).event_count(), 0u);
    EXPECT_EQ(gen_random_simple(2, 3), WiringDiagram(2, {{0, 2}}));
    const auto d = gen_random_simple(5, 42);
    EXPECT_EQ(d.event_count(), 10u);
    EXPECT_TRUE(is_valid(d));
    EXPECT_TRUE(is_simple(d));
}

TEST(Generators, Reproducible) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        EXPECT_EQ(gen_random_simple(8, seed), gen_random_simple(8, seed));
        EXPECT_EQ(gen_random(8, seed), gen_random(8, seed));
    }
    EXPECT_NE(gen_random_simple(8, 1), gen_random_simple(8, 2));
}

TEST(Generators, Trivial) {
    EXPECT_EQ(gen_trivial(2), WiringDiagram(2, {{0, 2}}));
    EXPECT_EQ(gen_trivial(5), WiringDiagram(5, {{0, 5}}));
    EXPECT_EQ(mx(gen_trivial(5)), 1);
    EXPECT_EQ(build_cells(gen_trivial(3)).cells.size(), 6u);
    EXPECT_THROW(gen_trivial(1), std::invalid_argument);
}

TEST(Generators, RandomDiagramsAreValidAndVaried) {
    std::size_t non_simple = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        for (int n = 1; n <= 9; ++n) {
            const auto d = gen_random(n, seed);
            ASSERT_TRUE(oracle::pairs_cross_once(d)) << to_inline(d);
            non_simple += !is_simple(d);
        }
    }
    EXPECT_GT(non_simple, 200u);
}

TEST(Enumerate, Counts) {
    EXPECT_EQ(enumerate_all(1).size(), 1u);
    EXPECT_EQ(enumerate_all(2).size(), 1u);
    const auto three = enumerate_all(3);
    ASSERT_EQ(three.size(), 3u);
    const std::set<WiringDiagram> expected{WiringDiagram(3, {{0, 2}, {1, 2}, {0, 2}}),
                                           WiringDiagram(3, {{1, 2}, {0, 2}, {1, 2}}), WiringDiagram(3, {{0, 3}})};
    EXPECT_EQ(std::set<WiringDiagram>(three.begin(), three.end()), expected);
}

TEST(Enumerate, FourWiresHasSixteenReducedWords) {
    const auto all = enumerate_all(4);
    EXPECT_EQ(all.size(), 25u);
    EXPECT_EQ(std::count_if(all.begin(), all.end(), [](const auto& d) { return is_simple(d); }), 16);
    std::set<WiringDiagram> distinct(all.begin(), all.end());
    EXPECT_EQ(distinct.size(), all.size());
    for (const auto& d : all) EXPECT_TRUE(oracle::pairs_cross_once(d));
}

// Independent count: sequences of legal block reversals that reach the full
// reversal with every pair swapped once, by memoised search over permutations.
static std::size_t count_by_permutations(int n) {
    std::map<std::vector<int>, std::size_t> memo;
    std::function<std::size_t(const std::vector<int>&)> go = [&](const std::vector<int>& order) -> std::size_t {
        if (std::is_sorted(order.rbegin(), order.rend())) return 1;
        if (auto it = memo.find(order); it != memo.end()) return it->second;
        std::size_t total = 0;
        for (int p = 0; p < n; ++p)
            for (int k = 2; p + k <= n; ++k) {
                if (!std::is_sorted(order.begin() + p, order.begin() + p + k)) break;
                auto next = order;
                std::reverse(next.begin() + p, next.begin() + p + k);
                total += go(next);
            }
        return memo[order] = total;
    };
    std::vector<int> id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 1);
    return go(id);
}

TEST(Enumerate, MatchesPermutationCount) {
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(enumerate_all(n).size(), count_by_permutations(n)) << n;
}

TEST(Enumerate, CanonicalFormsAreClassRepresentatives) {
    for (int n = 3; n <= 5; ++n) {
        std::set<WiringDiagram> classes;
        for (const auto& d : enumerate_all(n)) classes.insert(canonical_form(d));
        const auto canon = enumerate_all(n, true);
        EXPECT_EQ(std::set<WiringDiagram>(canon.begin(), canon.end()), classes);
        for (const auto& d : canon) EXPECT_EQ(canonical_form(d), d);
    }
    EXPECT_THROW(enumerate_all(7), std::out_of_range);
}

TEST(Symmetry, MirrorAndFlipPreserveValidity) {
    for (const auto& d : enumerate_all(4)) {
        EXPECT_TRUE(is_valid(mirrored(d)));
        EXPECT_TRUE(is_valid(flipped(d)));
        EXPECT_EQ(mirrored(mirrored(d)), d);
        EXPECT_EQ(flipped(flipped(d)), d);
    }
}
