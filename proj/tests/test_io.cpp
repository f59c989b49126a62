#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace pseudoline;

TEST(WdFormat, Example) {
    EXPECT_EQ(to_wd(gen_trivial(4)), "4\n0 4\n");
    EXPECT_EQ(parse_wd("# pencil\n4\n  0 4   # the only event\n\n"), gen_trivial(4));
}

TEST(WdFormat, RoundTripEnumerated) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& d : enumerate_all(n)) {
            EXPECT_EQ(parse_wd(to_wd(d)), d);
            EXPECT_EQ(to_wd(parse_wd(to_wd(d))), to_wd(d));
            EXPECT_EQ(parse_inline(to_inline(d)), d);
        }
}

TEST(WdFormat, RoundTripRandom) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto d = gen_random(12, seed);
        EXPECT_EQ(parse_wd(to_wd(d)), d);
        EXPECT_EQ(parse_inline(to_inline(d)), d);
    }
}

TEST(WdFormat, Errors) {
    EXPECT_THROW(parse_wd(""), ParseError);
    EXPECT_THROW(parse_wd("x\n"), ParseError);
    EXPECT_THROW(parse_wd("3\n0\n"), ParseError);
    EXPECT_THROW(parse_wd("3\n0 2 1\n"), ParseError);
    EXPECT_THROW(parse_wd("3\n2 2\n"), ParseError);
    EXPECT_THROW(parse_wd("3\n0 2x\n"), ParseError);
    EXPECT_THROW(parse_inline("3;0,2"), ParseError);
    // Syntactically fine, combinatorially invalid: parses, then fails validation.
    EXPECT_FALSE(is_valid(parse_wd("3\n0 2\n")));
}

TEST(ColoringFormat, RoundTrip) {
    const Coloring line{ColoringMode::Line, {0, 1, 1, 0, 2}};
    EXPECT_EQ(to_coloring_text(line), "line 5 3\n1 0\n2 1\n3 1\n4 0\n5 2\n");
    EXPECT_EQ(parse_coloring(to_coloring_text(line)), line);
    for (int n = 2; n <= 4; ++n)
        for (const auto& d : enumerate_all(n)) {
            const auto c = greedy_cell_coloring(d);
            EXPECT_EQ(parse_coloring(to_coloring_text(c)), c);
        }
}

TEST(ColoringFormat, Errors) {
    EXPECT_THROW(parse_coloring(""), ParseError);
    EXPECT_THROW(parse_coloring("face 1 1\n0 0\n"), ParseError);
    EXPECT_THROW(parse_coloring("line 2 2\n1 0\n"), ParseError);
    EXPECT_THROW(parse_coloring("line 2 2\n1 0\n1 1\n"), ParseError);
    EXPECT_THROW(parse_coloring("line 2 3\n1 0\n2 1\n"), ParseError);
    EXPECT_THROW(parse_coloring("crossing 1 1\n1 0\n"), ParseError);
}
