#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace krammer;

TEST_CASE("parsing", "[braid]")
{
    auto w = parse_word("1 -2 3", 4);
    CHECK(w.signed_indices() == std::vector<int>{1, -2, 3});
    CHECK(parse_word("1,-2, 3", 4) == w);
    CHECK(parse_word("  +1\t-2\n3 ", 4) == w);
    CHECK(parse_word("", 3).empty());
    CHECK(parse_word("2", 3).letters().front() == Letter{2, 1});
}

TEST_CASE("parse errors", "[braid]")
{
    CHECK_THROWS_AS(parse_word("0", 3), BraidParseError);
    CHECK_THROWS_AS(parse_word("3", 3), BraidParseError);
    CHECK_THROWS_AS(parse_word("-3", 3), BraidParseError);
    CHECK_THROWS_AS(parse_word("1 x", 3), BraidParseError);
    CHECK_THROWS_AS(parse_word("1-2", 3), BraidParseError);
    CHECK_THROWS_AS(parse_word("-", 3), BraidParseError);
    CHECK_THROWS_AS(parse_word("99999999999", 3), BraidParseError);
    CHECK_THROWS_AS(parse_word("1", 1), BraidParseError);
    CHECK_THROWS_AS(BraidWord::from_signed(3, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(BraidWord(3, {{3, 1}}), std::invalid_argument);
}

TEST_CASE("strand inference", "[braid]")
{
    CHECK(infer_strands("1 2 1") == 3);
    CHECK(infer_strands("-5, 1") == 6);
    CHECK(infer_strands("") == 2);
    CHECK_THROWS_AS(infer_strands("a"), BraidParseError);
}

TEST_CASE("word involutions", "[braid]")
{
    auto w = BraidWord::from_signed(4, {1, -2, 3, 3});
    CHECK(reverse_word(w).signed_indices() == std::vector<int>{3, 3, -2, 1});
    CHECK(mirror_word(w).signed_indices() == std::vector<int>{-1, 2, -3, -3});
    CHECK(inverse_word(w).signed_indices() == std::vector<int>{-3, -3, 2, -1});
    CHECK(exponent_sum(w) == 2);
    CHECK(exponent_sum(inverse_word(w)) == -2);

    krammer::testing::Rng rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        auto v = krammer::testing::random_word(rng, 5, 12);
        CHECK(reverse_word(reverse_word(v)) == v);
        CHECK(mirror_word(mirror_word(v)) == v);
        CHECK(inverse_word(inverse_word(v)) == v);
        CHECK(parse_word(render(v), 5) == v);
    }
}

TEST_CASE("concatenation", "[braid]")
{
    auto a = BraidWord::from_signed(3, {1}), b = BraidWord::from_signed(3, {-2, 1});
    CHECK((a * b).signed_indices() == std::vector<int>{1, -2, 1});
    CHECK_THROWS_AS(a * BraidWord(4), std::invalid_argument);
    CHECK(render(a * b) == "1 -2 1");
    CHECK(render(BraidWord(3)).empty());
}
