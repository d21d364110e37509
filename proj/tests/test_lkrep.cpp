#include <catch2/catch_amalgamated.hpp>

#include "artin.hpp"
#include "support.hpp"

using namespace krammer;

namespace {
const LaurentPoly q = LaurentPoly::q();
const LaurentPoly t = LaurentPoly::t();

std::vector<LaurentPoly> column(const RingMatrix& m, std::size_t c)
{
    std::vector<LaurentPoly> out;
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m(r, c));
    return out;
}
}  // namespace

TEST_CASE("basis ordering", "[lkrep]")
{
    LKBasis b(4);
    REQUIRE(b.size() == 6);
    for (std::size_t k = 0; k < b.size(); ++k) CHECK(b.index(b[k]) == k);
    CHECK(b.index(1, 2) == 0);
    CHECK(b.index(2, 3) == 3);
    CHECK(b.index(3, 4) == 5);
    CHECK(b.label(1) == "v_1,3");
    CHECK_THROWS_AS(b.index(2, 2), std::out_of_range);
    CHECK_THROWS_AS(b.index(0, 2), std::out_of_range);
    CHECK_THROWS_AS(LKBasis(1), std::invalid_argument);
}

TEST_CASE("two strands give a scalar", "[lkrep]")
{
    auto m = generator_matrix(2, 1);
    REQUIRE(m.rows() == 1);
    CHECK(m(0, 0) == -t * q * q);
    CHECK(rep_matrix(BraidWord::from_signed(2, {1, 1, 1}))(0, 0) == -t.pow(3) * q.pow(6));
    CHECK(gen_matrix(2, 1, -1)(0, 0) == -LaurentPoly::monomial(1, -2, -1));
}

TEST_CASE("generator columns by hand", "[lkrep]")
{
    // basis for n = 3: v12, v13, v23
    auto s1 = generator_matrix(3, 1);
    auto s2 = generator_matrix(3, 2);
    // sigma_1 v23 = q v13 + (q^2-q) v12 + (1-q) v23
    CHECK(column(s1, 2) == std::vector<LaurentPoly>{q * q - q, q, 1 - q});
    // sigma_1 v13 = v23
    CHECK(column(s1, 1) == std::vector<LaurentPoly>{0, 0, 1});
    // sigma_1 v12 = -t q^2 v12
    CHECK(column(s1, 0) == std::vector<LaurentPoly>{-t * q * q, 0, 0});
    // sigma_2 v13 = q v12 + (1-q) v13 - (q^2-q) t v23
    CHECK(column(s2, 1) == std::vector<LaurentPoly>{q, 1 - q, -(q * q - q) * t});
    // sigma_2 v12 = v13
    CHECK(column(s2, 0) == std::vector<LaurentPoly>{0, 1, 0});

    // sigma_2 fixes v14 in B_4
    auto s = generator_matrix(4, 2);
    std::vector<LaurentPoly> e(6, LaurentPoly{});
    e[LKBasis(4).index(1, 4)] = 1;
    CHECK(column(s, LKBasis(4).index(1, 4)) == e);

    CHECK_THROWS_AS(generator_matrix(3, 3), std::out_of_range);
    CHECK_THROWS_AS(generator_matrix(3, 0), std::out_of_range);
}

TEST_CASE("braid relations hold exactly", "[lkrep]")
{
    for (int n = 2; n <= 6; ++n) {
        LKRepresentation rep(n);
        const auto id = RingMatrix::identity(rep.dim());
        for (int i = 1; i < n; ++i) {
            CHECK(rep.generator(i, 1) * rep.generator(i, -1) == id);
            if (i + 1 < n)
                CHECK(rep.generator(i) * rep.generator(i + 1) * rep.generator(i) ==
                      rep.generator(i + 1) * rep.generator(i) * rep.generator(i + 1));
            for (int j = i + 2; j < n; ++j)
                CHECK(rep.generator(i) * rep.generator(j) == rep.generator(j) * rep.generator(i));
        }
    }
}

TEST_CASE("products follow the word", "[lkrep]")
{
    LKRepresentation rep(4);
    auto w = BraidWord::from_signed(4, {1, -3, 2});
    CHECK(rep.matrix(w) == rep.generator(1) * rep.generator(3, -1) * rep.generator(2));
    CHECK(rep.matrix(BraidWord(4)) == RingMatrix::identity(6));
    CHECK_THROWS_AS(rep.matrix(BraidWord(3)), std::invalid_argument);

    krammer::testing::Rng rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        auto v = krammer::testing::random_word(rng, 4, 8);
        CHECK(rep.matrix(v) * rep.matrix(inverse_word(v)) == RingMatrix::identity(6));
    }
}

TEST_CASE("distinct short braids have distinct matrices", "[lkrep]")
{
    using namespace krammer::testing;
    LKRepresentation rep(3);
    auto words = reduced_words(3, 3);
    std::vector<RingMatrix> mats;
    std::vector<std::vector<FreeWord>> images;
    for (const auto& w : words) {
        mats.push_back(rep.matrix(w));
        images.push_back(artin_images(w));
    }
    std::size_t equal_pairs = 0;
    for (std::size_t a = 0; a < words.size(); ++a)
        for (std::size_t b = a + 1; b < words.size(); ++b) {
            const bool same_braid = images[a] == images[b];
            equal_pairs += same_braid;
            CHECK((mats[a] == mats[b]) == same_braid);
        }
    // 1 2 1 = 2 1 2 among others
    CHECK(equal_pairs > 0);
}

TEST_CASE("Artin action sanity", "[lkrep]")
{
    using namespace krammer::testing;
    auto a = artin_images(BraidWord::from_signed(3, {1, 2, 1}));
    auto b = artin_images(BraidWord::from_signed(3, {2, 1, 2}));
    CHECK(a == b);
    CHECK(artin_images(BraidWord::from_signed(3, {1, -1})) == artin_images(BraidWord(3)));
    CHECK(artin_images(BraidWord::from_signed(3, {1, 2})) != artin_images(BraidWord::from_signed(3, {2, 1})));
    CHECK(reduced_words(3, 2).size() == 1 + 4 + 12);
}
