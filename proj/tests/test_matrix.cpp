#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace krammer;
using krammer::testing::random_matrix;
using krammer::testing::Rng;

namespace {
const LaurentPoly q = LaurentPoly::q();
const LaurentPoly t = LaurentPoly::t();

// Laplace expansion along the first row, independent of Berkowitz.
LaurentPoly cofactor_det(const RingMatrix& m)
{
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    LaurentPoly sum;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c).is_zero()) continue;
        RingMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t k = 0, kk = 0; k < n; ++k)
                if (k != c) minor(r - 1, kk++) = m(r, k);
        LaurentPoly term = m(0, c) * cofactor_det(minor);
        sum += c % 2 == 0 ? term : -term;
    }
    return sum;
}
}  // namespace

TEST_CASE("identity is neutral", "[matrix]")
{
    Rng rng(2);
    auto m = random_matrix(rng, 4);
    CHECK(RingMatrix::identity(4) * m == m);
    CHECK(m * RingMatrix::identity(4) == m);
}

TEST_CASE("1x1 generator inverse", "[matrix]")
{
    RingMatrix a(1, 1, -t * q * q);
    RingMatrix b(1, 1, -LaurentPoly::monomial(1, -2, -1));
    CHECK(a * b == RingMatrix::identity(1));
    CHECK(inverse_exact(a) == b);
}

TEST_CASE("characteristic polynomial examples", "[matrix]")
{
    RingMatrix m(2, 2, std::vector<LaurentPoly>{q, t, 1, 2});
    auto cp = charpoly(m);
    REQUIRE(cp.size() == 3);
    CHECK(cp[2] == 1);
    CHECK(cp[1] == -(q + 2));
    CHECK(cp[0] == 2 * q - t);

    CHECK(charpoly(RingMatrix::identity(3)) == std::vector<LaurentPoly>{-1, 3, -3, 1});
    CHECK(charpoly(RingMatrix(0, 0)) == std::vector<LaurentPoly>{1});
}

TEST_CASE("determinant examples", "[matrix]")
{
    RingMatrix m(2, 2, std::vector<LaurentPoly>{q, t, 1, 2});
    CHECK(determinant(m) == 2 * q - t);

    RingMatrix upper(3, 3, std::vector<LaurentPoly>{q, 5, t, 0, t, 7, 0, 0, q - 1});
    CHECK(determinant(upper) == q * t * (q - 1));

    // Diagonal at q = 1 collapses to ((1-t)(1+t))^N
    auto form = form_matrix(3).normalized;
    auto at_one = form.map([](const LaurentPoly& p) { return collapse_q1(p); });
    CHECK(determinant(at_one) == ((1 - t) * (1 + t)).pow(3));

    CHECK(determinant(form_matrix(2).J) == form_prefactor() * (1 - q * t) * (1 + q * q * t));
}

TEST_CASE("Berkowitz agrees with cofactor expansion", "[matrix][property]")
{
    Rng rng(17);
    for (std::size_t n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 8; ++trial) {
            auto m = random_matrix(rng, n);
            CHECK(determinant(m) == cofactor_det(m));
        }
}

TEST_CASE("determinant is multiplicative", "[matrix][property]")
{
    Rng rng(19);
    for (int trial = 0; trial < 10; ++trial) {
        auto a = random_matrix(rng, 4), b = random_matrix(rng, 4);
        CHECK(determinant(a * b) == determinant(a) * determinant(b));
    }
}

TEST_CASE("exact and numeric characteristic polynomials agree", "[matrix][property]")
{
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        auto m = random_matrix(rng, 5);
        auto params = krammer::testing::random_unit_params(rng);
        std::vector<cplx> evaluated;
        for (const auto& c : charpoly(m)) evaluated.push_back(eval(c, params.q0(), params.t0()));
        CHECK(charpoly_distance(evaluated, numeric_charpoly(evaluate(m, params))) < 1e-8);
    }
}

TEST_CASE("exact inverse", "[matrix]")
{
    RingMatrix unimodular(2, 2, std::vector<LaurentPoly>{q, 1 + t, 0, t});
    auto inv = inverse_exact(unimodular);
    CHECK(unimodular * inv == RingMatrix::identity(2));
    CHECK(inv * unimodular == RingMatrix::identity(2));

    for (int n = 3; n <= 4; ++n)
        for (int i = 1; i < n; ++i) {
            auto g = generator_matrix(n, i);
            CHECK(g * inverse_exact(g) == RingMatrix::identity(g.rows()));
        }

    CHECK_THROWS_AS(inverse_exact(RingMatrix(2, 2, std::vector<LaurentPoly>{1, q, 1, q})), SingularMatrixError);
    CHECK_THROWS_AS(inverse_exact(RingMatrix(1, 1, 1 + q)), std::domain_error);
    CHECK_THROWS_AS(inverse_exact(RingMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("shape errors", "[matrix]")
{
    CHECK_THROWS_AS(RingMatrix(2, 3) * RingMatrix(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(RingMatrix(2, 3) + RingMatrix(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(charpoly(RingMatrix(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(RingMatrix(2, 2, std::vector<LaurentPoly>{1, 2, 3}), std::invalid_argument);
}
