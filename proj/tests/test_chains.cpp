#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace krammer;

namespace {
const LaurentPoly q = LaurentPoly::q();
const LaurentPoly t = LaurentPoly::t();
const LaurentPoly qt_inv = LaurentPoly::monomial(1, -1, -1);
}  // namespace

TEST_CASE("cell names", "[chains]")
{
    CHECK(to_string(CellName::Y(1, 3, 4)) == "Y_1,3");
    CHECK(to_string(CellName::Y(2, 4)) == "Y_2");
    CHECK(CellName::Y(2, 4).degree() == 2);
    CHECK(CellName::x(2, 4).degree() == 1);
    CHECK_THROWS_AS(CellName::Y(3, 2, 4), std::out_of_range);
    CHECK_THROWS_AS(CellName::Y(5, 4), std::out_of_range);
    CHECK_THROWS_AS(CellName::Y(1, 1), std::invalid_argument);
}

TEST_CASE("boundaries of Y cells", "[chains]")
{
    auto d = y_boundary(CellName::Y(1, 2, 3));
    CHECK(d.coefficient(CellName::x(1, 3)) == -qt_inv * (q - 1));
    CHECK(d.coefficient(CellName::x(2, 3)) == LaurentPoly::q(-1) * (q - 1));
    CHECK(d.coefficient(CellName::loop_b(3)) == -qt_inv * (q - 1) * (q - 1));
    CHECK(d.coefficient(CellName::x(3, 3)).is_zero());

    auto e = y_boundary(CellName::Y(2, 3));
    CHECK(e.coefficient(CellName::x(2, 3)) == qt_inv * (qt_inv + 1) * (1 - t));
    CHECK(e.coefficient(CellName::loop_b(3)) == qt_inv * (qt_inv + 1) * (q - 1));

    CHECK_THROWS_AS(y_boundary(CellName::x(1, 3)), std::invalid_argument);
}

TEST_CASE("v_ij are cycles", "[chains]")
{
    for (int n = 2; n <= 6; ++n) CHECK(vij_cycle_check(n));
    auto bad = VijCoefficients::standard();
    bad.yij = 1;
    CHECK_FALSE(vij_cycle_check(3, bad));
    bad = VijCoefficients::standard();
    bad.yj = -bad.yj;
    CHECK_FALSE(vij_cycle_check(2, bad));
}

TEST_CASE("chain vectors with opaque cells", "[chains]")
{
    ChainVector v;
    v.add(CellName::Y(1, 2), q);
    v.add(CellName::Y(1, 2), -q);
    CHECK(v.is_zero());
    v.add_opaque(CellName::X(1, 2));
    CHECK(v.is_opaque(CellName::X(1, 2)));
    CHECK_THROWS(v.coefficient(CellName::X(1, 2)));
    CHECK_THROWS(y_boundary(v));
}

TEST_CASE("Y in X coordinates", "[chains]")
{
    auto y2 = y_in_x_coordinates(CellName::Y(2, 3), CrossTermSign::minus);
    CHECK(y2.coefficient(CellName::X(1, 3, 3)) == -LaurentPoly::q(-5) * LaurentPoly::t(-1) * (q - 1) * (1 + q * t));
    CHECK(y2.coefficient(CellName::X(1, 2, 3)) == LaurentPoly::q(-4));
    CHECK(y2.coefficient(CellName::X(2, 3, 3)) == -LaurentPoly::monomial(1, -4, -1));
    CHECK(y2.is_opaque(CellName::X(1, 3)));

    auto y2c = y_in_x_coordinates(CellName::Y(2, 3), CrossTermSign::plus);
    CHECK(y2c.coefficient(CellName::X(1, 3, 3)) == -y2.coefficient(CellName::X(1, 3, 3)));

    auto y13 = y_in_x_coordinates(CellName::Y(1, 3, 3));
    CHECK(y13.coefficient(CellName::X(1, 3, 3)) == LaurentPoly::q(-3));
    CHECK(y13.coefficient(CellName::X(1, 2, 3)).is_zero());

    auto y12 = y_in_x_coordinates(CellName::Y(1, 2, 2));
    CHECK(y12.coefficient(CellName::X(1, 2, 2)) == LaurentPoly::q(-3));
}

TEST_CASE("X-Y pairing", "[chains]")
{
    CHECK(xy_pairing(3, CellName::X(1, 2, 3), CellName::Y(1, 2, 3)) == q.pow(3) * (q - 1).pow(2));
    CHECK(xy_pairing(3, CellName::X(2, 3, 3), CellName::Y(2, 3, 3)) == q * (q - 1).pow(2));
    CHECK(xy_pairing(3, CellName::X(1, 2, 3), CellName::Y(1, 3, 3)).is_zero());
    CHECK(xy_pairing(3, CellName::X(1, 3), CellName::Y(1, 3)).is_zero());
    CHECK_THROWS_AS(xy_pairing(3, CellName::Y(1, 2, 3), CellName::Y(1, 2, 3)), std::invalid_argument);
}

TEST_CASE("intersection oracle reproduces the form", "[chains]")
{
    for (int n = 2; n <= 5; ++n) {
        auto report = compare_oracle(n);
        CHECK(report.oracle == report.reference);
        REQUIRE(report.reconciliation.has_value());
        CHECK(report.reconciliation->unit == 1);
        CHECK_FALSE(report.reconciliation->bar);
    }
    // The minus sign agrees only where no cross term appears.
    CHECK(compare_oracle(2, CrossTermSign::minus).mismatched_entries == 0);
    auto minus = compare_oracle(3, CrossTermSign::minus);
    CHECK(minus.mismatched_entries > 0);
    CHECK_FALSE(minus.reconciliation.has_value());
}

TEST_CASE("reconciliation search", "[chains]")
{
    auto j = form_matrix(3).J;
    auto found = find_reconciliation(LaurentPoly::monomial(-1, 2, 1) * bar(j), j);
    REQUIRE(found.has_value());
    CHECK(found->bar);
    CHECK(found->unit == LaurentPoly::monomial(-1, 2, 1));
    CHECK_FALSE(find_reconciliation((1 + q) * j, j).has_value());
    CHECK_FALSE(find_reconciliation(RingMatrix(1, 1, 1), j).has_value());
}

TEST_CASE("free derivatives", "[chains]")
{
    const int n = 2;
    auto labels = deck_labels(n);
    auto x = letter(CellName::x(1, n));
    auto b = letter(CellName::loop_b(n));

    auto d = fox_boundary(x * b, labels, FoxOrder::left_to_right);
    CHECK(d.coefficient(CellName::x(1, n)) == 1);
    CHECK(d.coefficient(CellName::loop_b(n)) == q);

    d = fox_boundary(x * b, labels, FoxOrder::right_to_left);
    CHECK(d.coefficient(CellName::loop_b(n)) == 1);
    CHECK(d.coefficient(CellName::x(1, n)) == t);

    d = fox_boundary(x.inverse(), labels);
    CHECK(d.coefficient(CellName::x(1, n)) == -LaurentPoly::q(-1));

    CHECK(fox_boundary(x * x.inverse(), labels).is_zero());
    CHECK_THROWS_AS(fox_boundary(letter(CellName::a(1, n)), labels), std::invalid_argument);

    CHECK(commutator(x, b).letters.size() == 4);
    CHECK_THROWS_AS(attaching_word(CellName::x(1, n)), std::invalid_argument);
}

TEST_CASE("free derivatives reproduce the Y boundaries", "[chains]")
{
    for (int n = 2; n <= 5; ++n) {
        auto cal = calibrate_fox(n);
        CHECK(cal.order == FoxOrder::right_to_left);
        CHECK_FALSE(cal.bar);
        CHECK(cal.unit == 1);
    }
    FoxCalibration other{FoxOrder::left_to_right, false, 1};
    CHECK_FALSE(fox_reproduces(other, CellName::Y(1, 2, 3)));
}
