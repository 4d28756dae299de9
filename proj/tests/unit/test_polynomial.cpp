#include <doctest.h>

#include "cubeprod/polynomial.hpp"

using namespace cubeprod;

namespace {
const std::vector<std::string> kXY = {"x", "y"};
}

TEST_SUITE("polynomial") {

TEST_CASE("basic arithmetic and term bookkeeping") {
    RationalPoly x = RationalPoly::variable(kXY, 0);
    RationalPoly y = RationalPoly::variable(kXY, 1);
    RationalPoly square = (x + y) * (x + y);
    CHECK(square.coefficient({2, 0}) == 1);
    CHECK(square.coefficient({1, 1}) == 2);
    CHECK(square.coefficient({0, 2}) == 1);
    CHECK(square.coefficient({1, 0}) == 0);

    // cancellation leaves no zero terms stored
    RationalPoly zero = square - square;
    CHECK(zero.is_zero());
    CHECK(zero.terms().empty());
    CHECK((x - x).is_zero());
}

TEST_CASE("evaluation") {
    RationalPoly x = RationalPoly::variable(kXY, 0);
    RationalPoly y = RationalPoly::variable(kXY, 1);
    RationalPoly p = x.pow(3) - y * mpq_class(7) + RationalPoly::constant(kXY, mpq_class(1, 2));
    CHECK(p.eval({2, mpq_class(1, 7)}) == mpq_class(15, 2));
}

TEST_CASE("exact division recovers the cofactor") {
    RationalPoly x = RationalPoly::variable(kXY, 0);
    RationalPoly y = RationalPoly::variable(kXY, 1);
    RationalPoly q = x * x * mpq_class(3) - x * y + y * y * mpq_class(5, 7);
    RationalPoly t = x * mpq_class(2) + y.pow(2) - RationalPoly::constant(kXY, 4);
    auto recovered = (q * t).divide_exact(t);
    REQUIRE(recovered.has_value());
    CHECK(*recovered == q);

    auto fails = (q * t + x).divide_exact(t);
    CHECK_FALSE(fails.has_value());
}

TEST_CASE("proportionality detection") {
    RationalPoly x = RationalPoly::variable(kXY, 0);
    RationalPoly y = RationalPoly::variable(kXY, 1);
    RationalPoly p = x.pow(3) + y.pow(3);
    auto c = (p * mpq_class(-7, 3)).proportionality_to(p);
    REQUIRE(c.has_value());
    CHECK(*c == mpq_class(-7, 3));
    CHECK_FALSE((p + x).proportionality_to(p).has_value());
}

TEST_CASE("mismatched variable sets are rejected") {
    RationalPoly x = RationalPoly::variable(kXY, 0);
    RationalPoly z = RationalPoly::variable({"z"}, 0);
    CHECK_THROWS_AS((void)(x + z), std::invalid_argument);
}

}  // TEST_SUITE
