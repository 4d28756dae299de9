#include <doctest.h>

#include <random>

#include "cubeprod/identities.hpp"

using namespace cubeprod;

namespace {

// Numeric oracle for the descent identity: evaluate F, G as rational
// functions at a sample point with X + Y != 0 and compare
// (X+Y)^3 (G^2 - F^3 + 432 D^2) against c (X^3 + Y^3 + D U^3) directly.
void check_descent_numeric(long d_value, const mpq_class& c, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(-20, 20);
    for (int it = 0; it < 50; ++it) {
        mpq_class x = pick(rng), y = pick(rng), u = pick(rng);
        if (x + y == 0) continue;
        mpq_class d(d_value);
        mpq_class f = mpq_class(-12) * d * u / (x + y);
        mpq_class g = mpq_class(36) * d * (x - y) / (x + y);
        mpq_class lhs = (x + y) * (x + y) * (x + y) * (g * g - f * f * f + 432 * d * d);
        mpq_class rhs = c * (x * x * x + y * y * y + d * u * u * u);
        CHECK(lhs == rhs);
    }
}

}  // namespace

TEST_SUITE("identities") {

TEST_CASE("window gap identity expands to the constant 4") {
    CHECK(bennett_window_constant() == 4);
}

TEST_CASE("descent identity constants, frozen and numerically cross-checked") {
    std::mt19937_64 rng(20240806);
    mpq_class c1 = verify_selmer_descent_identity(1);
    CHECK(c1 == 1728);
    check_descent_numeric(1, c1, rng);

    mpq_class c4 = verify_selmer_descent_identity(4);
    CHECK(c4 == c1 * 16);  // c(D) = c(1) * D^2
    check_descent_numeric(4, c4, rng);

    mpq_class big = verify_selmer_descent_identity(14700);  // largest table entry
    CHECK(big == c1 * mpq_class(14700) * 14700);
    CHECK_THROWS_AS(verify_selmer_descent_identity(0), std::invalid_argument);
}

TEST_CASE("two-cubes descent identity") {
    CHECK(verify_two_cubes_descent_identity() == 108);

    // (x, y, z) = (1, 1, -1): both the form and the curve expression vanish
    mpq_class x = 1, y = 1, z = -1;
    CHECK(x * x * x + y * y * y + 2 * z * z * z == 0);
    mpq_class f = mpq_class(-6) * z / (x + y);
    mpq_class g = mpq_class(9) * (x - y) / (x + y);
    CHECK(g * g - f * f * f + 27 == 0);

    // scaling (2, 2, -2) behaves the same by homogeneity
    x = 2, y = 2, z = -2;
    CHECK(x * x * x + y * y * y + 2 * z * z * z == 0);
    f = mpq_class(-6) * z / (x + y);
    g = mpq_class(9) * (x - y) / (x + y);
    CHECK(g * g - f * f * f + 27 == 0);
}

TEST_CASE("cube-product descent cofactor with numeric spot check") {
    RationalPoly q = verify_unit_selmer_descent_identity();

    // a = b = f = 1, (x, y, z) = (1, -1, 1): the form value is 1, so no
    // constraint; G^2 + G - F^3 must equal cofactor * ab / (4 f^6 z^6) = -1/4.
    std::vector<mpq_class> point = {1, 1, 1, 1, -1, 1};
    CHECK(q.eval(point) == -1);

    mpq_class a = 1, b = 1, f = 1, x = 1, y = -1, z = 1;
    mpq_class big_f = -(a * b * x * y) / (f * f * z * z);
    mpq_class big_g = mpq_class(-1, 2) -
                      (a * b * (a * x * x * x - b * y * y * y)) / (2 * f * f * f * z * z * z);
    CHECK(big_g * big_g + big_g - big_f * big_f * big_f == mpq_class(-1, 4));
}

TEST_CASE("unit power expansions") {
    // b = 0, evaluated at (f, g, h) = (-1, 0, 0): (2-a)(-1)^3 = -2 + a
    auto coords0 = expand_unit_power_product(0);
    CHECK(coords0[0].eval({-1, 0, 0}) == -2);
    CHECK(coords0[1].eval({-1, 0, 0}) == 1);
    CHECK(coords0[2].eval({-1, 0, 0}) == 0);

    // b = 1: alpha coordinate is the displayed cubic form
    auto coords1 = expand_unit_power_product(1);
    const std::vector<std::pair<std::vector<unsigned>, long>> expected = {
        {{3, 0, 0}, -9},  {{2, 1, 0}, -24},  {{1, 2, 0}, 120},  {{0, 3, 0}, -45},
        {{2, 0, 1}, 120}, {{1, 1, 1}, -270}, {{0, 2, 1}, -120}, {{1, 0, 2}, -120},
        {{0, 1, 2}, 600}, {{0, 0, 3}, -225}};
    CHECK(coords1[1].terms().size() == expected.size());
    for (const auto& [mono, coeff] : expected) CHECK(coords1[1].coefficient(mono) == coeff);
    for (const auto& [mono, coeff] : coords1[1].terms()) {
        (void)mono;
        CHECK(coeff.get_den() == 1);
        CHECK(coeff.get_num() % 3 == 0);
    }

    // b = 2: the 1-coordinate is divisible by 3 throughout
    auto coords2 = expand_unit_power_product(2);
    for (const auto& [mono, coeff] : coords2[0].terms()) {
        (void)mono;
        CHECK(coeff.get_den() == 1);
        CHECK(coeff.get_num() % 3 == 0);
    }

    CHECK_THROWS_AS(expand_unit_power_product(3), std::invalid_argument);
}

TEST_CASE("weierstrass transform: lambda, inverse map, vanishing point") {
    CubicFieldElement lambda = verify_weierstrass_transform();  // throws on any mismatch
    CHECK(lambda == CubicFieldElement(mpq_class(-4, 9), mpq_class(-2, 9), mpq_class(-1, 9)));

    const WeierstrassConstants w = weierstrass_constants();
    CHECK(w.x_from_big_y == CubicFieldElement(0, mpq_class(-1, 6), mpq_class(-1, 6)));
    CHECK(w.y_from_big_y == CubicFieldElement(mpq_class(-5, 6), 0, mpq_class(-1, 6)));
    CHECK(w.y_from_big_z == CubicFieldElement(9, mpq_class(-9, 5), mpq_class(-9, 5)));

    // (x, y, u) = (1, 2, -1) lies on both sides
    CubicFieldElement alpha = CubicFieldElement::generator();
    CubicFieldElement x(1), y(2), u(-1);
    CubicFieldElement target = (alpha * x - y) * (x * x - x * y + y * y) -
                               CubicFieldElement(3) * field_prime_above_three() * u * u * u;
    CHECK(target.is_zero());
    CubicFieldElement big_x = -u, big_y = w.y_from_x * x, big_z = w.z_from_x * x + w.z_from_y * y;
    CubicFieldElement curve = big_y * big_y * big_z + w.a3 * big_y * big_z * big_z -
                              big_x * big_x * big_x - w.a6 * big_z * big_z * big_z;
    CHECK(curve.is_zero());
}

}  // TEST_SUITE
