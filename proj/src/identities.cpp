#include "cubeprod/identities.hpp"

#include <stdexcept>

namespace cubeprod {

namespace {

const std::vector<std::string> kXYU = {"X", "Y", "U"};
const std::vector<std::string> kXYZ = {"x", "y", "z"};
const std::vector<std::string> kABFXYZ = {"a", "b", "f", "x", "y", "z"};
const std::vector<std::string> kFGH = {"f", "g", "h"};
const std::vector<std::string> kXYU_lower = {"x", "y", "u"};

RationalPoly rvar(const std::vector<std::string>& vars, size_t idx) {
    return RationalPoly::variable(vars, idx);
}

// Field element whose coordinates are polynomials in a fixed variable set;
// multiplication reduces via a^3 = 5 like CubicFieldElement does.
struct PolyFieldElt {
    std::array<RationalPoly, 3> c;

    static PolyFieldElt from_constant(const std::vector<std::string>& vars,
                                      const CubicFieldElement& x) {
        return {{RationalPoly::constant(vars, x.c0), RationalPoly::constant(vars, x.c1),
                 RationalPoly::constant(vars, x.c2)}};
    }

    PolyFieldElt operator*(const PolyFieldElt& o) const {
        mpq_class five(5);
        return {{c[0] * o.c[0] + (c[1] * o.c[2] + c[2] * o.c[1]) * five,
                 c[0] * o.c[1] + c[1] * o.c[0] + (c[2] * o.c[2]) * five,
                 c[0] * o.c[2] + c[1] * o.c[1] + c[2] * o.c[0]}};
    }
};

}  // namespace

mpq_class verify_selmer_descent_identity(const mpz_class& selmer_d) {
    if (selmer_d < 1) throw std::invalid_argument("verify_selmer_descent_identity: D must be >= 1");
    mpq_class d(selmer_d);
    RationalPoly x = rvar(kXYU, 0), y = rvar(kXYU, 1), u = rvar(kXYU, 2);
    RationalPoly sum = x + y, diff = x - y;
    // (X+Y)^3 G^2 = 1296 D^2 (X-Y)^2 (X+Y); (X+Y)^3 F^3 = -1728 D^3 U^3.
    RationalPoly expansion = diff * diff * sum * mpq_class(1296 * d * d) +
                             u.pow(3) * mpq_class(1728 * d * d * d) +
                             sum.pow(3) * mpq_class(432 * d * d);
    RationalPoly target = x.pow(3) + y.pow(3) + u.pow(3) * d;
    auto ratio = expansion.proportionality_to(target);
    if (!ratio) throw std::logic_error("selmer descent identity: expansion not proportional");
    return *ratio;
}

mpq_class verify_two_cubes_descent_identity() {
    RationalPoly x = rvar(kXYZ, 0), y = rvar(kXYZ, 1), z = rvar(kXYZ, 2);
    RationalPoly sum = x + y, diff = x - y;
    RationalPoly expansion = diff * diff * sum * mpq_class(81) + z.pow(3) * mpq_class(216) +
                             sum.pow(3) * mpq_class(27);
    RationalPoly target = x.pow(3) + y.pow(3) + z.pow(3) * mpq_class(2);
    auto ratio = expansion.proportionality_to(target);
    if (!ratio) throw std::logic_error("two-cubes descent identity: expansion not proportional");
    return *ratio;
}

RationalPoly verify_unit_selmer_descent_identity() {
    RationalPoly a = rvar(kABFXYZ, 0), b = rvar(kABFXYZ, 1), f = rvar(kABFXYZ, 2);
    RationalPoly x = rvar(kABFXYZ, 3), y = rvar(kABFXYZ, 4), z = rvar(kABFXYZ, 5);
    RationalPoly ax3 = a * x.pow(3), by3 = b * y.pow(3);
    RationalPoly f3z3 = f.pow(3) * z.pow(3);
    // 4 f^6 z^6 (G^2 + G - F^3) = a^2 b^2 (a x^3 - b y^3)^2 - f^6 z^6 + 4 a^3 b^3 x^3 y^3
    RationalPoly numer = (a * b).pow(2) * (ax3 - by3).pow(2) - f3z3 * f3z3 +
                         (a * b).pow(3) * (x * y).pow(3) * mpq_class(4);
    RationalPoly target = a * b * (ax3 + by3) + f3z3;
    auto quotient = numer.divide_exact(target);
    if (!quotient) throw std::logic_error("unit selmer descent identity: not divisible");
    return *quotient;
}

std::array<RationalPoly, 3> expand_unit_power_product(int b) {
    if (b < 0 || b > 2) throw std::invalid_argument("expand_unit_power_product: b must be 0, 1 or 2");
    PolyFieldElt v{{rvar(kFGH, 0), rvar(kFGH, 1), rvar(kFGH, 2)}};
    PolyFieldElt acc = v * v * v;
    CubicFieldElement scale = field_prime_above_three() * fundamental_unit().pow(static_cast<unsigned>(b));
    acc = acc * PolyFieldElt::from_constant(kFGH, scale);
    return acc.c;
}

WeierstrassConstants weierstrass_constants() {
    WeierstrassConstants w;
    w.a3 = {mpq_class(-99, 5), mpq_class(9, 5), mpq_class(27, 5)};
    w.a6 = {mpq_class(-2511, 25), mpq_class(-891, 25), mpq_class(1377, 25)};
    w.y_from_x = {1, -1, mpq_class(-1, 5)};
    w.z_from_x = {mpq_class(-5, 6), mpq_class(-5, 9), mpq_class(-5, 18)};
    w.z_from_y = {mpq_class(5, 9), mpq_class(5, 18), mpq_class(1, 6)};
    w.x_from_big_y = {0, mpq_class(-1, 6), mpq_class(-1, 6)};
    w.y_from_big_y = {mpq_class(-5, 6), 0, mpq_class(-1, 6)};
    w.y_from_big_z = {9, mpq_class(-9, 5), mpq_class(-9, 5)};
    return w;
}

CubicFieldElement verify_weierstrass_transform() {
    const WeierstrassConstants w = weierstrass_constants();

    if (w.x_from_big_y != w.y_from_x.inverse())
        throw std::logic_error("weierstrass transform: d1 != 1/c1");
    if (w.y_from_big_y != -(w.z_from_x / (w.y_from_x * w.z_from_y)))
        throw std::logic_error("weierstrass transform: d2 != -c2/(c1 c3)");
    if (w.y_from_big_z != w.z_from_y.inverse())
        throw std::logic_error("weierstrass transform: d3 != 1/c3");

    using FP = FieldPoly;
    auto var = [](size_t idx) { return FP::variable(kXYU_lower, idx); };
    FP x = var(0), y = var(1), u = var(2);

    FP big_x = -u;
    FP big_y = x * w.y_from_x;
    FP big_z = x * w.z_from_x + y * w.z_from_y;
    FP curve = big_y * big_y * big_z + big_y * big_z * big_z * w.a3 - big_x.pow(3) -
               big_z.pow(3) * w.a6;

    CubicFieldElement alpha = CubicFieldElement::generator();
    FP target = (x * alpha - y) * (x * x - x * y + y * y) -
                u.pow(3) * (CubicFieldElement(3) * field_prime_above_three());
    auto lambda = curve.proportionality_to(target);
    if (!lambda) throw std::logic_error("weierstrass transform: expansion not proportional");
    return *lambda;
}

mpq_class bennett_window_constant() {
    std::vector<std::string> vars = {"x"};
    RationalPoly x = RationalPoly::variable(vars, 0);
    RationalPoly one = RationalPoly::constant(vars, 1);
    RationalPoly expansion = (x + one) * (x + one) * (x + one * mpq_class(4)) -
                             x * (x + one * mpq_class(3)) * (x + one * mpq_class(3));
    if (!expansion.is_constant()) throw std::logic_error("window identity: expansion not constant");
    return expansion.constant_value();
}

}  // namespace cubeprod
