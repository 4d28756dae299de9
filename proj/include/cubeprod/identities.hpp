#pragma once

#include <array>

#include "cubeprod/cubic_field.hpp"
#include "cubeprod/polynomial.hpp"

namespace cubeprod {

using FieldPoly = Polynomial<CubicFieldElement>;

/// Expands (X+Y)^3 * (G^2 - F^3 + 432 D^2) with F = -12D*U/(X+Y),
/// G = 36D*(X-Y)/(X+Y), and returns the rational constant c such that the
/// expansion equals c * (X^3 + Y^3 + D U^3). Throws if no such constant
/// exists (which would indicate a transcription bug).
mpq_class verify_selmer_descent_identity(const mpz_class& selmer_d);

/// Same for the curve v^2 = u^3 - 27 attached to x^3 + y^3 + 2z^3 = 0 with
/// F = -6z/(x+y), G = 9(x-y)/(x+y); returns c with expansion = c*(x^3+y^3+2z^3).
mpq_class verify_two_cubes_descent_identity();

/// Cube-product case abc = f^3 attached to the curve v^2 + v = u^3 with
/// F = -abxy/(f^2 z^2), G = -1/2 - ab(ax^3-by^3)/(2 f^3 z^3). Confirms that
/// 4 f^6 z^6 (G^2 + G - F^3) is divisible by a b (a x^3 + b y^3) + f^3 z^3
/// (the denominator-cleared form of ax^3+by^3+cz^3 under c = f^3/(ab)) and
/// returns the polynomial cofactor.
RationalPoly verify_unit_selmer_descent_identity();

/// Coordinates on {1, a, a^2} of (2-a) * fundamental_unit()^b * (f+g*a+h*a^2)^3
/// as exact polynomials in f, g, h. Requires b in {0,1,2}.
std::array<RationalPoly, 3> expand_unit_power_product(int b);

/// Constants of the Weierstrass model Y^2 Z + a3 Y Z^2 = X^3 + a6 Z^3 and of
/// the substitution (X,Y,Z) = (-u, c1 x, c2 x + c3 y) with inverse
/// (x,y,u) = (d1 Y, d2 Y + d3 Z, -X).
struct WeierstrassConstants {
    CubicFieldElement a3, a6;
    CubicFieldElement y_from_x;               // c1
    CubicFieldElement z_from_x, z_from_y;     // c2, c3
    CubicFieldElement x_from_big_y;           // d1
    CubicFieldElement y_from_big_y, y_from_big_z;  // d2, d3
};
WeierstrassConstants weierstrass_constants();

/// Expands Y^2 Z + a3 Y Z^2 - X^3 - a6 Z^3 under the substitution above and
/// returns lambda in K with the expansion equal to
/// lambda * [(a x - y)(x^2 - x y + y^2) - 3 (2-a) u^3] as polynomials over K.
/// Also checks the inverse-map relations d1 = 1/c1, d2 = -c2/(c1 c3),
/// d3 = 1/c3. Throws on any mismatch.
CubicFieldElement verify_weierstrass_transform();

/// Expands (x+1)^2 (x+4) - x (x+3)^2 and returns the constant value (4).
/// Throws if the expansion is not constant.
mpq_class bennett_window_constant();

}  // namespace cubeprod
