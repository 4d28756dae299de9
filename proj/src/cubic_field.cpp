#include "cubeprod/cubic_field.hpp"

#include <stdexcept>

namespace cubeprod {

CubicFieldElement CubicFieldElement::inverse() const {
    // Solve M v = e1 by Cramer's rule, where M is the multiplication matrix
    //   [ c0  5*c2  5*c1 ]
    //   [ c1  c0    5*c2 ]
    //   [ c2  c1    c0   ]
    // with det(M) = norm().
    mpq_class det = norm();
    if (det == 0) {
        if (is_zero()) throw std::invalid_argument("CubicFieldElement: inverse of zero");
        // norm vanishes only at zero in a field; anything else is a bug
        throw std::logic_error("CubicFieldElement: zero norm on nonzero element");
    }
    // Cofactor expansion of the first column of M^{-1}.
    mpq_class i0 = (c0 * c0 - 5 * c1 * c2) / det;
    mpq_class i1 = (5 * c2 * c2 - c0 * c1) / det;
    mpq_class i2 = (c1 * c1 - c0 * c2) / det;
    return {i0, i1, i2};
}

std::string CubicFieldElement::str() const {
    return c0.get_str() + " + " + c1.get_str() + "*a + " + c2.get_str() + "*a^2";
}

CubicFieldElement field_prime_above_five() { return CubicFieldElement::generator(); }

CubicFieldElement field_prime_above_three() {
    return CubicFieldElement(2) - CubicFieldElement::generator();
}

CubicFieldElement fundamental_unit() { return {1, -4, 2}; }

}  // namespace cubeprod
