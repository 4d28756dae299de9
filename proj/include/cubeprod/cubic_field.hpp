#pragma once

#include <string>

#include <gmpxx.h>

namespace cubeprod {

/// Exact element of the pure cubic field Q(cbrt(5)) as rational coordinates
/// c0 + c1*a + c2*a^2 on the basis {1, a, a^2}, where a^3 = 5. The ring of
/// integers is Z[a]; an element is integral iff all coordinates are integers.
class CubicFieldElement {
  public:
    mpq_class c0, c1, c2;

    CubicFieldElement() : c0(0), c1(0), c2(0) {}
    CubicFieldElement(int v) : c0(v), c1(0), c2(0) {}
    CubicFieldElement(mpq_class v) : c0(std::move(v)), c1(0), c2(0) { c0.canonicalize(); }
    CubicFieldElement(mpq_class a0, mpq_class a1, mpq_class a2)
        : c0(std::move(a0)), c1(std::move(a1)), c2(std::move(a2)) {
        c0.canonicalize();
        c1.canonicalize();
        c2.canonicalize();
    }

    static CubicFieldElement generator() { return {0, 1, 0}; }  // a = cbrt(5)

    bool is_zero() const { return c0 == 0 && c1 == 0 && c2 == 0; }
    bool is_integral() const {
        return c0.get_den() == 1 && c1.get_den() == 1 && c2.get_den() == 1;
    }

    CubicFieldElement operator+(const CubicFieldElement& o) const {
        return {c0 + o.c0, c1 + o.c1, c2 + o.c2};
    }
    CubicFieldElement operator-(const CubicFieldElement& o) const {
        return {c0 - o.c0, c1 - o.c1, c2 - o.c2};
    }
    CubicFieldElement operator-() const { return {-c0, -c1, -c2}; }

    CubicFieldElement operator*(const CubicFieldElement& o) const {
        // reduce via a^3 = 5
        return {c0 * o.c0 + 5 * (c1 * o.c2 + c2 * o.c1),
                c0 * o.c1 + c1 * o.c0 + 5 * c2 * o.c2,
                c0 * o.c2 + c1 * o.c1 + c2 * o.c0};
    }

    CubicFieldElement operator/(const CubicFieldElement& o) const { return *this * o.inverse(); }

    bool operator==(const CubicFieldElement& o) const {
        return c0 == o.c0 && c1 == o.c1 && c2 == o.c2;
    }
    bool operator!=(const CubicFieldElement& o) const { return !(*this == o); }

    /// Field norm N(c0 + c1 a + c2 a^2) = c0^3 + 5 c1^3 + 25 c2^3 - 15 c0 c1 c2.
    mpq_class norm() const {
        return c0 * c0 * c0 + 5 * c1 * c1 * c1 + 25 * c2 * c2 * c2 - 15 * c0 * c1 * c2;
    }

    CubicFieldElement inverse() const;

    CubicFieldElement pow(unsigned e) const {
        CubicFieldElement r(1);
        for (unsigned j = 0; j < e; ++j) r = r * *this;
        return r;
    }

    std::string str() const;
};

inline CubicFieldElement operator*(const mpq_class& s, const CubicFieldElement& x) {
    return CubicFieldElement(s) * x;
}

/// a = cbrt(5); the totally ramified prime above 5.
CubicFieldElement field_prime_above_five();
/// 2 - a; the totally ramified prime above 3. (2-a)^3 = 3 * fundamental_unit().
CubicFieldElement field_prime_above_three();
/// 1 - 4a + 2a^2; generates the free part of the unit group.
CubicFieldElement fundamental_unit();

}  // namespace cubeprod
