#include "cubeprod/ternary_cubic.hpp"

#include <algorithm>
#include <stdexcept>

#include "cubeprod/exact_arith.hpp"

namespace cubeprod {

TernaryCubic from_triple(const CoefficientVector& v, TripleIndices rst) {
    const int r = rst.r, s = rst.s, t = rst.t;
    auto in_range = [&](int j) { return j >= 0 && j < v.k && j != v.i; };
    if (!in_range(r) || !in_range(s) || !in_range(t) || r == s || s == t || r == t)
        throw std::invalid_argument("from_triple: indices must be distinct, housed and in range");
    TernaryCubic form;
    form.a = mpz_class(s - t) * v.entry_at(r);
    form.b = mpz_class(t - r) * v.entry_at(s);
    form.c = mpz_class(r - s) * v.entry_at(t);
    form.provenance = TernaryCubic::Provenance{v.k, v.i, v.entries, rst};
    return form;
}

TernaryCubic normalized(const TernaryCubic& t) {
    mpz_class g = gcd(gcd(abs(t.a), abs(t.b)), abs(t.c));
    TernaryCubic n = t;
    if (g > 1) {
        n.a /= g;
        n.b /= g;
        n.c /= g;
    }
    return n;
}

mpz_class selmer_invariant(const TernaryCubic& t) {
    if (t.a == 0 || t.b == 0 || t.c == 0)
        throw std::invalid_argument("selmer_invariant: coefficients must be nonzero");
    return cube_free_part(t.a * t.b * t.c);
}

const std::vector<long>& rank_zero_list() {
    static const std::vector<long> table = {
        1,    3,    4,    5,    10,   14,   18,   21,   25,   36,   45,
        60,   100,  147,  150,  175,  196,  225,  245,  252,  300,  315,
        350,  882,  980,  1050, 1470, 1575, 1764, 2940, 7350, 14700};
    return table;
}

std::optional<Certificate> rank_zero_certificate(const TernaryCubic& t) {
    mpz_class d = selmer_invariant(t);
    if (!d.fits_slong_p()) return std::nullopt;
    const auto& table = rank_zero_list();
    if (!std::binary_search(table.begin(), table.end(), d.get_si())) return std::nullopt;

    Certificate cert;
    cert.kind = CertificateKind::RankZeroList;
    cert.form = {t.a, t.b, t.c};
    cert.selmer_d = d;
    cert.trusted = true;
    cert.trusted_basis = "rank-zero table for v^2 = u^3 - 432 D^2 (externally computed)";
    if (t.provenance) {
        cert.k = t.provenance->k;
        cert.i = t.provenance->i;
        cert.vector_entries = t.provenance->vector_entries;
        cert.triple = t.provenance->triple;
    }
    return cert;
}

std::vector<std::array<long, 3>> special_equation_solutions() {
    return {{1, 1, -1}, {-1, -1, 1}};
}

std::vector<std::array<mpz_class, 3>> bounded_primitive_search(const TernaryCubic& t, long height) {
    if (height < 1) throw std::invalid_argument("bounded_primitive_search: height must be >= 1");
    if (t.a == 0 || t.b == 0 || t.c == 0)
        throw std::invalid_argument("bounded_primitive_search: coefficients must be nonzero");
    std::vector<std::array<mpz_class, 3>> found;
    for (long x = 1; x <= height; ++x) {
        for (long y = -height; y <= height; ++y) {
            if (y == 0) continue;
            mpz_class rhs = -(t.a * (mpz_class(x) * x * x) + t.b * (mpz_class(y) * y * y));
            if (rhs == 0) continue;  // z would be zero
            if (!mpz_divisible_p(rhs.get_mpz_t(), t.c.get_mpz_t())) continue;
            mpz_class zc = rhs / t.c;
            auto z = is_perfect_cube(zc);
            if (!z || *z == 0 || abs(*z) > height) continue;
            mpz_class g = gcd(gcd(mpz_class(x), abs(mpz_class(y))), abs(*z));
            if (g != 1) continue;
            found.push_back({mpz_class(x), mpz_class(y), *z});
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace cubeprod
