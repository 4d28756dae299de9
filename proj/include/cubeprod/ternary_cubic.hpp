#pragma once

#include <array>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "cubeprod/certificate.hpp"
#include "cubeprod/coefficient_vector.hpp"

namespace cubeprod {

/// Diagonal ternary cubic form a X^3 + b Y^3 + c Z^3 with optional provenance
/// recording which vector and triple produced it.
struct TernaryCubic {
    mpz_class a, b, c;

    struct Provenance {
        int k = 0, i = 0;
        std::vector<std::int64_t> vector_entries;
        TripleIndices triple;
    };
    std::optional<Provenance> provenance;
};

/// Builds the form ((s-t) a_r, (t-r) a_s, (r-s) a_t) from the identity
/// (s-t)(n+rd) + (t-r)(n+sd) + (r-s)(n+td) = 0. Requires r, s, t distinct,
/// none equal to v.i, all in [0, v.k-1].
TernaryCubic from_triple(const CoefficientVector& v, TripleIndices rst);

/// Divides the form by the gcd of its coefficients (which never changes the
/// Selmer invariant: the content cubed divides abc).
TernaryCubic normalized(const TernaryCubic& t);

/// D = cube_free_part(a*b*c); permutation- and sign-invariant.
mpz_class selmer_invariant(const TernaryCubic& t);

/// The 32 cube-free values D for which v^2 = u^3 - 432 D^2 has rank zero
/// over Q (externally computed, frozen here); D in this list certifies that
/// a X^3 + b Y^3 + c Z^3 = 0 has no solutions in nonzero integers.
const std::vector<long>& rank_zero_list();

/// RankZeroList certificate iff selmer_invariant(t) is in the table.
std::optional<Certificate> rank_zero_certificate(const TernaryCubic& t);

/// The complete set of coprime nonzero integer solutions of x^3+y^3+2z^3 = 0,
/// i.e. {(1,1,-1), (-1,-1,1)}. Trusted fact; consistency-checked at desk
/// scale by bounded_primitive_search.
std::vector<std::array<long, 3>> special_equation_solutions();

/// All primitive solutions (gcd 1, xyz != 0, coordinates bounded by height)
/// of a X^3 + b Y^3 + c Z^3 = 0, one representative per +- pair (the one with
/// x > 0), sorted lexicographically.
std::vector<std::array<mpz_class, 3>> bounded_primitive_search(const TernaryCubic& t, long height);

}  // namespace cubeprod
