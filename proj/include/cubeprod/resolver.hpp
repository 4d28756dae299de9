#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cubeprod/certificate.hpp"
#include "cubeprod/coefficient_vector.hpp"

namespace cubeprod {

/// n + j d = coefficient * cube_root^3 with coefficient = cube_free_part(n+jd).
struct TermFactorization {
    int j = 0;
    std::int64_t coefficient = 1;
    mpz_class cube_root;
};

/// A verified tuple (k, i, n, d, y) with its coefficient vector and per-term
/// factorizations; construction (verify_solution) machine-checks every
/// invariant: d >= 1, n*y != 0, gcd(n,d) = 1, product = y^3 exactly.
struct SolutionRecord {
    int k = 0, i = 0;
    std::int64_t n = 0, d = 1;
    mpz_class y;
    CoefficientVector vector;
    std::vector<TermFactorization> terms;

    bool same_tuple(const SolutionRecord& o) const {
        return k == o.k && i == o.i && n == o.n && d == o.d;
    }
};

class SolutionError : public std::runtime_error {
  public:
    enum class Kind { BadInput, ZeroTerm, GcdViolation, NonCubeProduct, NotSmooth };
    SolutionError(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

/// Thrown by resolvers when a vector does not fit the reduction they claim.
class PatternMismatchError : public std::runtime_error {
  public:
    explicit PatternMismatchError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Computes the term product, extracts the exact cube root and builds the
/// term factorizations; throws SolutionError on any violated precondition.
SolutionRecord verify_solution(int k, int i, std::int64_t n, std::int64_t d);

/// a_j = cube_free_part(n + j d) for each housed j; throws NotSmooth if some
/// a_j has a prime factor > k-1 (meaning the input is not a solution).
CoefficientVector coefficient_vector_of(int k, int i, std::int64_t n, std::int64_t d);

/// The involution (k, i, n, d) -> (k, k-1-i, -n-(k-1)d, d); y is recomputed
/// so that the product identity holds literally for the new tuple.
SolutionRecord involute(const SolutionRecord& s);

struct Resolution {
    std::vector<SolutionRecord> records;
    Certificate certificate;
};

/// i in {0, k-1}: shifting m = n + d reduces to the full product of k-1
/// consecutive progression terms, solved by an external table (only quadruple
/// products (m, d) = (-9, 5), (-6, 5) are cubes). Solutions exist iff k = 5.
Resolution resolve_edge(int k, int i);

/// Normalizes the ternary cubic at the given triple (content division plus at
/// most one forced parity substitution) to the pattern X^3+Y^3+2Z^3 = 0, maps
/// the complete solution set +-(1,1,-1) back, solves for (n, d), keeps d >= 1
/// and gcd(n, d) = 1, and re-verifies from scratch. Without an explicit
/// triple, scans triples lexicographically for the first that fits. Requires
/// k <= 8 (pairwise coprimality of the cube parts). Throws
/// PatternMismatchError when no reduction applies.
Resolution resolve_two_adic_descent(const CoefficientVector& v,
                                    std::optional<TripleIndices> triple = std::nullopt);

/// Resolves the two surviving k=7, i=3 vectors through the simultaneous pair
/// x^3+y^3 = 9z^3, 5x^3-y^3 = 3w^3 whose only solutions are +-(1,2,1,-1)
/// (trusted fact, desk-verified by the oracle searches). The mirror vector is
/// resolved through the flipping involution.
Resolution resolve_k7_i3(const CoefficientVector& v);

/// The eight solutions, each re-verified on first use.
const std::vector<SolutionRecord>& theorem_table();

struct RationalPoint {
    mpq_class x, y;
    bool operator==(const RationalPoint& o) const { return x == o.x && y == o.y; }
    bool operator<(const RationalPoint& o) const { return x != o.x ? x < o.x : y < o.y; }
};

/// All rational points (x, y) with y^3 = (x+1)(x+2)(x+3)(x+5)(x+6)(x+7) and
/// x = a/b in lowest terms, |a| <= height, 1 <= b <= height; includes the six
/// trivial roots with y = 0. Sorted by x.
std::vector<RationalPoint> corollary_points(long height);

}  // namespace cubeprod
