#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cubeprod/coefficient_vector.hpp"

namespace cubeprod {

enum class CertificateKind {
    RankZeroList,    // some triple's ternary cubic has Selmer invariant in the rank-zero table
    ThreeOnes,       // three consecutive housed entries all equal to one
    BennettWindow,   // window identity reduces to an unsolvable A X^3 - B Y^3 = 4 Z^3
    ModularSieve,    // no residue pair (n, d) mod m admits all terms as coefficient*cube
    SpecialEquation, // resolved through the complete solution set of x^3+y^3+2z^3 = 0
    EdgeCaseHTT,     // i in {0, k-1}: reduced to the full-product table
    PairOfCubics,    // resolved through the simultaneous pair x^3+y^3=9z^3, 5x^3-y^3=3w^3
};

const char* to_string(CertificateKind kind);
std::optional<CertificateKind> certificate_kind_from_string(const std::string& s);

struct TripleIndices {
    int r = 0, s = 0, t = 0;
    bool operator==(const TripleIndices& o) const { return r == o.r && s == o.s && t == o.t; }
};

/// Machine-checkable record of why a vector was eliminated or how it was
/// resolved. Every certificate re-validates independently of the enumeration
/// run that produced it.
struct Certificate {
    CertificateKind kind = CertificateKind::RankZeroList;
    int k = 0;
    int i = 0;
    std::vector<std::int64_t> vector_entries;  // empty for edge cases

    // witness payload; which fields are meaningful depends on kind
    std::optional<TripleIndices> triple;       // RankZeroList, SpecialEquation, PairOfCubics
    std::optional<TripleIndices> second_triple;  // PairOfCubics
    std::array<mpz_class, 3> form{0, 0, 0};    // RankZeroList, BennettWindow
    mpz_class selmer_d = 0;                    // RankZeroList, BennettWindow
    int window_start = -1;                     // BennettWindow
    int ones_index = -1;                       // ThreeOnes
    long modulus = 0;                          // ModularSieve
    std::vector<std::pair<std::int64_t, std::int64_t>> derived_solutions;  // resolutions: (n, d)

    // trusted external facts the certificate leans on, if any
    bool trusted = false;
    std::string trusted_basis;

    CoefficientVector vector() const {
        CoefficientVector v;
        v.k = k;
        v.i = i;
        v.entries = vector_entries;
        return v;
    }
};

}  // namespace cubeprod
