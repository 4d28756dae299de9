#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cubeprod/certificate.hpp"
#include "cubeprod/coefficient_vector.hpp"

namespace cubeprod {

struct SieveReport {
    long modulus = 0;
    bool feasible = true;
    std::uint64_t surviving_residue_pairs = 0;
};

/// Decides whether the system n + j d = a_j x_j^3 (mod m) with
/// gcd(n, d, m) = 1 has any residue solution: a pair (n, d) mod m survives iff
/// for every housed j there is some x with a_j x^3 = n + j d (mod m).
/// Infeasibility is a sound elimination (a necessary condition for any
/// integer solution fails).
SieveReport sieve(const CoefficientVector& v, long modulus);

/// {8, 16, 9, 27, 5, 7, 63, 72}: covers the 2- and 3-adic arguments used in
/// the hand eliminations plus small primes <= k-1.
const std::vector<long>& default_sieve_moduli();

/// First modulus in the list (default set if empty) at which v is infeasible.
std::optional<Certificate> filter_sieve(const CoefficientVector& v,
                                        const std::vector<long>& moduli = {});

}  // namespace cubeprod
