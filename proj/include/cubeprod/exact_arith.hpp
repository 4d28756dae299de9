#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace cubeprod {

/// Factorization of a nonzero integer over the primes <= bound:
/// n = sign * cofactor * prod p^e, with the cofactor positive and coprime
/// to every prime <= bound.
struct SmoothFactorization {
    long bound = 2;
    int sign = 1;
    std::map<long, unsigned long> exponents;  // prime -> exponent, primes <= bound only
    mpz_class cofactor = 1;

    mpz_class reconstruct() const;
    bool is_smooth() const { return cofactor == 1; }
};

/// Primes p <= bound, ascending.
std::vector<long> primes_up_to(long bound);

/// Split n into smooth part and cofactor by trial division. Rejects n = 0.
SmoothFactorization factor_smooth_part(const mpz_class& n, long bound);

/// The unique positive cube-free c with n = c * f^3. Rejects n = 0.
mpz_class cube_free_part(const mpz_class& n);

/// Exact integer cube root: returns r with r^3 = n when one exists
/// (negative n allowed), otherwise nullopt. No floating point.
std::optional<mpz_class> is_perfect_cube(const mpz_class& n);

/// Exponent residues mod 3, one per prime <= f.bound in ascending order.
/// Requires f.cofactor == 1.
std::vector<int> exponent_class(const SmoothFactorization& f);

// int64 fast paths used by the search loops; exact for any int64 input.
std::int64_t cube_free_part_i64(std::int64_t n);
std::optional<std::int64_t> is_perfect_cube_i64(std::int64_t n);

}  // namespace cubeprod
