#include "cubeprod/exact_arith.hpp"

#include <cstdlib>
#include <stdexcept>

namespace cubeprod {

mpz_class SmoothFactorization::reconstruct() const {
    mpz_class value = cofactor;
    for (const auto& [p, e] : exponents) {
        mpz_class pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p), e);
        value *= pe;
    }
    return sign < 0 ? mpz_class(-value) : value;
}

std::vector<long> primes_up_to(long bound) {
    std::vector<long> primes;
    if (bound < 2) return primes;
    std::vector<bool> composite(static_cast<size_t>(bound) + 1, false);
    for (long p = 2; p <= bound; ++p) {
        if (composite[static_cast<size_t>(p)]) continue;
        primes.push_back(p);
        for (long q = p * p; q <= bound; q += p) composite[static_cast<size_t>(q)] = true;
    }
    return primes;
}

SmoothFactorization factor_smooth_part(const mpz_class& n, long bound) {
    if (n == 0) throw std::invalid_argument("factor_smooth_part: zero input");
    if (bound < 2) throw std::invalid_argument("factor_smooth_part: bound must be >= 2");

    SmoothFactorization f;
    f.bound = bound;
    f.sign = sgn(n) < 0 ? -1 : 1;
    mpz_class m = abs(n);
    for (long p : primes_up_to(bound)) {
        unsigned long e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
            ++e;
        }
        if (e > 0) f.exponents[p] = e;
    }
    f.cofactor = m;
    return f;
}

std::int64_t cube_free_part_i64(std::int64_t n) {
    if (n == 0) throw std::invalid_argument("cube_free_part: zero input");
    std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    std::uint64_t result = 1;
    // After removing every prime p with p^3 <= m, the remainder has at most
    // two prime factors, hence is cube-free. 2642245^3 < 2^64 <= 2642246^3.
    for (std::uint64_t p = 2; p <= 2642245 && p * p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p != 0) continue;
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        for (unsigned r = 0; r < e % 3; ++r) result *= p;
    }
    result *= m;
    return static_cast<std::int64_t>(result);
}

mpz_class cube_free_part(const mpz_class& n) {
    if (n == 0) throw std::invalid_argument("cube_free_part: zero input");
    if (n.fits_slong_p()) {
        long v = n.get_si();
        return mpz_class(cube_free_part_i64(v));
    }
    mpz_class m = abs(n);
    mpz_class result = 1;
    mpz_class p = 2;
    mpz_class p3;
    while (true) {
        mpz_pow_ui(p3.get_mpz_t(), p.get_mpz_t(), 3);
        if (p3 > m) break;
        if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            unsigned e = 0;
            while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
                mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
                ++e;
            }
            for (unsigned r = 0; r < e % 3; ++r) result *= p;
        }
        p += (p == 2) ? 1 : 2;
    }
    result *= m;
    return result;
}

std::optional<mpz_class> is_perfect_cube(const mpz_class& n) {
    mpz_class root;
    mpz_root(root.get_mpz_t(), n.get_mpz_t(), 3);
    // mpz_root truncates toward zero; confirm with a verification multiply.
    mpz_class cube = root * root * root;
    if (cube == n) return root;
    return std::nullopt;
}

std::optional<std::int64_t> is_perfect_cube_i64(std::int64_t n) {
    auto r = is_perfect_cube(mpz_class(static_cast<long>(n)));
    if (!r) return std::nullopt;
    return static_cast<std::int64_t>(r->get_si());
}

std::vector<int> exponent_class(const SmoothFactorization& f) {
    if (!f.is_smooth()) throw std::invalid_argument("exponent_class: input is not smooth to its bound");
    std::vector<int> residues;
    for (long p : primes_up_to(f.bound)) {
        auto it = f.exponents.find(p);
        residues.push_back(it == f.exponents.end() ? 0 : static_cast<int>(it->second % 3));
    }
    return residues;
}

}  // namespace cubeprod
