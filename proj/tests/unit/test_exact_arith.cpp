#include <doctest.h>

#include <map>
#include <random>

#include "cubeprod/exact_arith.hpp"

using namespace cubeprod;

namespace {

// independent trial-division oracle over primes <= bound
std::map<long, unsigned long> trial_division_oracle(long n, long bound) {
    std::map<long, unsigned long> exponents;
    long m = n < 0 ? -n : n;
    for (long p = 2; p <= bound; ++p) {
        while (m % p == 0) {
            m /= p;
            exponents[p]++;
        }
    }
    return exponents;
}

bool is_cube_free_naive(const mpz_class& n) {
    mpz_class m = abs(n);
    for (mpz_class p = 2; p * p * p <= m; ++p) {
        mpz_class p3 = p * p * p;
        if (mpz_divisible_p(m.get_mpz_t(), p3.get_mpz_t())) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("exact-arith") {

TEST_CASE("factor_smooth_part on worked examples") {
    SmoothFactorization f = factor_smooth_part(360, 5);
    CHECK(f.sign == 1);
    CHECK(f.cofactor == 1);
    CHECK(f.exponents == std::map<long, unsigned long>{{2, 3}, {3, 2}, {5, 1}});
    CHECK(f.reconstruct() == 360);

    f = factor_smooth_part(-7, 5);
    CHECK(f.sign == -1);
    CHECK(f.exponents.empty());
    CHECK(f.cofactor == 7);
    CHECK(f.reconstruct() == -7);

    f = factor_smooth_part(44100, 7);
    auto expected = trial_division_oracle(44100, 7);
    CHECK(f.exponents == expected);
    CHECK(f.cofactor == 1);
    CHECK(f.reconstruct() == 44100);
}

TEST_CASE("factor_smooth_part rejects zero and bad bounds") {
    CHECK_THROWS_AS(factor_smooth_part(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(factor_smooth_part(6, 1), std::invalid_argument);
}

TEST_CASE("cube_free_part on worked examples") {
    CHECK(cube_free_part(8) == 1);
    CHECK(cube_free_part(-24) == 3);  // -24 = 3 * (-2)^3, positive by convention
    CHECK(cube_free_part(16) == 2);
    CHECK_THROWS_AS(cube_free_part(0), std::invalid_argument);
}

TEST_CASE("is_perfect_cube on worked examples") {
    auto r = is_perfect_cube(1728000);
    REQUIRE(r.has_value());
    CHECK(*r == 120);
    CHECK(mpz_class(*r * *r * *r) == 1728000);
    CHECK(*is_perfect_cube(0) == 0);
    CHECK(*is_perfect_cube(-64) == -4);
    CHECK_FALSE(is_perfect_cube(100).has_value());
}

TEST_CASE("exponent_class on worked examples") {
    CHECK(exponent_class(factor_smooth_part(12, 4)) == std::vector<int>{2, 1});
    CHECK(exponent_class(factor_smooth_part(1, 4)) == std::vector<int>{0, 0});
    CHECK(exponent_class(factor_smooth_part(36, 4)) == std::vector<int>{2, 2});
    // non-smooth input rejected
    CHECK_THROWS_AS(exponent_class(factor_smooth_part(77, 4)), std::invalid_argument);
}

TEST_CASE("cube_free_part is invariant under cube multipliers") {
    std::mt19937_64 rng(20240801);
    std::uniform_int_distribution<std::int64_t> pick_n(-1000000, 1000000);
    std::uniform_int_distribution<std::int64_t> pick_m(1, 50);
    for (int it = 0; it < 2000; ++it) {
        std::int64_t n = pick_n(rng);
        if (n == 0) continue;
        std::int64_t m = pick_m(rng);
        mpz_class scaled = mpz_class(n) * m * m * m;
        CHECK(cube_free_part(scaled) == cube_free_part(mpz_class(n)));
    }
}

TEST_CASE("cube_free_part output is positive and cube-free; cube test agrees") {
    std::mt19937_64 rng(20240802);
    std::uniform_int_distribution<std::int64_t> pick(-1000000000, 1000000000);
    for (int it = 0; it < 500; ++it) {
        std::int64_t n = pick(rng);
        if (n == 0) continue;
        mpz_class c = cube_free_part(mpz_class(n));
        CHECK(c > 0);
        CHECK(is_cube_free_naive(c));
        // n = c * f^3 for integer f
        mpz_class f3 = mpz_class(n) / c;
        CHECK(c * f3 == n);
        CHECK(is_perfect_cube(f3).has_value());
        // is_perfect_cube present iff cube-free part is 1
        CHECK(is_perfect_cube(mpz_class(n)).has_value() == (c == 1));
    }
}

TEST_CASE("reconstruction is the identity on random inputs") {
    std::mt19937_64 rng(20240803);
    std::uniform_int_distribution<std::int64_t> pick(-1000000000, 1000000000);
    std::uniform_int_distribution<int> pick_bound(2, 19);
    for (int it = 0; it < 10000; ++it) {
        std::int64_t n = pick(rng);
        if (n == 0) continue;
        long bound = pick_bound(rng);
        SmoothFactorization f = factor_smooth_part(mpz_class(n), bound);
        CHECK(f.reconstruct() == n);
        for (const auto& [p, e] : f.exponents) {
            CHECK(p <= bound);
            CHECK(e > 0);
        }
        for (long p : primes_up_to(bound))
            CHECK(!mpz_divisible_ui_p(f.cofactor.get_mpz_t(), static_cast<unsigned long>(p)));
    }
}

TEST_CASE("int64 fast paths agree with the arbitrary-precision paths") {
    std::mt19937_64 rng(20240804);
    std::uniform_int_distribution<std::int64_t> pick(-4000000000000LL, 4000000000000LL);
    for (int it = 0; it < 2000; ++it) {
        std::int64_t n = pick(rng);
        if (n == 0) continue;
        CHECK(mpz_class(cube_free_part_i64(n)) == cube_free_part(mpz_class(n)));
        auto a = is_perfect_cube_i64(n);
        auto b = is_perfect_cube(mpz_class(n));
        CHECK(a.has_value() == b.has_value());
        if (a && b) CHECK(mpz_class(*a) == *b);
    }
}

}  // TEST_SUITE
