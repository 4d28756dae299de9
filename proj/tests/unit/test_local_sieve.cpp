#include <doctest.h>

#include <numeric>
#include <set>
#include <vector>

#include "cubeprod/local_sieve.hpp"
#include "cubeprod/resolver.hpp"

using namespace cubeprod;

namespace {

// Independent reference: surviving (n, d) residue pairs computed directly.
std::set<std::pair<long, long>> surviving_pairs_oracle(const CoefficientVector& v, long m) {
    std::set<std::pair<long, long>> pairs;
    const auto housed = v.housed_indices();
    for (long n = 0; n < m; ++n) {
        for (long d = 0; d < m; ++d) {
            if (std::gcd(std::gcd(n, d), m) != 1) continue;
            bool ok = true;
            for (int j : housed) {
                bool attainable = false;
                for (long x = 0; x < m && !attainable; ++x)
                    attainable = (v.entry_at(j) % m) * ((x * x % m) * x % m) % m == (n + j * d) % m;
                if (!attainable) {
                    ok = false;
                    break;
                }
            }
            if (ok) pairs.insert({n, d});
        }
    }
    return pairs;
}

}  // namespace

TEST_SUITE("local-sieve") {

TEST_CASE("worked eliminations") {
    SieveReport r = sieve({5, 1, {6, 1, 9, 4}}, 8);
    CHECK_FALSE(r.feasible);
    CHECK(r.surviving_residue_pairs == 0);

    r = sieve({6, 1, {50, 36, 1, 1, 15}}, 16);
    CHECK_FALSE(r.feasible);

    // a vector with a known solution is feasible at every default modulus
    const CoefficientVector solved{7, 3, {10, 3, 4, 18, 25, 4}};
    for (long m : default_sieve_moduli()) CHECK(sieve(solved, m).feasible);
}

TEST_CASE("counts match the reference implementation") {
    for (long m : {5L, 8L, 9L, 16L}) {
        for (const CoefficientVector& v :
             {CoefficientVector{5, 1, {6, 1, 9, 4}}, CoefficientVector{5, 1, {1, 2, 1, 4}},
              CoefficientVector{5, 2, {1, 1, 1, 1}}}) {
            SieveReport r = sieve(v, m);
            auto oracle = surviving_pairs_oracle(v, m);
            CHECK(r.surviving_residue_pairs == oracle.size());
            CHECK(r.feasible == !oracle.empty());
        }
    }
}

TEST_CASE("soundness: no true solution is ever sieved out") {
    for (const auto& rec : theorem_table())
        for (long m : default_sieve_moduli()) CHECK(sieve(rec.vector, m).feasible);
}

TEST_CASE("surviving pairs project along divisor moduli") {
    const CoefficientVector v{5, 1, {1, 2, 1, 4}};
    for (auto [m, m_small] : std::vector<std::pair<long, long>>{{16, 8}, {27, 9}, {72, 8}, {72, 9}}) {
        auto big = surviving_pairs_oracle(v, m);
        auto small = surviving_pairs_oracle(v, m_small);
        for (const auto& [n, d] : big) CHECK(small.count({n % m_small, d % m_small}) == 1);
        // consistency with the module's counts
        CHECK(sieve(v, m).surviving_residue_pairs == big.size());
        CHECK(sieve(v, m_small).surviving_residue_pairs == small.size());
    }
}

TEST_CASE("filter_sieve returns the first eliminating modulus") {
    auto cert = filter_sieve({5, 1, {6, 1, 9, 4}});
    REQUIRE(cert.has_value());
    CHECK(cert->kind == CertificateKind::ModularSieve);
    CHECK(cert->modulus == 8);

    CHECK_FALSE(filter_sieve({5, 1, {1, 2, 1, 4}}).has_value());
}

TEST_CASE("bad modulus rejected") {
    CHECK_THROWS_AS(sieve({5, 1, {1, 2, 1, 4}}, 1), std::invalid_argument);
}

}  // TEST_SUITE
