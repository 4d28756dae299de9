#include "cubeprod/oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "cubeprod/exact_arith.hpp"

namespace cubeprod {

namespace {

void check_window(const SearchWindow& w) {
    if (w.n_min > w.n_max) throw std::invalid_argument("search_window: empty n range");
    if (w.d_max < 1) throw std::invalid_argument("search_window: d_max must be >= 1");
    if (w.k < 5 || w.k > 11 || w.i < 0 || w.i >= w.k)
        throw std::invalid_argument("search_window: invalid (k, i)");
}

// Exponent classes mod 3 over the primes 2, 3, 5, 7 for the smooth shortcut.
struct TermClass {
    std::array<std::uint8_t, 4> digits{0, 0, 0, 0};
    bool smooth = false;
};

constexpr std::array<std::int64_t, 4> kSmallPrimes = {2, 3, 5, 7};

TermClass classify_term(std::int64_t term, int prime_count) {
    TermClass tc;
    std::int64_t c = cube_free_part_i64(term);
    for (int p = 0; p < prime_count; ++p) {
        while (c % kSmallPrimes[static_cast<size_t>(p)] == 0) {
            c /= kSmallPrimes[static_cast<size_t>(p)];
            tc.digits[static_cast<size_t>(p)] = static_cast<std::uint8_t>(
                (tc.digits[static_cast<size_t>(p)] + 1) % 3);
        }
    }
    tc.smooth = (c == 1);
    return tc;
}

}  // namespace

std::vector<SolutionRecord> search_window(const SearchWindow& w, CubeTestMethod method) {
    check_window(w);
    const int prime_count = static_cast<int>(primes_up_to(w.k - 1).size());
    std::vector<SolutionRecord> found;

    for (std::int64_t d = 1; d <= w.d_max; ++d) {
        for (std::int64_t n = w.n_min; n <= w.n_max; ++n) {
            if (n == 0 || std::gcd(n, d) != 1) continue;
            bool candidate = true;

            if (method == CubeTestMethod::SmoothShortcut) {
                std::array<std::uint8_t, 4> sum{0, 0, 0, 0};
                for (int j = 0; j < w.k && candidate; ++j) {
                    if (j == w.i) continue;
                    std::int64_t term = n + j * d;
                    if (term == 0) {
                        candidate = false;
                        break;
                    }
                    TermClass tc = classify_term(term, prime_count);
                    if (!tc.smooth) {
                        candidate = false;
                        break;
                    }
                    for (int p = 0; p < prime_count; ++p)
                        sum[static_cast<size_t>(p)] = static_cast<std::uint8_t>(
                            (sum[static_cast<size_t>(p)] + tc.digits[static_cast<size_t>(p)]) % 3);
                }
                if (candidate)
                    for (int p = 0; p < prime_count; ++p)
                        if (sum[static_cast<size_t>(p)] != 0) candidate = false;
            } else {
                mpz_class product = 1;
                for (int j = 0; j < w.k && candidate; ++j) {
                    if (j == w.i) continue;
                    mpz_class term = mpz_class(n) + mpz_class(j) * d;
                    if (term == 0) {
                        candidate = false;
                        break;
                    }
                    product *= term;
                }
                if (candidate && !is_perfect_cube(product)) candidate = false;
            }

            if (candidate) found.push_back(verify_solution(w.k, w.i, n, d));
        }
    }
    std::sort(found.begin(), found.end(), [](const SolutionRecord& a, const SolutionRecord& b) {
        return std::tie(a.n, a.d) < std::tie(b.n, b.d);
    });
    return found;
}

std::vector<SolutionRecord> search_all_windows(std::int64_t n_min, std::int64_t n_max,
                                               std::int64_t d_max, int threads) {
    if (n_min > n_max || d_max < 1) throw std::invalid_argument("search_all_windows: empty window");
    if (threads < 1) threads = 1;

    // For fixed k, classify all k terms once per (n, d); a candidate index i
    // must absorb every non-smooth or zero term, and the remaining class sum
    // must vanish. Survivors are re-verified exactly.
    auto scan_chunk = [&](int k, std::int64_t lo, std::int64_t hi,
                          std::vector<SolutionRecord>& out) {
        const int prime_count = static_cast<int>(primes_up_to(k - 1).size());
        std::vector<TermClass> classes(static_cast<size_t>(k));
        for (std::int64_t n = lo; n <= hi; ++n) {
            if (n == 0) continue;
            for (std::int64_t d = 1; d <= d_max; ++d) {
                if (std::gcd(n, d) != 1) continue;
                int bad_count = 0, bad_index = -1;
                std::array<std::uint8_t, 4> total{0, 0, 0, 0};
                for (int j = 0; j < k; ++j) {
                    std::int64_t term = n + j * d;
                    if (term == 0) {
                        classes[static_cast<size_t>(j)] = TermClass{};
                        ++bad_count;
                        bad_index = j;
                        continue;
                    }
                    classes[static_cast<size_t>(j)] = classify_term(term, prime_count);
                    if (!classes[static_cast<size_t>(j)].smooth) {
                        ++bad_count;
                        bad_index = j;
                    } else {
                        for (int p = 0; p < prime_count; ++p)
                            total[static_cast<size_t>(p)] = static_cast<std::uint8_t>(
                                (total[static_cast<size_t>(p)] +
                                 classes[static_cast<size_t>(j)].digits[static_cast<size_t>(p)]) %
                                3);
                    }
                }
                if (bad_count >= 2) continue;
                for (int i = 0; i < k; ++i) {
                    if (bad_count == 1 && i != bad_index) continue;
                    bool zero_sum = true;
                    for (int p = 0; p < prime_count && zero_sum; ++p) {
                        int digit = total[static_cast<size_t>(p)];
                        if (classes[static_cast<size_t>(i)].smooth)
                            digit = (digit + 3 -
                                     classes[static_cast<size_t>(i)].digits[static_cast<size_t>(p)]) %
                                    3;
                        zero_sum = digit == 0;
                    }
                    if (!zero_sum) continue;
                    out.push_back(verify_solution(k, i, n, d));
                }
            }
        }
    };

    std::vector<SolutionRecord> found;
    for (int k = 5; k <= 11; ++k) {
        std::vector<std::vector<SolutionRecord>> chunk_hits(static_cast<size_t>(threads));
        const std::int64_t span = n_max - n_min + 1;
        const std::int64_t chunk = (span + threads - 1) / threads;
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) {
            const std::int64_t lo = n_min + w * chunk;
            const std::int64_t hi = std::min(n_max, lo + chunk - 1);
            if (lo > n_max) break;
            pool.emplace_back([&, k, lo, hi, w] { scan_chunk(k, lo, hi, chunk_hits[static_cast<size_t>(w)]); });
        }
        for (auto& th : pool) th.join();
        for (auto& hits : chunk_hits)
            for (auto& r : hits) found.push_back(std::move(r));
    }
    std::sort(found.begin(), found.end(), [](const SolutionRecord& a, const SolutionRecord& b) {
        return std::tie(a.k, a.i, a.n, a.d) < std::tie(b.k, b.i, b.n, b.d);
    });
    return found;
}

std::vector<PairCubicsSolution> search_pair_cubics(std::int64_t height) {
    if (height < 2) throw std::invalid_argument("search_pair_cubics: height must be >= 2");
    std::vector<PairCubicsSolution> found;
    for (std::int64_t x = -height; x <= height; ++x) {
        if (x == 0) continue;
        for (std::int64_t y = -height; y <= height; ++y) {
            if (y == 0 || std::gcd(x, y) != 1) continue;
            const std::int64_t x3 = x * x * x, y3 = y * y * y;
            const std::int64_t s1 = x3 + y3;
            if (s1 == 0 || s1 % 9 != 0) continue;
            auto z = is_perfect_cube_i64(s1 / 9);
            if (!z || *z == 0) continue;
            const std::int64_t s2 = 5 * x3 - y3;
            if (s2 == 0 || s2 % 3 != 0) continue;
            auto w = is_perfect_cube_i64(s2 / 3);
            if (!w || *w == 0) continue;
            found.push_back({x, y, *z, *w});
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

std::vector<FieldRelationSolution> search_cubic_field_relation(std::int64_t height) {
    if (height < 2) throw std::invalid_argument("search_cubic_field_relation: height must be >= 2");

    // Coordinate box bound height^(2/3) + 1, computed exactly.
    mpz_class h2 = mpz_class(static_cast<long>(height)) * static_cast<long>(height);
    mpz_class b;
    mpz_root(b.get_mpz_t(), h2.get_mpz_t(), 3);
    const std::int64_t box = b.get_si() + 1;

    const CubicFieldElement alpha = CubicFieldElement::generator();
    const CubicFieldElement scale_inv = (CubicFieldElement(3) * field_prime_above_three()).inverse();

    std::vector<FieldRelationSolution> found;
    for (std::int64_t x = -height; x <= height; ++x) {
        if (x == 0) continue;
        for (std::int64_t y = -height; y <= height; ++y) {
            if (y == 0 || std::gcd(x, y) != 1) continue;

            // Norm filter: N(target) = (5x^3 - y^3)(x^2 - xy + y^2)^3 / 81
            // must be the cube of an integer, and that integer is N(u).
            mpz_class x3 = mpz_class(static_cast<long>(x));
            x3 = x3 * x3 * x3;
            mpz_class y3 = mpz_class(static_cast<long>(y));
            y3 = y3 * y3 * y3;
            mpz_class s = mpz_class(static_cast<long>(x)) * static_cast<long>(x) -
                          mpz_class(static_cast<long>(x)) * static_cast<long>(y) +
                          mpz_class(static_cast<long>(y)) * static_cast<long>(y);
            mpz_class norm_num = (5 * x3 - y3) * s * s * s;
            if (norm_num == 0 || !mpz_divisible_ui_p(norm_num.get_mpz_t(), 81)) continue;
            auto norm_root = is_perfect_cube(norm_num / 81);
            if (!norm_root) continue;

            CubicFieldElement target =
                (alpha * CubicFieldElement(mpq_class(static_cast<long>(x))) -
                 CubicFieldElement(mpq_class(static_cast<long>(y)))) *
                CubicFieldElement(mpq_class(s)) * scale_inv;
            if (!target.is_integral()) continue;

            const std::int64_t want_norm = norm_root->get_si();
            bool hit = false;
            for (std::int64_t p = -box; p <= box && !hit; ++p) {
                for (std::int64_t q = -box; q <= box && !hit; ++q) {
                    for (std::int64_t r = -box; r <= box && !hit; ++r) {
                        const std::int64_t nrm =
                            p * p * p + 5 * q * q * q + 25 * r * r * r - 15 * p * q * r;
                        if (nrm != want_norm) continue;
                        CubicFieldElement u(mpq_class(static_cast<long>(p)),
                                            mpq_class(static_cast<long>(q)),
                                            mpq_class(static_cast<long>(r)));
                        if (u * u * u == target) {
                            found.push_back({x, y, u});
                            hit = true;
                        }
                    }
                }
            }
        }
    }
    return found;
}

}  // namespace cubeprod
