#include "cubeprod/vector_enum.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "cubeprod/exact_arith.hpp"
#include "cubeprod/ternary_cubic.hpp"

namespace cubeprod {

namespace {

void check_k(int k) {
    if (k < 5 || k > 11) throw std::invalid_argument("k must be in [5, 11]");
}

void check_ki(int k, int i) {
    check_k(k);
    if (i < 0 || i >= k) throw std::invalid_argument("i must be in [0, k-1]");
}

// Precomputed tables for one value of k, shared by all enumeration workers.
struct EnumTables {
    int k = 0;
    std::vector<std::int64_t> entries;             // sorted admissible values
    int n = 0;                                     // entries.size()
    int prime_count = 0;
    std::vector<int> class_of;                     // entry idx -> exponent-class index (base 3)
    std::vector<int> entry_of_class;               // class index -> entry idx (bijection)
    std::vector<int> class_add;                    // digitwise mod-3 addition, n_class x n_class
    std::vector<int> class_complement;             // class -> class summing to zero
    std::vector<std::uint16_t> compat;             // [a*n+b] bit d: gcd(entries[a],entries[b]) | d
    int n_class = 0;

    int add_class(int c1, int c2) const { return class_add[static_cast<size_t>(c1) * n_class + c2]; }
    bool compatible(int e1, int e2, int delta) const {
        return (compat[static_cast<size_t>(e1) * n + e2] >> delta) & 1u;
    }
};

const EnumTables& tables_for(int k) {
    static std::array<EnumTables, 12> cache;
    static std::array<std::once_flag, 12> flags;
    check_k(k);
    std::call_once(flags[static_cast<size_t>(k)], [k] {
        EnumTables t;
        t.k = k;
        t.entries = admissible_entries(k);
        t.n = static_cast<int>(t.entries.size());
        auto primes = primes_up_to(k - 1);
        t.prime_count = static_cast<int>(primes.size());
        t.n_class = 1;
        for (int p = 0; p < t.prime_count; ++p) t.n_class *= 3;

        t.class_of.resize(static_cast<size_t>(t.n));
        t.entry_of_class.assign(static_cast<size_t>(t.n_class), -1);
        for (int e = 0; e < t.n; ++e) {
            std::int64_t v = t.entries[static_cast<size_t>(e)];
            int cls = 0, base = 1;
            for (int p = 0; p < t.prime_count; ++p) {
                int expo = 0;
                while (v % primes[static_cast<size_t>(p)] == 0) {
                    v /= primes[static_cast<size_t>(p)];
                    ++expo;
                }
                cls += expo % 3 * base;
                base *= 3;
            }
            t.class_of[static_cast<size_t>(e)] = cls;
            t.entry_of_class[static_cast<size_t>(cls)] = e;
        }

        t.class_add.resize(static_cast<size_t>(t.n_class) * t.n_class);
        t.class_complement.resize(static_cast<size_t>(t.n_class));
        for (int c1 = 0; c1 < t.n_class; ++c1) {
            for (int c2 = 0; c2 < t.n_class; ++c2) {
                int sum = 0, base = 1, a = c1, b = c2;
                for (int p = 0; p < t.prime_count; ++p) {
                    sum += (a % 3 + b % 3) % 3 * base;
                    a /= 3;
                    b /= 3;
                    base *= 3;
                }
                t.class_add[static_cast<size_t>(c1) * t.n_class + c2] = sum;
            }
            int comp = 0, base = 1, a = c1;
            for (int p = 0; p < t.prime_count; ++p) {
                comp += (3 - a % 3) % 3 * base;
                a /= 3;
                base *= 3;
            }
            t.class_complement[static_cast<size_t>(c1)] = comp;
        }

        t.compat.resize(static_cast<size_t>(t.n) * t.n);
        for (int e1 = 0; e1 < t.n; ++e1) {
            for (int e2 = 0; e2 < t.n; ++e2) {
                std::int64_t g = std::gcd(t.entries[static_cast<size_t>(e1)],
                                          t.entries[static_cast<size_t>(e2)]);
                std::uint16_t mask = 0;
                for (int delta = 1; delta <= 10; ++delta)
                    if (delta % g == 0) mask |= static_cast<std::uint16_t>(1u << delta);
                t.compat[static_cast<size_t>(e1) * t.n + e2] = mask;
            }
        }
        cache[static_cast<size_t>(k)] = std::move(t);
    });
    return cache[static_cast<size_t>(k)];
}

struct SubtreeResult {
    EnumerationStats stats;
    std::vector<CoefficientVector> vectors;
};

// DFS below one fixed first entry. Slots follow housed indices ascending;
// the last slot is forced by the cube-product closure.
void run_subtree(const EnumTables& t, int k, int i, int first_entry_idx, SubtreeResult& out) {
    const std::vector<int> housed = [&] {
        std::vector<int> js;
        for (int j = 0; j < k; ++j)
            if (j != i) js.push_back(j);
        return js;
    }();
    const int slots = k - 1;

    std::vector<int> chosen(static_cast<size_t>(slots), -1);
    std::vector<int> class_at(static_cast<size_t>(slots), 0);

    chosen[0] = first_entry_idx;
    class_at[0] = t.class_of[static_cast<size_t>(first_entry_idx)];
    out.stats.incomplete_nodes++;  // the accepted length-1 prefix

    auto compatible_with_prefix = [&](int entry_idx, int depth) {
        for (int q = 0; q < depth; ++q) {
            int delta = housed[static_cast<size_t>(depth)] - housed[static_cast<size_t>(q)];
            if (!t.compatible(entry_idx, chosen[static_cast<size_t>(q)], delta)) return false;
        }
        return true;
    };

    auto emit = [&](int final_idx) {
        CoefficientVector v;
        v.k = k;
        v.i = i;
        v.entries.reserve(static_cast<size_t>(slots));
        for (int p = 0; p + 1 < slots; ++p)
            v.entries.push_back(t.entries[static_cast<size_t>(chosen[static_cast<size_t>(p)])]);
        v.entries.push_back(t.entries[static_cast<size_t>(final_idx)]);
        out.stats.complete_vectors++;
        out.vectors.push_back(std::move(v));
    };

    // Iterative DFS over slots [1, slots-2]; slot slots-1 is closed.
    int depth = 1;
    std::vector<int> cursor(static_cast<size_t>(slots), 0);
    while (depth >= 1) {
        if (depth == slots - 1) {
            // close the final slot: unique complement entry
            int cls = t.class_complement[static_cast<size_t>(class_at[static_cast<size_t>(depth - 1)])];
            int e = t.entry_of_class[static_cast<size_t>(cls)];
            if (e >= 0 && compatible_with_prefix(e, depth)) emit(e);
            --depth;
            continue;
        }
        int& cur = cursor[static_cast<size_t>(depth)];
        bool advanced = false;
        while (cur < t.n) {
            int e = cur++;
            if (!compatible_with_prefix(e, depth)) continue;
            chosen[static_cast<size_t>(depth)] = e;
            class_at[static_cast<size_t>(depth)] =
                t.add_class(class_at[static_cast<size_t>(depth - 1)], t.class_of[static_cast<size_t>(e)]);
            out.stats.incomplete_nodes++;
            ++depth;
            if (depth < slots) cursor[static_cast<size_t>(depth)] = 0;
            advanced = true;
            break;
        }
        if (!advanced) --depth;
    }
}

}  // namespace

std::vector<std::int64_t> admissible_entries(int k) {
    check_k(k);
    std::vector<std::int64_t> values = {1};
    for (long p : primes_up_to(k - 1)) {
        std::vector<std::int64_t> next;
        for (std::int64_t v : values)
            for (int e = 0, pe = 1; e <= 2; ++e, pe *= static_cast<int>(p)) next.push_back(v * pe);
        values = std::move(next);
    }
    std::sort(values.begin(), values.end());
    return values;
}

std::optional<CoefficientVector> extend(const CoefficientVector& prefix, std::int64_t a) {
    check_ki(prefix.k, prefix.i);
    if (prefix.complete()) throw std::invalid_argument("extend: vector already complete");
    const auto admissible = admissible_entries(prefix.k);
    if (!std::binary_search(admissible.begin(), admissible.end(), a))
        throw std::invalid_argument("extend: candidate entry not admissible");

    const auto housed = prefix.housed_indices();
    const int next = housed[prefix.entries.size()];
    for (size_t q = 0; q < prefix.entries.size(); ++q) {
        std::int64_t g = std::gcd(a, prefix.entries[q]);
        if ((next - housed[q]) % g != 0) return std::nullopt;
    }
    CoefficientVector r = prefix;
    r.entries.push_back(a);
    return r;
}

std::optional<CoefficientVector> close_final_entry(const CoefficientVector& prefix) {
    check_ki(prefix.k, prefix.i);
    if (static_cast<int>(prefix.entries.size()) != prefix.k - 2)
        throw std::invalid_argument("close_final_entry: exactly one housed index must be unfilled");

    const auto primes = primes_up_to(prefix.k - 1);
    std::vector<unsigned> accum(primes.size(), 0);
    for (std::int64_t v : prefix.entries) {
        for (size_t p = 0; p < primes.size(); ++p)
            while (v % primes[p] == 0) {
                v /= primes[p];
                accum[p]++;
            }
    }
    std::int64_t closing = 1;
    for (size_t p = 0; p < primes.size(); ++p)
        for (unsigned r = 0; r < (3 - accum[p] % 3) % 3; ++r) closing *= primes[p];

    const auto housed = prefix.housed_indices();
    const int last = housed.back();
    for (size_t q = 0; q < prefix.entries.size(); ++q) {
        std::int64_t g = std::gcd(closing, prefix.entries[q]);
        if ((last - housed[q]) % g != 0) return std::nullopt;
    }
    CoefficientVector r = prefix;
    r.entries.push_back(closing);
    return r;
}

EnumerationStats enumerate_vectors(int k, int i,
                                   const std::function<void(const CoefficientVector&)>& visit,
                                   int threads) {
    check_ki(k, i);
    if (threads < 1) threads = 1;
    const EnumTables& t = tables_for(k);

    std::vector<SubtreeResult> results(static_cast<size_t>(t.n));
    if (threads == 1) {
        for (int e = 0; e < t.n; ++e) run_subtree(t, k, i, e, results[static_cast<size_t>(e)]);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                for (int e = w; e < t.n; e += threads)
                    run_subtree(t, k, i, e, results[static_cast<size_t>(e)]);
            });
        }
        for (auto& th : pool) th.join();
    }

    EnumerationStats stats;
    for (auto& r : results) {
        stats += r.stats;
        if (visit)
            for (auto& v : r.vectors) visit(v);
    }
    stats.survivors = stats.complete_vectors;
    return stats;
}

std::optional<Certificate> filter_rank_zero(const CoefficientVector& v) {
    check_ki(v.k, v.i);
    if (!v.complete()) throw std::invalid_argument("filter_rank_zero: vector must be complete");
    const auto housed = v.housed_indices();
    const auto& table = rank_zero_list();
    const int m = static_cast<int>(housed.size());
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            for (int c = b + 1; c < m; ++c) {
                const int r = housed[static_cast<size_t>(a)], s = housed[static_cast<size_t>(b)],
                          t = housed[static_cast<size_t>(c)];
                const std::int64_t fa = static_cast<std::int64_t>(s - t) * v.entry_at(r);
                const std::int64_t fb = static_cast<std::int64_t>(t - r) * v.entry_at(s);
                const std::int64_t fc = static_cast<std::int64_t>(r - s) * v.entry_at(t);
                const std::int64_t d = cube_free_part_i64(fa * fb * fc);
                if (d > table.back()) continue;
                if (!std::binary_search(table.begin(), table.end(), static_cast<long>(d))) continue;
                return rank_zero_certificate(from_triple(v, {r, s, t}));
            }
        }
    }
    return std::nullopt;
}

std::optional<Certificate> filter_three_ones(const CoefficientVector& v) {
    check_ki(v.k, v.i);
    if (!v.complete()) throw std::invalid_argument("filter_three_ones: vector must be complete");
    for (int j = 0; j + 2 <= v.k - 1; ++j) {
        if (j == v.i || j + 1 == v.i || j + 2 == v.i) continue;
        if (v.entry_at(j) == 1 && v.entry_at(j + 1) == 1 && v.entry_at(j + 2) == 1) {
            Certificate cert;
            cert.kind = CertificateKind::ThreeOnes;
            cert.k = v.k;
            cert.i = v.i;
            cert.vector_entries = v.entries;
            cert.ones_index = j;
            return cert;
        }
    }
    return std::nullopt;
}

std::optional<Certificate> filter_bennett(const CoefficientVector& v) {
    check_ki(v.k, v.i);
    if (!v.complete()) throw std::invalid_argument("filter_bennett: vector must be complete");
    auto housed_ok = [&](int j) { return j >= 0 && j <= v.k - 1 && j != v.i; };
    const auto& table = rank_zero_list();
    for (int w = 0; w + 4 <= v.k - 1; ++w) {
        if (!housed_ok(w) || !housed_ok(w + 1) || !housed_ok(w + 3) || !housed_ok(w + 4)) continue;
        mpz_class a1(v.entry_at(w + 1)), a4(v.entry_at(w + 4));
        mpz_class a0(v.entry_at(w)), a3(v.entry_at(w + 3));
        mpz_class big_a = a1 * a1 * a4;
        mpz_class big_b = a0 * a3 * a3;
        mpz_class d = cube_free_part(4 * big_a * big_b);
        if (!d.fits_slong_p()) continue;
        if (!std::binary_search(table.begin(), table.end(), d.get_si())) continue;
        Certificate cert;
        cert.kind = CertificateKind::BennettWindow;
        cert.k = v.k;
        cert.i = v.i;
        cert.vector_entries = v.entries;
        cert.window_start = w;
        cert.form = {big_a, -big_b, -4};
        cert.selmer_d = d;
        cert.trusted = true;
        cert.trusted_basis = "rank-zero table for v^2 = u^3 - 432 D^2 (externally computed)";
        return cert;
    }
    return std::nullopt;
}

}  // namespace cubeprod
