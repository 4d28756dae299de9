#include "cubeprod/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "cubeprod/exact_arith.hpp"
#include "cubeprod/identities.hpp"
#include "cubeprod/local_sieve.hpp"
#include "cubeprod/ternary_cubic.hpp"

namespace cubeprod {

std::optional<FilterKind> filter_kind_from_string(const std::string& name) {
    if (name == "rank-zero") return FilterKind::RankZero;
    if (name == "three-ones") return FilterKind::ThreeOnes;
    if (name == "bennett") return FilterKind::Bennett;
    if (name == "sieve") return FilterKind::Sieve;
    return std::nullopt;
}

const char* to_string(FilterKind kind) {
    switch (kind) {
        case FilterKind::RankZero: return "rank-zero";
        case FilterKind::ThreeOnes: return "three-ones";
        case FilterKind::Bennett: return "bennett";
        case FilterKind::Sieve: return "sieve";
    }
    return "?";
}

namespace {

std::vector<FilterKind> canonical_filters(std::vector<FilterKind> filters) {
    std::sort(filters.begin(), filters.end());
    filters.erase(std::unique(filters.begin(), filters.end()), filters.end());
    return filters;
}

FilterKind filter_of_certificate(const Certificate& cert) {
    switch (cert.kind) {
        case CertificateKind::RankZeroList: return FilterKind::RankZero;
        case CertificateKind::ThreeOnes: return FilterKind::ThreeOnes;
        case CertificateKind::BennettWindow: return FilterKind::Bennett;
        case CertificateKind::ModularSieve: return FilterKind::Sieve;
        default: throw std::logic_error("certificate does not come from a filter");
    }
}

}  // namespace

std::optional<Certificate> apply_filters(const CoefficientVector& v,
                                         const std::vector<FilterKind>& filters) {
    for (FilterKind f : canonical_filters(filters)) {
        std::optional<Certificate> cert;
        switch (f) {
            case FilterKind::RankZero: cert = filter_rank_zero(v); break;
            case FilterKind::ThreeOnes: cert = filter_three_ones(v); break;
            case FilterKind::Bennett: cert = filter_bennett(v); break;
            case FilterKind::Sieve: cert = filter_sieve(v); break;
        }
        if (cert) return cert;
    }
    return std::nullopt;
}

FilterRunResult run_filters(int k, int i, const std::vector<FilterKind>& filters, int threads,
                            const std::function<void(const CoefficientVector&, const Certificate*)>& sink) {
    if (threads < 1) threads = 1;
    const auto canonical = canonical_filters(filters);

    FilterRunResult result;
    std::vector<CoefficientVector> complete;
    result.stats = enumerate_vectors(k, i, [&](const CoefficientVector& v) { complete.push_back(v); },
                                     threads);

    std::vector<std::optional<Certificate>> certs(complete.size());
    if (threads == 1 || complete.size() < 1024) {
        for (size_t idx = 0; idx < complete.size(); ++idx)
            certs[idx] = apply_filters(complete[idx], canonical);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) {
            pool.emplace_back([&] {
                constexpr size_t kBlock = 256;
                while (true) {
                    size_t begin = next.fetch_add(kBlock);
                    if (begin >= complete.size()) break;
                    size_t end = std::min(begin + kBlock, complete.size());
                    for (size_t idx = begin; idx < end; ++idx)
                        certs[idx] = apply_filters(complete[idx], canonical);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    const FilterKind first_stage = canonical.empty() ? FilterKind::RankZero : canonical.front();
    for (size_t idx = 0; idx < complete.size(); ++idx) {
        if (sink) sink(complete[idx], certs[idx] ? &*certs[idx] : nullptr);
        if (!certs[idx]) {
            result.survivors.push_back(complete[idx]);
            continue;
        }
        FilterKind hit = filter_of_certificate(*certs[idx]);
        result.eliminated_counts[hit]++;
        if (!canonical.empty() && hit != first_stage)
            result.later_eliminations.emplace_back(complete[idx], *certs[idx]);
    }
    result.stats.survivors = result.survivors.size();
    return result;
}

TheoremDerivation derive_theorem(int threads, int max_k) {
    if (max_k < 5 || max_k > 11) throw std::invalid_argument("derive_theorem: max_k must be in [5, 11]");
    const CoefficientVector k7_primary{7, 3, {10, 3, 4, 18, 25, 4}};
    const CoefficientVector k7_mirror{7, 3, {4, 25, 18, 4, 3, 10}};

    TheoremDerivation derivation;
    for (int k = 5; k <= max_k; ++k) {
        for (int i = 0; i < k; ++i) {
            CaseReport report;
            report.k = k;
            report.i = i;
            if (i == 0 || i == k - 1) {
                report.edge_case = true;
                Resolution res = resolve_edge(k, i);
                report.certificates.push_back(res.certificate);
                report.records = res.records;
            } else {
                const std::vector<FilterKind> all = {FilterKind::RankZero, FilterKind::ThreeOnes,
                                                     FilterKind::Bennett, FilterKind::Sieve};
                FilterRunResult run = run_filters(k, i, all, threads);
                report.stats = run.stats;
                report.first_stage_survivors = run.survivors;
                for (const auto& [v, cert] : run.later_eliminations) {
                    report.first_stage_survivors.push_back(v);
                    report.certificates.push_back(cert);
                }
                std::sort(report.first_stage_survivors.begin(), report.first_stage_survivors.end());

                for (const CoefficientVector& v : run.survivors) {
                    Resolution res;
                    if (v == k7_primary || v == k7_mirror) {
                        res = resolve_k7_i3(v);
                    } else {
                        try {
                            res = resolve_two_adic_descent(v);
                        } catch (const PatternMismatchError& e) {
                            throw std::runtime_error("unresolved survivor (k=" + std::to_string(k) +
                                                     ", i=" + std::to_string(i) + ", vector " +
                                                     v.entries_str() + "): " + e.what());
                        }
                    }
                    report.certificates.push_back(res.certificate);
                    for (auto& rec : res.records) report.records.push_back(std::move(rec));
                }
            }
            for (const auto& rec : report.records) derivation.all_records.push_back(rec);
            derivation.cases.push_back(std::move(report));
        }
    }
    std::sort(derivation.all_records.begin(), derivation.all_records.end(),
              [](const SolutionRecord& a, const SolutionRecord& b) {
                  return std::tie(a.k, a.i, a.n, a.d) < std::tie(b.k, b.i, b.n, b.d);
              });
    return derivation;
}

IdentityReport run_identity_suite() {
    IdentityReport report;
    auto add = [&](const std::string& name, const std::string& value, bool ok) {
        report.entries.push_back({name, value, ok});
        if (!ok) report.all_ok = false;
    };
    auto guarded = [&](const std::string& name, const std::function<std::pair<std::string, bool>()>& body) {
        try {
            auto [value, ok] = body();
            add(name, value, ok);
        } catch (const std::exception& e) {
            add(name, std::string("error: ") + e.what(), false);
        }
    };

    guarded("window gap identity (x+1)^2(x+4) - x(x+3)^2", [] {
        mpq_class c = bennett_window_constant();
        return std::make_pair(c.get_str(), c == 4);
    });

    for (long d : {1L, 4L, 14700L}) {
        guarded("descent identity constant, D = " + std::to_string(d), [d] {
            mpq_class c = verify_selmer_descent_identity(d);
            mpq_class expected = mpq_class(1728) * d * d;  // frozen: c(D) = c(1) * D^2
            return std::make_pair(c.get_str(), c == expected);
        });
    }

    guarded("two-cubes descent identity constant", [] {
        mpq_class c = verify_two_cubes_descent_identity();
        return std::make_pair(c.get_str(), c == 108);
    });

    guarded("cube-product descent cofactor", [] {
        RationalPoly q = verify_unit_selmer_descent_identity();
        // spot value at (a,b,f,x,y,z) = (1,1,1,1,-1,1): cofactor/(4 f^6 z^6) = -1/4
        std::vector<mpq_class> point = {1, 1, 1, 1, -1, 1};
        mpq_class at = q.eval(point);
        return std::make_pair(q.str(), at == -1);
    });

    guarded("(2-a)^3 = 3 * fundamental unit", [] {
        CubicFieldElement lhs = field_prime_above_three().pow(3);
        CubicFieldElement rhs = CubicFieldElement(3) * fundamental_unit();
        return std::make_pair(lhs.str(), lhs == rhs);
    });

    guarded("norm of fundamental unit", [] {
        mpq_class n = fundamental_unit().norm();
        return std::make_pair(n.get_str(), n == 1 || n == -1);
    });
    guarded("norm of prime above 3", [] {
        mpq_class n = field_prime_above_three().norm();
        return std::make_pair(n.get_str(), n == 3 || n == -3);
    });
    guarded("norm of prime above 5", [] {
        mpq_class n = field_prime_above_five().norm();
        return std::make_pair(n.get_str(), n == 5 || n == -5);
    });

    guarded("unit power expansion, b=1, alpha coordinate", [] {
        auto coords = expand_unit_power_product(1);
        const RationalPoly& c1 = coords[1];
        // frozen from the displayed cubic form:
        // -9f^3 -24f^2g +120fg^2 -45g^3 +120f^2h -270fgh -120g^2h -120fh^2 +600gh^2 -225h^3
        const std::vector<std::pair<std::vector<unsigned>, long>> expected = {
            {{3, 0, 0}, -9},  {{2, 1, 0}, -24},  {{1, 2, 0}, 120},  {{0, 3, 0}, -45},
            {{2, 0, 1}, 120}, {{1, 1, 1}, -270}, {{0, 2, 1}, -120}, {{1, 0, 2}, -120},
            {{0, 1, 2}, 600}, {{0, 0, 3}, -225}};
        bool ok = c1.terms().size() == expected.size();
        for (const auto& [mono, coeff] : expected)
            if (c1.coefficient(mono) != coeff) ok = false;
        return std::make_pair(c1.str(), ok);
    });

    guarded("unit power expansion divisibility: b=1 alpha coordinate by 3", [] {
        auto coords = expand_unit_power_product(1);
        bool ok = true;
        for (const auto& [mono, coeff] : coords[1].terms()) {
            (void)mono;
            if (coeff.get_den() != 1 || coeff.get_num() % 3 != 0) ok = false;
        }
        return std::make_pair(std::string("all alpha-coefficients divisible by 3"), ok);
    });

    guarded("unit power expansion divisibility: b=2 unit coordinate by 3", [] {
        auto coords = expand_unit_power_product(2);
        bool ok = true;
        for (const auto& [mono, coeff] : coords[0].terms()) {
            (void)mono;
            if (coeff.get_den() != 1 || coeff.get_num() % 3 != 0) ok = false;
        }
        return std::make_pair(std::string("all unit-coefficients divisible by 3"), ok);
    });

    guarded("weierstrass transform proportionality and inverse map", [] {
        CubicFieldElement lambda = verify_weierstrass_transform();
        CubicFieldElement frozen(mpq_class(-4, 9), mpq_class(-2, 9), mpq_class(-1, 9));
        return std::make_pair(lambda.str(), lambda == frozen);
    });

    guarded("weierstrass model vanishes at (x,y,u) = (1,2,-1)", [] {
        const WeierstrassConstants w = weierstrass_constants();
        CubicFieldElement x(1), y(2), u(-1);
        CubicFieldElement big_x = -u;
        CubicFieldElement big_y = w.y_from_x * x;
        CubicFieldElement big_z = w.z_from_x * x + w.z_from_y * y;
        CubicFieldElement curve = big_y * big_y * big_z + w.a3 * big_y * big_z * big_z -
                                  big_x * big_x * big_x - w.a6 * big_z * big_z * big_z;
        CubicFieldElement alpha = CubicFieldElement::generator();
        CubicFieldElement target = (alpha * x - y) * (x * x - x * y + y * y) -
                                   CubicFieldElement(3) * field_prime_above_three() * u * u * u;
        return std::make_pair(curve.str(), curve.is_zero() && target.is_zero());
    });

    return report;
}

bool revalidate_certificate(const Certificate& cert) {
    try {
        switch (cert.kind) {
            case CertificateKind::RankZeroList: {
                if (!cert.triple) return false;
                TernaryCubic form = from_triple(cert.vector(), *cert.triple);
                if (form.a != cert.form[0] || form.b != cert.form[1] || form.c != cert.form[2])
                    return false;
                mpz_class d = selmer_invariant(form);
                if (d != cert.selmer_d || !d.fits_slong_p()) return false;
                const auto& table = rank_zero_list();
                return std::binary_search(table.begin(), table.end(), d.get_si());
            }
            case CertificateKind::ThreeOnes: {
                const CoefficientVector v = cert.vector();
                const int j = cert.ones_index;
                if (j < 0 || j + 2 > v.k - 1) return false;
                if (j == v.i || j + 1 == v.i || j + 2 == v.i) return false;
                return v.entry_at(j) == 1 && v.entry_at(j + 1) == 1 && v.entry_at(j + 2) == 1;
            }
            case CertificateKind::BennettWindow: {
                const CoefficientVector v = cert.vector();
                const int w = cert.window_start;
                auto housed = [&](int j) { return j >= 0 && j <= v.k - 1 && j != v.i; };
                if (!housed(w) || !housed(w + 1) || !housed(w + 3) || !housed(w + 4)) return false;
                mpz_class big_a = mpz_class(v.entry_at(w + 1)) * v.entry_at(w + 1) * v.entry_at(w + 4);
                mpz_class big_b = mpz_class(v.entry_at(w)) * v.entry_at(w + 3) * v.entry_at(w + 3);
                if (cert.form[0] != big_a || cert.form[1] != -big_b || cert.form[2] != -4) return false;
                mpz_class d = cube_free_part(4 * big_a * big_b);
                if (d != cert.selmer_d || !d.fits_slong_p()) return false;
                const auto& table = rank_zero_list();
                return std::binary_search(table.begin(), table.end(), d.get_si());
            }
            case CertificateKind::ModularSieve:
                return !sieve(cert.vector(), cert.modulus).feasible;
            case CertificateKind::SpecialEquation: {
                Resolution res = resolve_two_adic_descent(cert.vector(), cert.triple);
                return res.certificate.derived_solutions == cert.derived_solutions;
            }
            case CertificateKind::EdgeCaseHTT: {
                Resolution res = resolve_edge(cert.k, cert.i);
                return res.certificate.derived_solutions == cert.derived_solutions;
            }
            case CertificateKind::PairOfCubics: {
                Resolution res = resolve_k7_i3(cert.vector());
                return res.certificate.derived_solutions == cert.derived_solutions;
            }
        }
    } catch (const std::exception&) {
        return false;
    }
    return false;
}

}  // namespace cubeprod
