#include "cubeprod/local_sieve.hpp"

#include <numeric>
#include <stdexcept>

namespace cubeprod {

SieveReport sieve(const CoefficientVector& v, long modulus) {
    if (modulus < 2) throw std::invalid_argument("sieve: modulus must be >= 2");
    if (!v.complete()) throw std::invalid_argument("sieve: vector must be complete");
    const long m = modulus;
    const auto housed = v.housed_indices();

    // attainable[j][res]: does a_j x^3 = res (mod m) have a solution x?
    std::vector<std::vector<char>> attainable(housed.size(), std::vector<char>(static_cast<size_t>(m), 0));
    for (size_t p = 0; p < housed.size(); ++p) {
        const long aj = static_cast<long>(v.entry_at(housed[p]) % m);
        for (long x = 0; x < m; ++x) {
            long cube = static_cast<long>((static_cast<long long>(x) * x % m) * x % m);
            attainable[p][static_cast<size_t>(aj * cube % m)] = 1;
        }
    }

    SieveReport report;
    report.modulus = m;
    std::uint64_t surviving = 0;
    for (long n = 0; n < m; ++n) {
        for (long d = 0; d < m; ++d) {
            if (std::gcd(std::gcd(n, d), m) != 1) continue;
            bool ok = true;
            for (size_t p = 0; p < housed.size() && ok; ++p)
                ok = attainable[p][static_cast<size_t>((n + housed[p] * d) % m)];
            if (ok) ++surviving;
        }
    }
    report.surviving_residue_pairs = surviving;
    report.feasible = surviving > 0;
    return report;
}

const std::vector<long>& default_sieve_moduli() {
    static const std::vector<long> moduli = {8, 16, 9, 27, 5, 7, 63, 72};
    return moduli;
}

std::optional<Certificate> filter_sieve(const CoefficientVector& v, const std::vector<long>& moduli) {
    const auto& set = moduli.empty() ? default_sieve_moduli() : moduli;
    for (long m : set) {
        SieveReport report = sieve(v, m);
        if (!report.feasible) {
            Certificate cert;
            cert.kind = CertificateKind::ModularSieve;
            cert.k = v.k;
            cert.i = v.i;
            cert.vector_entries = v.entries;
            cert.modulus = m;
            return cert;
        }
    }
    return std::nullopt;
}

}  // namespace cubeprod
