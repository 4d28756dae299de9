#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubeprod/certificate.hpp"
#include "cubeprod/coefficient_vector.hpp"
#include "cubeprod/resolver.hpp"
#include "cubeprod/vector_enum.hpp"

namespace cubeprod {

enum class FilterKind { RankZero, ThreeOnes, Bennett, Sieve };

std::optional<FilterKind> filter_kind_from_string(const std::string& name);
const char* to_string(FilterKind kind);

/// Applies the requested filters to one complete vector in canonical order
/// (rank-zero, three-ones, window reduction, modular sieve); first hit wins.
std::optional<Certificate> apply_filters(const CoefficientVector& v,
                                         const std::vector<FilterKind>& filters);

struct FilterRunResult {
    EnumerationStats stats;  // survivors field reflects the filtered count
    std::map<FilterKind, std::uint64_t> eliminated_counts;
    std::vector<CoefficientVector> survivors;
    // Vectors that passed the first requested filter but fell to a later one;
    // together with survivors these reconstruct the post-first-stage set.
    std::vector<std::pair<CoefficientVector, Certificate>> later_eliminations;
};

/// Enumerates (k, i) and filters every complete vector. The optional sink is
/// invoked for every complete vector in lexicographic order (certificate
/// pointer null for survivors) and is the streaming interface used by the CLI.
FilterRunResult run_filters(int k, int i, const std::vector<FilterKind>& filters, int threads = 1,
                            const std::function<void(const CoefficientVector&, const Certificate*)>& sink = {});

struct CaseReport {
    int k = 0, i = 0;
    bool edge_case = false;
    EnumerationStats stats;
    std::vector<CoefficientVector> first_stage_survivors;  // after rank-zero alone
    std::vector<Certificate> certificates;                 // later eliminations + resolutions
    std::vector<SolutionRecord> records;
};

struct TheoremDerivation {
    std::vector<CaseReport> cases;
    std::vector<SolutionRecord> all_records;  // sorted by (k, i, n)
};

/// The full pipeline: edge cases through the external table, all other i
/// through enumerate -> rank-zero -> three-ones -> window -> sieve -> resolve.
/// Throws if any survivor cannot be resolved (a mathematical regression).
TheoremDerivation derive_theorem(int threads = 1, int max_k = 11);

struct IdentityReport {
    struct Entry {
        std::string name;
        std::string value;
        bool ok = false;
    };
    std::vector<Entry> entries;
    bool all_ok = true;
};

/// Runs every exact identity check with its frozen expected value.
IdentityReport run_identity_suite();

/// Re-checks a certificate independently of the run that produced it.
bool revalidate_certificate(const Certificate& cert);

}  // namespace cubeprod
