#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cubeprod/certificate.hpp"
#include "cubeprod/coefficient_vector.hpp"

namespace cubeprod {

struct EnumerationStats {
    // A node is any accepted prefix of length 1..k-2 (the final housed entry
    // is forced, never freely extended); this convention is recorded in run
    // manifests since published counts depend on the convention chosen.
    std::uint64_t incomplete_nodes = 0;
    std::uint64_t complete_vectors = 0;
    std::uint64_t survivors = 0;

    EnumerationStats& operator+=(const EnumerationStats& o) {
        incomplete_nodes += o.incomplete_nodes;
        complete_vectors += o.complete_vectors;
        survivors += o.survivors;
        return *this;
    }
};

inline constexpr const char* kNodeCountConvention = "accepted prefixes of length 1..k-2";

/// All cube-free (k-1)-smooth positive integers, sorted. Requires 5 <= k <= 11.
std::vector<std::int64_t> admissible_entries(int k);

/// Appends candidate entry a at the next housed slot of the prefix iff
/// gcd(a, a_l) | (j - l) holds against every placed entry; nullopt on
/// rejection. Does not enforce the cube-product closure (see
/// close_final_entry). Requires a admissible for prefix.k.
std::optional<CoefficientVector> extend(const CoefficientVector& prefix, std::int64_t a);

/// For a prefix missing exactly its last housed entry, computes the unique
/// cube-free value making the entry product a perfect cube and accepts iff it
/// passes all pairwise gcd checks.
std::optional<CoefficientVector> close_final_entry(const CoefficientVector& prefix);

/// Emits every complete vector satisfying all structural constraints exactly
/// once, in lexicographic order of entries. With threads > 1 the search tree
/// is partitioned by first entry; output order and stats are identical for
/// any thread count.
EnumerationStats enumerate_vectors(int k, int i,
                                   const std::function<void(const CoefficientVector&)>& visit,
                                   int threads = 1);

/// Scans unordered triples {r,s,t} in lexicographic order and returns the
/// first RankZeroList certificate, or nullopt if no triple eliminates v.
std::optional<Certificate> filter_rank_zero(const CoefficientVector& v);

/// Certificate iff some three consecutive housed indices all carry entry 1.
std::optional<Certificate> filter_three_ones(const CoefficientVector& v);

/// For each window {w, w+1, w+3, w+4} of housed indices, reduces the window
/// identity (x+1)^2 (x+4) - x (x+3)^2 = 4 to the form
/// A X^3 - B Y^3 - 4 Z^3 = 0 with A = a_{w+1}^2 a_{w+4}, B = a_w a_{w+3}^2
/// and certifies if its Selmer invariant lies in the rank-zero table.
std::optional<Certificate> filter_bennett(const CoefficientVector& v);

}  // namespace cubeprod
