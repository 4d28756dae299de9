#pragma once

#include <cstdint>
#include <vector>

#include "cubeprod/cubic_field.hpp"
#include "cubeprod/resolver.hpp"

namespace cubeprod {

struct SearchWindow {
    std::int64_t n_min = 0, n_max = 0;
    std::int64_t d_max = 1;
    int k = 5, i = 0;
};

enum class CubeTestMethod {
    SmoothShortcut,  // per-term cube-free smooth parts; exact when gcd(n,d)=1
    WholeProduct,    // arbitrary-precision product and exact cube root
};

/// Exhaustively tests all (n, d) in the window with gcd(n, d) = 1 and no zero
/// term; every hit is re-verified through verify_solution. Both methods give
/// identical results (cross-checked in the test suite).
std::vector<SolutionRecord> search_window(const SearchWindow& w,
                                          CubeTestMethod method = CubeTestMethod::SmoothShortcut);

/// Runs the window over every (k, i) with 5 <= k <= 11, 0 <= i <= k-1,
/// sharing the per-term factorizations across i. Results sorted by
/// (k, i, n, d); output independent of the thread count.
std::vector<SolutionRecord> search_all_windows(std::int64_t n_min, std::int64_t n_max,
                                               std::int64_t d_max, int threads = 1);

struct PairCubicsSolution {
    std::int64_t x = 0, y = 0, z = 0, w = 0;
    bool operator==(const PairCubicsSolution& o) const {
        return x == o.x && y == o.y && z == o.z && w == o.w;
    }
    bool operator<(const PairCubicsSolution& o) const {
        if (x != o.x) return x < o.x;
        if (y != o.y) return y < o.y;
        if (z != o.z) return z < o.z;
        return w < o.w;
    }
};

/// All integer quadruples with |x|, |y| <= height, gcd(x, y) = 1,
/// x y z w != 0 satisfying x^3 + y^3 = 9 z^3 and 5 x^3 - y^3 = 3 w^3
/// (z and w recovered by exact cube-root tests). Sorted.
std::vector<PairCubicsSolution> search_pair_cubics(std::int64_t height);

struct FieldRelationSolution {
    std::int64_t x = 0, y = 0;
    CubicFieldElement u;
};

/// All coprime pairs (x, y) with |x|, |y| <= height and x y != 0 such that
/// (a x - y)(x^2 - x y + y^2) / (3 (2 - a)) is the cube of an integral
/// element u with coordinates bounded by height^(2/3) + 1. The coordinate box
/// is a heuristic bound: this is a consistency oracle, not a completeness
/// claim.
std::vector<FieldRelationSolution> search_cubic_field_relation(std::int64_t height);

}  // namespace cubeprod
