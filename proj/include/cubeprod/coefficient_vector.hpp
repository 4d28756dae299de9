#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubeprod {

/// The tuple (a_0, ..., a_{i-1}, a_{i+1}, ..., a_{k-1}) of cube-free
/// (k-1)-smooth coefficients attached to a hypothetical solution of
/// prod_{j != i} (n + j d) = y^3. Entries are stored in ascending order of
/// the equation index j; the index i itself is skipped.
struct CoefficientVector {
    int k = 0;
    int i = 0;
    std::vector<std::int64_t> entries;

    bool complete() const { return static_cast<int>(entries.size()) == k - 1; }

    /// Equation indices housed by this vector, ascending.
    std::vector<int> housed_indices() const {
        std::vector<int> js;
        js.reserve(static_cast<size_t>(k - 1));
        for (int j = 0; j < k; ++j)
            if (j != i) js.push_back(j);
        return js;
    }

    /// Position of equation index j in entries; throws if j == i or out of range.
    int position_of(int j) const {
        if (j < 0 || j >= k || j == i) throw std::invalid_argument("CoefficientVector: index not housed");
        return j < i ? j : j - 1;
    }

    std::int64_t entry_at(int j) const {
        int pos = position_of(j);
        if (pos >= static_cast<int>(entries.size()))
            throw std::invalid_argument("CoefficientVector: entry not yet placed");
        return entries[static_cast<size_t>(pos)];
    }

    /// Mirror image under j -> k-1-j, i -> k-1-i (entry order reverses).
    CoefficientVector mirrored() const {
        CoefficientVector m;
        m.k = k;
        m.i = k - 1 - i;
        m.entries.assign(entries.rbegin(), entries.rend());
        return m;
    }

    std::string entries_str() const {
        std::string out;
        for (size_t p = 0; p < entries.size(); ++p) {
            if (p) out += ",";
            out += std::to_string(entries[p]);
        }
        return out;
    }

    bool operator==(const CoefficientVector& o) const {
        return k == o.k && i == o.i && entries == o.entries;
    }
    bool operator!=(const CoefficientVector& o) const { return !(*this == o); }
    bool operator<(const CoefficientVector& o) const {
        if (k != o.k) return k < o.k;
        if (i != o.i) return i < o.i;
        return entries < o.entries;
    }
};

}  // namespace cubeprod
