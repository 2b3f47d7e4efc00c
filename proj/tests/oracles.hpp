// Test-only oracles. These deliberately avoid the library's own code paths:
// roots become coefficient vectors over the simple roots, posets are reduced
// with a plain reachability sweep.

#ifndef BICLOSED_TESTS_ORACLES_HPP
#define BICLOSED_TESTS_ORACLES_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "biclosed/root_system.hpp"

namespace oracles {

inline std::vector<int> coefficient_vector(biclosed::Root r, int n) {
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    const int lo = std::min(r.a, r.b);
    const int hi = std::max(r.a, r.b);
    const int sign = r.a < r.b ? 1 : -1;
    for (int i = lo; i < hi; ++i)
        v[static_cast<std::size_t>(i) - 1] = sign;
    return v;
}

// Membership in the root system: one consecutive run of +1 or of -1.
inline std::optional<biclosed::Root> decode_root_vector(const std::vector<int>& v) {
    int lo = 0, hi = 0, sign = 0;
    for (int i = 1; i <= static_cast<int>(v.size()); ++i) {
        const int c = v[static_cast<std::size_t>(i) - 1];
        if (c == 0)
            continue;
        if (c != 1 && c != -1)
            return std::nullopt;
        if (sign == 0) {
            sign = c;
            lo = i;
            hi = i;
        } else if (c != sign || i != hi + 1) {
            return std::nullopt;
        } else {
            hi = i;
        }
    }
    if (sign == 0)
        return std::nullopt; // the zero vector is not a root
    return sign > 0 ? biclosed::Root{lo, hi + 1} : biclosed::Root{hi + 1, lo};
}

inline std::optional<biclosed::Root> vector_sum(biclosed::Root x, biclosed::Root y, int n) {
    const auto vx = coefficient_vector(x, n);
    const auto vy = coefficient_vector(y, n);
    std::vector<int> sum(vx.size());
    for (std::size_t i = 0; i < sum.size(); ++i)
        sum[i] = vx[i] + vy[i];
    return decode_root_vector(sum);
}

// Transitive reduction of a strict relation by a reachability sweep:
// an edge is redundant exactly when it factors through a third vertex.
inline std::vector<std::pair<int, int>> reduction_by_reachability(
    const std::vector<std::vector<bool>>& strict) {
    const int n = static_cast<int>(strict.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!strict[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                continue;
            bool redundant = false;
            for (int k = 0; k < n && !redundant; ++k)
                redundant = strict[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
                            strict[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            if (!redundant)
                edges.emplace_back(i, j);
        }
    return edges;
}

} // namespace oracles

#endif
