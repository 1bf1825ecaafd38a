#pragma once

#include <cstdint>
#include <optional>

namespace cfz {

/// Intersection form on <h^2, T> inside H^4 of a cubic fourfold.
struct GramMatrix2 {
    static constexpr std::int64_t h2h2 = 3;
    std::int64_t h2T = 0;
    std::int64_t TT = 0;

    /// Gram matrix of <h^2, T + m h^2>.
    GramMatrix2 shifted(std::int64_t m) const { return {h2T + 3 * m, TT + 2 * m * h2T + 3 * m * m}; }
};

/// 3 TT - h2T^2
std::int64_t discriminant(const GramMatrix2& g);

/// d > 6 and d = 0, 2 mod 6
bool special_admissible(std::int64_t d);

/// n >= 2 with d = 2(n^2 + n + 1), if any.
std::optional<std::int64_t> associated_k3_degree(std::int64_t d);

} // namespace cfz
