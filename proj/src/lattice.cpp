#include "cfz/lattice.hpp"

#include <cmath>

namespace cfz {

std::int64_t discriminant(const GramMatrix2& g) { return GramMatrix2::h2h2 * g.TT - g.h2T * g.h2T; }

bool special_admissible(std::int64_t d)
{
    const auto r = ((d % 6) + 6) % 6;
    return d > 6 && (r == 0 || r == 2);
}

std::optional<std::int64_t> associated_k3_degree(std::int64_t d)
{
    if (d <= 0 || d % 2 != 0) return std::nullopt;
    const std::int64_t target = d / 2 - 1; // n^2 + n
    auto n = static_cast<std::int64_t>(std::sqrt(static_cast<double>(target)));
    while (n > 0 && n * (n + 1) > target) --n;
    while ((n + 1) * (n + 2) <= target) ++n;
    if (n >= 2 && n * (n + 1) == target) return n;
    return std::nullopt;
}

} // namespace cfz
