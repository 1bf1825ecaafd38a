#include "cfz/eisenstein.hpp"

namespace cfz {

EisensteinInt EisensteinInt::omega_power(unsigned e)
{
    switch (e % 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    default: return {-1, -1};
    }
}

std::int64_t EisensteinInt::reduce(std::int64_t root, std::int64_t m) const
{
    const __int128 v = static_cast<__int128>(a) + static_cast<__int128>(b) * root;
    return static_cast<std::int64_t>(((v % m) + m) % m);
}

std::string EisensteinInt::to_string() const
{
    if (b == 0) return std::to_string(a);
    std::string s;
    if (a != 0) s = std::to_string(a) + (b < 0 ? " - " : " + ");
    else if (b < 0) s = "-";
    const std::int64_t mag = b < 0 ? -b : b;
    if (mag != 1) s += std::to_string(mag) + "*";
    return s + "w";
}

} // namespace cfz
