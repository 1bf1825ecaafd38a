#pragma once

#include <cstdint>
#include <string>

namespace cfz {

/// a + b w in Z[w], w a primitive cube root of unity (w^2 = -1 - w).
struct EisensteinInt {
    std::int64_t a = 0;
    std::int64_t b = 0;

    static EisensteinInt omega() { return {0, 1}; }
    /// w^e for any e >= 0
    static EisensteinInt omega_power(unsigned e);

    EisensteinInt conj() const { return {a - b, -b}; }
    std::int64_t norm() const { return a * a - a * b + b * b; }
    /// w + conj(w) = -1, so Tr(a + b w) = 2a - b
    std::int64_t trace() const { return 2 * a - b; }
    bool is_rational() const { return b == 0; }

    /// Image under w -> root, a cube root of unity mod m.
    std::int64_t reduce(std::int64_t root, std::int64_t m) const;

    std::string to_string() const;

    friend EisensteinInt operator+(EisensteinInt x, EisensteinInt y) { return {x.a + y.a, x.b + y.b}; }
    friend EisensteinInt operator-(EisensteinInt x, EisensteinInt y) { return {x.a - y.a, x.b - y.b}; }
    friend EisensteinInt operator-(EisensteinInt x) { return {-x.a, -x.b}; }
    friend EisensteinInt operator*(EisensteinInt x, EisensteinInt y)
    {
        // (a + bw)(c + dw) = ac + (ad + bc) w + bd w^2
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
    }
    friend EisensteinInt operator*(std::int64_t s, EisensteinInt x) { return {s * x.a, s * x.b}; }
    friend bool operator==(EisensteinInt, EisensteinInt) = default;
};

} // namespace cfz
