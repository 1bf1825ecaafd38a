#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace cfz {

using Exponents = std::vector<std::uint16_t>;

/// Multivariate polynomial with int64 coefficients, stored sparsely and
/// canonically: terms sorted by exponent vector, no zero coefficients.
/// Coefficient overflow throws.
class SparsePoly {
public:
    using TermMap = std::map<Exponents, std::int64_t>;

    explicit SparsePoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static SparsePoly constant(std::size_t nvars, std::int64_t c);
    static SparsePoly variable(std::size_t nvars, std::size_t index);

    std::size_t num_vars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * x^e, merging with an existing term.
    void add_term(std::int64_t c, Exponents e);

    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    SparsePoly operator-() const;
    SparsePoly scaled(std::int64_t c) const;
    SparsePoly pow(unsigned e) const;

    /// Replaces variable i by images[i]; all images share one variable count.
    SparsePoly substitute(std::span<const SparsePoly> images) const;

    SparsePoly derivative(std::size_t var) const;

    /// Value at an integer point reduced into [0, m).
    std::int64_t eval_mod(std::span<const std::int64_t> point, std::int64_t m) const;

    std::string to_string(std::span<const std::string> names) const;

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

private:
    std::size_t nvars_;
    TermMap terms_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

} // namespace cfz
