#include "cfz/sparse_poly.hpp"

#include <sstream>

#include "cfz/error.hpp"

namespace cfz {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in polynomial arithmetic");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in polynomial arithmetic");
    return r;
}

SparsePoly SparsePoly::constant(std::size_t nvars, std::int64_t c)
{
    SparsePoly p(nvars);
    p.add_term(c, Exponents(nvars, 0));
    return p;
}

SparsePoly SparsePoly::variable(std::size_t nvars, std::size_t index)
{
    if (index >= nvars) throw Error("variable index out of range");
    SparsePoly p(nvars);
    Exponents e(nvars, 0);
    e[index] = 1;
    p.add_term(1, std::move(e));
    return p;
}

void SparsePoly::add_term(std::int64_t c, Exponents e)
{
    if (e.size() != nvars_) throw Error("exponent vector has wrong length");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o)
{
    if (o.nvars_ != nvars_) throw Error("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(c, e);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o)
{
    if (o.nvars_ != nvars_) throw Error("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(checked_mul(c, -1), e);
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b)
{
    if (a.nvars_ != b.nvars_) throw Error("variable count mismatch");
    SparsePoly r(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
            r.add_term(checked_mul(ca, cb), e);
        }
    return r;
}

SparsePoly SparsePoly::operator-() const { return scaled(-1); }

SparsePoly SparsePoly::scaled(std::int64_t c) const
{
    SparsePoly r(nvars_);
    for (const auto& [e, v] : terms_) r.add_term(checked_mul(v, c), e);
    return r;
}

SparsePoly SparsePoly::pow(unsigned e) const
{
    SparsePoly r = constant(nvars_, 1), base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

SparsePoly SparsePoly::substitute(std::span<const SparsePoly> images) const
{
    if (images.size() != nvars_) throw Error("substitution needs one image per variable");
    const std::size_t target = images.empty() ? 0 : images[0].num_vars();
    for (const auto& im : images)
        if (im.num_vars() != target) throw Error("substitution images disagree on variable count");
    SparsePoly r(target);
    for (const auto& [e, c] : terms_) {
        SparsePoly t = constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) t = t * images[i].pow(e[i]);
        r += t;
    }
    return r;
}

SparsePoly SparsePoly::derivative(std::size_t var) const
{
    if (var >= nvars_) throw Error("variable index out of range");
    SparsePoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        --d[var];
        r.add_term(checked_mul(c, e[var]), std::move(d));
    }
    return r;
}

std::int64_t SparsePoly::eval_mod(std::span<const std::int64_t> point, std::int64_t m) const
{
    if (point.size() != nvars_) throw Error("evaluation point has wrong length");
    auto red = [m](std::int64_t v) { return ((v % m) + m) % m; };
    std::int64_t total = 0;
    for (const auto& [e, c] : terms_) {
        std::int64_t t = red(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned j = 0; j < e[i]; ++j) t = static_cast<std::int64_t>(static_cast<__int128>(t) * red(point[i]) % m);
        total = (total + t) % m;
    }
    return total;
}

std::string SparsePoly::to_string(std::span<const std::string> names) const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest exponent vector first reads more naturally
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool need_star = false;
        bool constant_term = true;
        for (auto x : e)
            if (x) constant_term = false;
        if (mag != 1 || constant_term) {
            os << mag;
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (need_star) os << '*';
            os << (i < names.size() ? names[i] : "x" + std::to_string(i));
            if (e[i] > 1) os << '^' << e[i];
            need_star = true;
        }
    }
    return os.str();
}

} // namespace cfz
