#include "cfz/finite_field.hpp"

#include <algorithm>
#include <string>

namespace cfz {

bool is_prime(std::int64_t n)
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

void require_good_prime(std::int64_t p)
{
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (p == 2 || p == 3) throw DomainError("bad prime " + std::to_string(p) + " (characteristic 2 and 3 are excluded)");
}

namespace {

using Poly = std::vector<std::int64_t>;

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p)
{
    std::int64_t r = 1, e = p - 2;
    a %= p;
    while (e > 0) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

Poly poly_mod(Poly a, const Poly& m, std::int64_t p)
{
    trim(a);
    const auto dm = m.size() - 1;
    const std::int64_t lead_inv = inv_mod(m.back(), p);
    while (a.size() >= m.size()) {
        const std::int64_t c = a.back() * lead_inv % p;
        const auto shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i < m.size(); ++i)
            a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::int64_t p)
{
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(r), m, p);
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        a = poly_mod(a, b, p);
        std::swap(a, b);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace

bool is_irreducible(const PolyFp& f, std::uint32_t p)
{
    Poly m(f.begin(), f.end());
    trim(m);
    if (m.size() < 2) return false;
    const std::size_t k = m.size() - 1;
    if (k == 1) return true;
    // x^{p^i} mod f, by repeated p-th powering
    Poly xp = {0, 1};
    for (std::size_t i = 1; i <= k / 2; ++i) {
        Poly base = xp, acc = {1};
        for (std::uint64_t e = p; e > 0; e >>= 1) {
            if (e & 1) acc = poly_mulmod(acc, base, m, p);
            base = poly_mulmod(base, base, m, p);
        }
        xp = acc;
        Poly diff = xp;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = ((diff[1] - 1) % static_cast<std::int64_t>(p) + p) % p;
        Poly g = poly_gcd(m, diff, p);
        if (g.size() > 1) return false;
    }
    return true;
}

PolyFp find_irreducible(std::uint32_t p, unsigned k)
{
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (k == 0) throw DomainError("extension degree must be >= 1");
    if (k == 1) return {0, 1};
    std::uint64_t total = 1;
    for (unsigned i = 0; i < k; ++i) total *= p;
    PolyFp f(k + 1, 0);
    f[k] = 1;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (unsigned i = 0; i < k; ++i) {
            f[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        if (f[0] != 0 && is_irreducible(f, p)) return f;
    }
    throw Error("no irreducible polynomial found"); // unreachable
}

// ---------------------------------------------------------------------------

FieldPtr FiniteField::make(std::uint32_t p, unsigned k)
{
    require_good_prime(p);
    if (k == 0) throw DomainError("extension degree must be >= 1");
    return make(p, find_irreducible(p, k));
}

FieldPtr FiniteField::make(std::uint32_t p, PolyFp modulus)
{
    require_good_prime(p);
    while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
    if (modulus.size() < 2 || modulus.back() != 1)
        throw DomainError("field modulus must be monic of degree >= 1");
    for (auto c : modulus)
        if (c >= p) throw DomainError("modulus coefficient out of range");
    if (!is_irreducible(modulus, p)) throw DomainError("field modulus is reducible");
    return FieldPtr(new FiniteField(p, std::move(modulus)));
}

FiniteField::FiniteField(std::uint32_t p, PolyFp modulus)
    : p_(p), k_(static_cast<unsigned>(modulus.size() - 1)), q_(1), modulus_(std::move(modulus))
{
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k_; ++i) {
        q *= p_;
        if (q > max_order) throw DomainError("field order exceeds " + std::to_string(max_order));
    }
    q_ = static_cast<std::uint32_t>(q);

    const auto factors = prime_factors(q_ - 1);
    auto slow_pow = [this](Rep a, std::uint64_t e) {
        Rep r = 1;
        while (e > 0) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    };
    Rep g = 0;
    for (Rep cand = 2; cand < q_ && g == 0; ++cand) {
        bool primitive = true;
        for (auto r : factors)
            if (slow_pow(cand, (q_ - 1) / r) == 1) {
                primitive = false;
                break;
            }
        if (primitive) g = cand;
    }
    if (g == 0) throw Error("no primitive element found");

    exp_.resize(2 * static_cast<std::size_t>(q_ - 1));
    log_.assign(q_, 0);
    Rep x = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = slow_mul(x, g);
    }
    for (std::uint32_t i = q_ - 1; i < exp_.size(); ++i) exp_[i] = exp_[i - (q_ - 1)];
}

FiniteField::Rep FiniteField::slow_mul(Rep a, Rep b) const
{
    Poly pa, pb, m(modulus_.begin(), modulus_.end());
    for (unsigned i = 0; i < k_; ++i) {
        pa.push_back(a % p_);
        pb.push_back(b % p_);
        a /= p_;
        b /= p_;
    }
    trim(pa);
    trim(pb);
    Poly r = poly_mulmod(pa, pb, m, p_);
    Rep out = 0;
    for (std::size_t i = r.size(); i-- > 0;) out = out * p_ + static_cast<Rep>(r[i]);
    return out;
}

FiniteField::Rep FiniteField::from_int(std::int64_t c) const
{
    const std::int64_t p = p_;
    return static_cast<Rep>(((c % p) + p) % p);
}

FiniteField::Rep FiniteField::from_coefficients(std::span<const std::uint32_t> coeffs) const
{
    if (coeffs.size() > k_) throw FieldError("too many coefficients for field of degree " + std::to_string(k_));
    Rep out = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= p_) throw FieldError("coefficient out of range");
        out = out * p_ + coeffs[i];
    }
    return out;
}

std::vector<std::uint32_t> FiniteField::coefficients(Rep a) const
{
    std::vector<std::uint32_t> out(k_);
    for (unsigned i = 0; i < k_; ++i) {
        out[i] = a % p_;
        a /= p_;
    }
    return out;
}

FiniteField::Rep FiniteField::add(Rep a, Rep b) const
{
    if (k_ == 1) {
        const Rep s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Rep out = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        Rep d = a % p_ + b % p_;
        if (d >= p_) d -= p_;
        out += d * scale;
        scale *= p_;
        a /= p_;
        b /= p_;
    }
    return out;
}

FiniteField::Rep FiniteField::neg(Rep a) const
{
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    Rep out = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        const Rep d = a % p_;
        out += (d == 0 ? 0 : p_ - d) * scale;
        scale *= p_;
        a /= p_;
    }
    return out;
}

FiniteField::Rep FiniteField::sub(Rep a, Rep b) const { return add(a, neg(b)); }

FiniteField::Rep FiniteField::inv(Rep a) const
{
    if (a == 0) throw FieldError("division by zero");
    const auto l = log_[a];
    return exp_[l == 0 ? 0 : (q_ - 1) - l];
}

FiniteField::Rep FiniteField::pow(Rep a, std::uint64_t e) const
{
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1)) % (q_ - 1)];
}

int FiniteField::quadratic_character(Rep a) const
{
    if (a == 0) return 0;
    return pow(a, (q_ - 1) / 2) == 1 ? 1 : -1;
}

unsigned FiniteField::quadratic_root_count(Rep a, Rep b, Rep c) const
{
    if (a == 0 && b == 0 && c == 0) return q_ + 1;
    const Rep four_ac = mul(from_int(4), mul(a, c));
    const Rep disc = sub(mul(b, b), four_ac);
    switch (quadratic_character(disc)) {
    case 0: return 1;
    case 1: return 2;
    default: return 0;
    }
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, Rep rep) : field_(std::move(field)), rep_(rep)
{
    if (!field_) throw FieldError("element without a field");
    if (!field_->contains(rep_)) throw FieldError("representative out of range");
}

FieldElement FieldElement::from_int(FieldPtr field, std::int64_t c)
{
    const Rep r = field->from_int(c);
    return FieldElement(std::move(field), r);
}

const FiniteField& FieldElement::same_field(const FieldElement& o) const
{
    if (field_ != o.field_) throw FieldError("operands belong to different fields");
    return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const { return {field_, same_field(o).add(rep_, o.rep_)}; }
FieldElement FieldElement::operator-(const FieldElement& o) const { return {field_, same_field(o).sub(rep_, o.rep_)}; }
FieldElement FieldElement::operator*(const FieldElement& o) const { return {field_, same_field(o).mul(rep_, o.rep_)}; }
FieldElement FieldElement::operator/(const FieldElement& o) const { return {field_, same_field(o).div(rep_, o.rep_)}; }
FieldElement FieldElement::operator-() const { return {field_, field_->neg(rep_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_->inv(rep_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(rep_, e)}; }

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op)
{
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
    case ArithOp::pow:
        if (a.field() != b.field()) throw FieldError("operands belong to different fields");
        return a.pow(b.rep());
    }
    throw FieldError("unknown operation");
}

int quadratic_character(const FieldElement& a) { return a.field()->quadratic_character(a.rep()); }

unsigned quadratic_root_count(const FieldElement& a, const FieldElement& b, const FieldElement& c)
{
    if (a.field() != b.field() || a.field() != c.field()) throw FieldError("operands belong to different fields");
    return a.field()->quadratic_root_count(a.rep(), b.rep(), c.rep());
}

// ---------------------------------------------------------------------------

std::uint64_t projective_point_count(std::uint64_t q, unsigned n)
{
    std::uint64_t total = 0, term = 1;
    for (unsigned i = 0; i <= n; ++i) {
        total += term;
        term *= q;
    }
    return total;
}

ProjectiveSpace::ProjectiveSpace(std::uint32_t q, unsigned n) : q_(q), n_(n), size_(projective_point_count(q, n))
{
    if (q < 2) throw DomainError("field order must be >= 2");
}

ProjectiveSpace::Iterator ProjectiveSpace::at(std::uint64_t index) const
{
    if (index > size_) throw DomainError("projective index out of range");
    return Iterator(q_, n_, index);
}

ProjectiveSpace::Iterator::Iterator(std::uint32_t q, unsigned n, std::uint64_t index)
    : q_(q), n_(n), index_(index), point_(n + 1, 0)
{
    // block for lead position l holds q^{n-l} points
    std::uint64_t rest = index;
    unsigned lead = 0;
    std::uint64_t block = 1;
    for (unsigned i = 0; i < n; ++i) block *= q;
    while (lead <= n && rest >= block) {
        rest -= block;
        block /= q;
        ++lead;
    }
    lead_ = lead;
    if (lead > n) return; // end
    point_[lead] = 1;
    for (unsigned i = n; i > lead; --i) {
        point_[i] = static_cast<FiniteField::Rep>(rest % q);
        rest /= q;
    }
}

ProjectiveSpace::Iterator& ProjectiveSpace::Iterator::operator++()
{
    ++index_;
    for (unsigned i = n_; i > lead_; --i) {
        if (++point_[i] < q_) return *this;
        point_[i] = 0;
    }
    point_[lead_] = 0;
    ++lead_;
    if (lead_ <= n_) point_[lead_] = 1;
    return *this;
}

void normalize_projective(const FiniteField& f, std::span<FiniteField::Rep> v)
{
    auto it = std::find_if(v.begin(), v.end(), [](auto c) { return c != 0; });
    if (it == v.end()) throw FieldError("zero vector has no projective normalization");
    const auto s = f.inv(*it);
    for (; it != v.end(); ++it) *it = f.mul(*it, s);
}

} // namespace cfz
