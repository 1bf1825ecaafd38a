#pragma once

#include <cstdint>
#include <iterator>
#include <memory>
#include <span>
#include <vector>

#include "cfz/error.hpp"

namespace cfz {

bool is_prime(std::int64_t n);

/// Throws DomainError unless p is a prime of good reduction (p >= 5).
void require_good_prime(std::int64_t p);

/// Polynomial over F_p, coefficients in ascending degree.
using PolyFp = std::vector<std::uint32_t>;

/// True iff the monic polynomial f (degree >= 1) is irreducible over F_p.
/// Uses gcd(f, x^{p^i} - x) for i <= deg f / 2.
bool is_irreducible(const PolyFp& f, std::uint32_t p);

/// First monic irreducible polynomial of degree k over F_p, scanning the
/// non-leading coefficients (c_{k-1}, ..., c_0) in lexicographic order, i.e.
/// by the integer sum c_i p^i.  k = 1 returns x.
PolyFp find_irreducible(std::uint32_t p, unsigned k);

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// The field F_q, q = p^k, realised as F_p[t]/(modulus).
///
/// Elements are handled as raw representatives `Rep` in [0, q): the element
/// sum c_i t^i is encoded as sum c_i p^i.  Integers embed as c mod p, so 0 and
/// 1 have representatives 0 and 1.  Multiplication goes through discrete
/// log tables built once at construction.
class FiniteField {
public:
    using Rep = std::uint32_t;

    static constexpr std::uint64_t max_order = 1u << 22;

    /// Characteristic 2 and 3 are rejected.
    static FieldPtr make(std::uint32_t p, unsigned k = 1);
    static FieldPtr make(std::uint32_t p, PolyFp modulus);

    std::uint32_t characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    std::uint32_t order() const { return q_; }
    const PolyFp& modulus() const { return modulus_; }
    Rep generator() const { return exp_[1]; }

    Rep from_int(std::int64_t c) const;
    Rep from_coefficients(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coefficients(Rep a) const;

    Rep add(Rep a, Rep b) const;
    Rep sub(Rep a, Rep b) const;
    Rep neg(Rep a) const;
    Rep mul(Rep a, Rep b) const
    {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Rep inv(Rep a) const;
    Rep div(Rep a, Rep b) const { return mul(a, inv(b)); }
    Rep pow(Rep a, std::uint64_t e) const;
    Rep frobenius(Rep a) const { return pow(a, p_); }

    /// Legendre-type character a^((q-1)/2) mapped to {-1, 0, 1}.
    int quadratic_character(Rep a) const;

    /// Number of points [U:V] in P^1(F_q) with aU^2 + bUV + cV^2 = 0.
    unsigned quadratic_root_count(Rep a, Rep b, Rep c) const;

    bool contains(Rep a) const { return a < q_; }

private:
    FiniteField(std::uint32_t p, PolyFp modulus);

    Rep slow_mul(Rep a, Rep b) const;

    std::uint32_t p_;
    unsigned k_;
    std::uint32_t q_;
    PolyFp modulus_;
    std::vector<Rep> exp_;            // length 2(q-1)
    std::vector<std::uint32_t> log_;  // log_[0] unused
};

/// Value type for a single element; carries its field.
class FieldElement {
public:
    using Rep = FiniteField::Rep;

    FieldElement(FieldPtr field, Rep rep);
    static FieldElement from_int(FieldPtr field, std::int64_t c);

    const FieldPtr& field() const { return field_; }
    Rep rep() const { return rep_; }
    bool is_zero() const { return rep_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;

    friend bool operator==(const FieldElement& a, const FieldElement& b)
    {
        return a.field_ == b.field_ && a.rep_ == b.rep_;
    }

private:
    const FiniteField& same_field(const FieldElement& o) const;

    FieldPtr field_;
    Rep rep_;
};

enum class ArithOp { add, sub, mul, div, pow };

/// Binary arithmetic dispatch.  For `pow`, b is read as the integer
/// exponent given by its representative.
FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op);

int quadratic_character(const FieldElement& a);
unsigned quadratic_root_count(const FieldElement& a, const FieldElement& b, const FieldElement& c);

// ---------------------------------------------------------------------------
// Projective space enumeration

/// (q^{n+1} - 1) / (q - 1)
std::uint64_t projective_point_count(std::uint64_t q, unsigned n);

/// Points of P^n(F_q) as representative vectors whose first nonzero
/// coordinate is 1.  Ordered by the position of that coordinate, then by the
/// remaining coordinates read as a base-q number (last coordinate fastest).
/// Works on representatives only, so any q >= 2 is accepted.
class ProjectiveSpace {
public:
    using Point = std::vector<FiniteField::Rep>;

    class Iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Point;
        using difference_type = std::ptrdiff_t;
        using pointer = const Point*;
        using reference = const Point&;

        Iterator() = default;
        Iterator(std::uint32_t q, unsigned n, std::uint64_t index);

        reference operator*() const { return point_; }
        pointer operator->() const { return &point_; }
        Iterator& operator++();
        Iterator operator++(int)
        {
            auto t = *this;
            ++*this;
            return t;
        }
        std::uint64_t index() const { return index_; }
        friend bool operator==(const Iterator& a, const Iterator& b) { return a.index_ == b.index_; }

    private:
        std::uint32_t q_ = 0;
        unsigned n_ = 0;
        std::uint64_t index_ = 0;
        unsigned lead_ = 0;
        Point point_;
    };

    ProjectiveSpace(std::uint32_t q, unsigned n);

    std::uint32_t field_order() const { return q_; }
    unsigned dimension() const { return n_; }
    std::uint64_t size() const { return size_; }

    Iterator begin() const { return Iterator(q_, n_, 0); }
    Iterator end() const { return Iterator(q_, n_, size_); }
    /// Iterator positioned at the given rank (0 <= index <= size()).
    Iterator at(std::uint64_t index) const;

private:
    std::uint32_t q_;
    unsigned n_;
    std::uint64_t size_;
};

/// Scale a nonzero vector so its first nonzero coordinate is 1.
void normalize_projective(const FiniteField& f, std::span<FiniteField::Rep> v);

} // namespace cfz
