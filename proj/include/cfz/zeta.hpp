#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cfz/finite_field.hpp"

namespace cfz {

/// Frobenius trace data of the surface S at a good prime, read off from
/// N1 = #S(F_p) = 1 + t2 + p^2.
struct TraceRecord {
    std::uint32_t p = 0;
    std::int64_t t2 = 0;       ///< trace on H^2(S)
    std::int64_t residue = 0;  ///< trace on T(S) mod p, i.e. (N1 - 1) mod p
    std::optional<std::int64_t> t_alg;
};

/// Throws VerificationError if |t2| > 22p (no K3 surface has such a count).
TraceRecord trace_from_count(std::int64_t n1, std::uint32_t p);

/// For p = 2 mod 3: (N1 - 1) = 0 mod p.  Throws DomainError for other p.
bool residue_zero_check(std::uint32_t p, std::int64_t n1);

/// Predicted #S^[2](F_p) = (N1^2 + N2)/2 + p N1.  Throws VerificationError
/// when N1^2 + N2 is odd.
std::int64_t hilbert_square_count(std::int64_t n1, std::int64_t n2, std::uint32_t p);

/// Direct count of F_p-points of S^[2] from an explicit point list over
/// F_{p^2}: Frobenius-stable unordered pairs plus p extra points for each
/// rational point on the diagonal.
struct HilbertOrbitCount {
    std::int64_t rational_points = 0;    ///< points fixed by Frobenius
    std::int64_t conjugate_pairs = 0;    ///< orbits {a, Fr(a)} with a != Fr(a)
    std::int64_t stable_pairs = 0;       ///< unordered Frobenius-stable pairs
    std::int64_t total = 0;
};

/// `points` are concatenated normalized block coordinates over the degree-2
/// field `f`; `block_sizes` gives the coordinate split.
HilbertOrbitCount hilbert_square_orbit_count(std::span<const std::vector<FiniteField::Rep>> points,
                                             const FiniteField& f, std::span<const std::size_t> block_sizes);

/// 1 + p^2 + p^4 + p N1
std::int64_t fourfold_count_from_surface(std::int64_t n1, std::uint32_t p);

/// t2 - a_p, required to be p times an integer of absolute value <= 20.
std::int64_t algebraic_trace_split(std::int64_t t2, std::int64_t a_p, std::uint32_t p);

/// Integer polynomial in T with constant term 1 (ascending coefficients).
struct LocalFactor {
    std::uint32_t p = 0;
    int weight = 0;
    std::vector<std::int64_t> coeffs;

    friend bool operator==(const LocalFactor&, const LocalFactor&) = default;
};

/// 1 - a_p T + p^2 T^2 (shift 0) or 1 - p a_p T + p^4 T^2 (shift 1).
LocalFactor local_factor_cm(std::int64_t a_p, std::uint32_t p, int tate_shift);

/// 1 - s p^w T
LocalFactor linear_factor(std::uint32_t p, int w, int sign = 1);

/// Frobenius on one summand of a cohomology group.
struct FrobeniusPiece {
    enum class Kind { tate, cm_form };

    std::string label;
    unsigned dimension = 0;
    Kind kind = Kind::tate;
    int weight = 0;            ///< tate: eigenvalue sign * p^weight
    int sign = 1;
    std::int64_t a_p = 0;      ///< cm_form: coefficient of the weight-3 form
    int tate_shift = 0;        ///< cm_form: roots scaled by p^shift

    std::int64_t trace(std::uint32_t p) const;
    /// det(1 - Fr T) restricted to the piece, as (factor, multiplicity).
    std::pair<LocalFactor, unsigned> factor(std::uint32_t p) const;
};

struct CohomologyDecomposition {
    std::string group;
    std::vector<FrobeniusPiece> pieces;

    unsigned dimension() const;
    std::int64_t trace(std::uint32_t p) const;
};

/// Neron-Severi eigenvalue multiplicities (+p^w and -p^w) with
/// m_plus + m_minus = 20 and m_plus - m_minus = ns_fixed.
struct NeronSeveriModel {
    int m_plus = 20;
    int m_minus = 0;

    static NeronSeveriModel from_fixed(int ns_fixed);
};

/// H^2(S^[2]) = H^2(S) + Q_l[Delta]
CohomologyDecomposition hilbert_square_h2(std::int64_t a_p, NeronSeveriModel ns);
/// H^4(X) = H^2(S)(1) + Q_l[Delta](1)
CohomologyDecomposition fourfold_h4(std::int64_t a_p, NeronSeveriModel ns);

/// One factor of Z(X, T) = prod factor^exponent; even cohomological degrees
/// carry negative exponents.
struct FactorTerm {
    unsigned degree = 0;
    LocalFactor factor;
    int exponent = 0;
};

/// Local zeta factors of the fourfold at a good prime: P0, P2, P4 (split
/// into NS(1), [Delta](1) and T(S)(1) parts), P6, P8.
std::vector<FactorTerm> assemble_fourfold_factors(std::uint32_t p, std::int64_t a_p, int ns_fixed);

/// N_k from the logarithmic derivative of the factor product.
std::int64_t reconstruct_count(std::span<const FactorTerm> factors, unsigned k = 1);

/// Power sums s_1..s_k of the inverse roots of a polynomial with constant term 1.
std::vector<std::int64_t> inverse_root_power_sums(const LocalFactor& f, unsigned k);

/// {"p", "weight", "coeffs"}
std::string to_json(const LocalFactor& f);

} // namespace cfz
