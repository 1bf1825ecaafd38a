#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cfz {

/// (k+1)-element subsets of {0..n}, lexicographic.  Position in this list is
/// the coordinate index of a Pluecker vector of Gr(k, n).
std::vector<std::vector<unsigned>> pluecker_indices(unsigned k, unsigned n);

/// Exterior-square style coordinates of a point of Gr(k, n) over F_q (q prime).
struct PlueckerVector {
    unsigned k = 0;
    unsigned n = 0;
    std::uint32_t q = 0;
    std::vector<std::int64_t> coords;  ///< entries in [0, q)

    bool is_zero() const;
    /// Scales so the first nonzero coordinate is 1.
    PlueckerVector normalized() const;
    friend bool operator==(const PlueckerVector&, const PlueckerVector&) = default;
};

/// Sum over basis wedges: e.g. {{0,1},{2,3}} gives e0^e1 + e2^e3.
PlueckerVector pluecker_from_terms(unsigned k, unsigned n, std::uint32_t q,
                                   std::span<const std::vector<unsigned>> wedges);

/// Maximal minors of a (k+1) x (n+1) matrix over F_q.
PlueckerVector wedge_rows(std::span<const std::vector<std::int64_t>> rows, std::uint32_t q);

/// Integer quadratic form sum c * p_i * p_j on Pluecker coordinates.
struct QuadraticRelation {
    struct Term {
        std::int64_t coeff;
        std::size_t i;  ///< i <= j
        std::size_t j;
    };
    std::vector<Term> terms;

    std::int64_t eval_mod(std::span<const std::int64_t> coords, std::int64_t q) const;
};

/// Quadratic Pluecker relations of Gr(k, n): for every k-subset I and
/// (k+2)-subset J, sum_l (-1)^l p_{I+j_l} p_{J-j_l}; zero relations dropped
/// and duplicates (up to sign) merged.
std::vector<QuadraticRelation> pluecker_relations(unsigned k, unsigned n);

/// e.g. "p01*p23 - p02*p13 + p03*p12"
std::string to_string(const QuadraticRelation& r, unsigned k, unsigned n);

/// All relations vanish.
bool is_decomposable(const PlueckerVector& v);

/// Every point of Gr(k, n)(F_q), normalized, from reduced row echelon bases.
struct GrassmannianPoint {
    PlueckerVector pluecker;
    std::vector<std::vector<std::int64_t>> basis;  ///< (k+1) x (n+1), reduced row echelon
};
std::vector<GrassmannianPoint> grassmannian_points(unsigned k, unsigned n, std::uint32_t q);

/// Membership of v (nonzero) in the enumerated Grassmannian.
bool is_decomposable_exhaustive(const PlueckerVector& v);

/// Classification of a linear space of (k)-planes by the planes it is made of.
enum class SubspaceFamily {
    pencil,    ///< all contain a fixed (k-1)-plane
    coplanar,  ///< all lie in a fixed (k+1)-plane
    both,
    other,
};

std::string to_string(SubspaceFamily f);

struct LinearSubspace {
    std::vector<PlueckerVector> basis;
    SubspaceFamily family = SubspaceFamily::other;
};

struct SubspaceSearchReport {
    unsigned k = 0;
    unsigned n = 0;
    std::uint32_t q = 0;
    unsigned max_dim = 0;
    bool bound_applies = false;               ///< 2k < n - 1, where max_dim = n - k is expected
    std::vector<LinearSubspace> maximal;      ///< every subspace of dimension max_dim
    std::uint64_t grassmannian_size = 0;
    std::uint64_t subspaces_examined = 0;

    std::size_t count(SubspaceFamily f) const;
    const LinearSubspace& witness() const { return maximal.front(); }
};

/// Largest projective linear subspace of P^m(F_q) inside the Pluecker image
/// of Gr(k, n), by exhaustive search over all linear subspaces spanned by
/// Grassmannian points.  Throws BudgetExceeded above `budget` vectors of
/// F_q^{m+1}.
SubspaceSearchReport max_linear_subspace_dim(unsigned k, unsigned n, std::uint32_t q,
                                             std::uint64_t budget = 1u << 22);

/// {"k","n","q","max_dim","witness_basis"} plus family counts.
std::string to_json(const SubspaceSearchReport& r);

} // namespace cfz
