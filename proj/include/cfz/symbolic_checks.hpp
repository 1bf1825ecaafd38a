#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "cfz/sparse_poly.hpp"
#include "cfz/variety.hpp"

namespace cfz {

struct PfaffianMapCheck {
    SparsePoly residual;           ///< the substituted fourfold form, expanded
    std::size_t random_points = 0;
    std::size_t random_failures = 0;

    bool passed() const { return residual.is_zero() && random_failures == 0; }
};

/// Substitutes (x, u, y, v, z, w) := (xF, uG, yF, vG, zF, wG) into the
/// fourfold form and expands.  Also evaluates the composite at
/// `random_points` seeded points of F_101^6.
PfaffianMapCheck verify_pfaffian_map_identity(const MultiHomPoly& F, const MultiHomPoly& G,
                                              std::size_t random_points = 100, std::uint64_t seed = 1);
PfaffianMapCheck verify_pfaffian_map_identity();

/// An invertible 6x6 rational matrix acting on P^5, up to scalars.
class ProjectiveMatrix {
public:
    using Q = boost::rational<std::int64_t>;

    explicit ProjectiveMatrix(std::vector<std::vector<Q>> rows, std::string name = {});
    static ProjectiveMatrix identity(std::size_t n = 6);

    std::size_t size() const { return rows_.size(); }
    const std::vector<std::vector<Q>>& rows() const { return rows_; }
    const std::string& name() const { return name_; }

    ProjectiveMatrix operator*(const ProjectiveMatrix& o) const;
    ProjectiveMatrix inverse() const;

    /// f(M x) as a polynomial in the same variables.
    SparsePoly act_on(const SparsePoly& f) const;

    friend bool operator==(const ProjectiveMatrix& a, const ProjectiveMatrix& b) { return a.rows_ == b.rows_; }
    friend bool operator<(const ProjectiveMatrix& a, const ProjectiveMatrix& b);

private:
    void normalize();

    std::vector<std::vector<Q>> rows_;
    std::string name_;
};

/// [a, b] -> [-b, -a] and [a, b] -> [b - a, -a] on coordinates (2i, 2i+1)
/// of (x, u, y, v, z, w).
ProjectiveMatrix pair_swap(unsigned pair);
ProjectiveMatrix pair_rotation(unsigned pair);

/// Whether f(M x) = c f(x) for some nonzero rational c.
bool preserves_up_to_scalar(const ProjectiveMatrix& m, const SparsePoly& f);

/// Order of the group generated modulo scalars; throws DomainError beyond
/// `limit` elements.
std::size_t projective_closure_order(const std::vector<ProjectiveMatrix>& gens, std::size_t limit = 100000);

struct AutomorphismReport {
    std::size_t order = 0;
    std::size_t elements_checked = 0;
};

/// Closure of `gens` with every element checked against `form`.  Throws
/// VerificationError naming the first generator that does not preserve it.
AutomorphismReport automorphism_subgroup(const std::vector<ProjectiveMatrix>& gens, const MultiHomPoly& form,
                                         std::size_t limit = 100000);

} // namespace cfz
