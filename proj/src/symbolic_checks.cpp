#include "cfz/symbolic_checks.hpp"

#include <numeric>
#include <random>
#include <set>

#include "cfz/error.hpp"

namespace cfz {

namespace {

constexpr std::int64_t kEvalPrime = 101;

SparsePoly as_six_vars(const MultiHomPoly& f)
{
    if (f.blocks().num_vars() != 6) throw DomainError("expected a form in six variables");
    return f.poly();
}

} // namespace

PfaffianMapCheck verify_pfaffian_map_identity(const MultiHomPoly& F, const MultiHomPoly& G,
                                              std::size_t random_points, std::uint64_t seed)
{
    // surface ring variables (x, y, z, u, v, w)
    const auto& names = F.blocks().flat_names();
    if (F.blocks() != G.blocks() || names != std::vector<std::string>{"x", "y", "z", "u", "v", "w"})
        throw DomainError("F and G must be forms in (x, y, z | u, v, w)");
    const SparsePoly f = F.poly(), g = G.poly();
    auto var = [](std::size_t i) { return SparsePoly::variable(6, i); };

    // fourfold coordinates (x, u, y, v, z, w)
    const std::vector<SparsePoly> images = {var(0) * f, var(3) * g, var(1) * f,
                                            var(4) * g, var(2) * f, var(5) * g};
    const SparsePoly cubic = fourfold_form().poly();

    PfaffianMapCheck out{cubic.substitute(images), random_points, 0};

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(0, kEvalPrime - 1);
    for (std::size_t i = 0; i < random_points; ++i) {
        std::vector<std::int64_t> pt(6);
        for (auto& c : pt) c = dist(rng);
        const auto fv = f.eval_mod(pt, kEvalPrime), gv = g.eval_mod(pt, kEvalPrime);
        const std::vector<std::int64_t> image = {pt[0] * fv % kEvalPrime, pt[3] * gv % kEvalPrime,
                                                 pt[1] * fv % kEvalPrime, pt[4] * gv % kEvalPrime,
                                                 pt[2] * fv % kEvalPrime, pt[5] * gv % kEvalPrime};
        if (cubic.eval_mod(image, kEvalPrime) != 0) ++out.random_failures;
    }
    return out;
}

PfaffianMapCheck verify_pfaffian_map_identity()
{
    return verify_pfaffian_map_identity(surface_form_F(), surface_form_G());
}

ProjectiveMatrix::ProjectiveMatrix(std::vector<std::vector<Q>> rows, std::string name)
    : rows_(std::move(rows)), name_(std::move(name))
{
    for (const auto& r : rows_)
        if (r.size() != rows_.size()) throw DomainError("matrix must be square");
    if (rows_.empty()) throw DomainError("empty matrix");
    normalize();
    inverse(); // rejects singular matrices
}

ProjectiveMatrix ProjectiveMatrix::identity(std::size_t n)
{
    std::vector<std::vector<Q>> rows(n, std::vector<Q>(n, Q(0)));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
    return ProjectiveMatrix(std::move(rows), "identity");
}

void ProjectiveMatrix::normalize()
{
    for (const auto& r : rows_)
        for (const auto& c : r)
            if (c != Q(0)) {
                const Q s = c;
                for (auto& rr : rows_)
                    for (auto& cc : rr) cc /= s;
                return;
            }
    throw DomainError("zero matrix");
}

ProjectiveMatrix ProjectiveMatrix::operator*(const ProjectiveMatrix& o) const
{
    const std::size_t n = size();
    if (o.size() != n) throw DomainError("matrix size mismatch");
    std::vector<std::vector<Q>> out(n, std::vector<Q>(n, Q(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (rows_[i][k] != Q(0))
                for (std::size_t j = 0; j < n; ++j) out[i][j] += rows_[i][k] * o.rows_[k][j];
    ProjectiveMatrix m = *this;
    m.rows_ = std::move(out);
    m.name_.clear();
    m.normalize();
    return m;
}

ProjectiveMatrix ProjectiveMatrix::inverse() const
{
    const std::size_t n = size();
    auto a = rows_;
    std::vector<std::vector<Q>> inv(n, std::vector<Q>(n, Q(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == Q(0)) ++piv;
        if (piv == n) throw DomainError("matrix " + (name_.empty() ? std::string("?") : name_) + " is singular");
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        const Q s = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= s;
            inv[c][j] /= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == Q(0)) continue;
            const Q t = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= t * a[c][j];
                inv[r][j] -= t * inv[c][j];
            }
        }
    }
    ProjectiveMatrix m = *this;
    m.rows_ = std::move(inv);
    m.name_.clear();
    m.normalize();
    return m;
}

SparsePoly ProjectiveMatrix::act_on(const SparsePoly& f) const
{
    const std::size_t n = size();
    if (f.num_vars() != n) throw DomainError("polynomial and matrix sizes differ");
    std::int64_t den = 1;
    for (const auto& r : rows_)
        for (const auto& c : r) den = std::lcm(den, c.denominator());
    std::vector<SparsePoly> images;
    for (std::size_t i = 0; i < n; ++i) {
        SparsePoly img(n);
        for (std::size_t j = 0; j < n; ++j) {
            const Q c = rows_[i][j] * den;
            if (c != Q(0)) img += SparsePoly::variable(n, j).scaled(c.numerator());
        }
        images.push_back(std::move(img));
    }
    return f.substitute(images);
}

bool operator<(const ProjectiveMatrix& a, const ProjectiveMatrix& b)
{
    return a.rows_ < b.rows_;
}

namespace {

ProjectiveMatrix pair_map(unsigned pair, ProjectiveMatrix::Q a0, ProjectiveMatrix::Q a1, ProjectiveMatrix::Q b0,
                          ProjectiveMatrix::Q b1, std::string name)
{
    if (pair > 2) throw DomainError("pair index must be 0, 1 or 2");
    auto rows = std::vector<std::vector<ProjectiveMatrix::Q>>(6, std::vector<ProjectiveMatrix::Q>(6, 0));
    for (std::size_t i = 0; i < 6; ++i) rows[i][i] = 1;
    const std::size_t i = 2 * pair, j = i + 1;
    rows[i][i] = a0;
    rows[i][j] = a1;
    rows[j][i] = b0;
    rows[j][j] = b1;
    return ProjectiveMatrix(std::move(rows), std::move(name) + "(" + std::to_string(pair) + ")");
}

} // namespace

ProjectiveMatrix pair_swap(unsigned pair) { return pair_map(pair, 0, -1, -1, 0, "swap"); }

ProjectiveMatrix pair_rotation(unsigned pair) { return pair_map(pair, -1, 1, -1, 0, "rotation"); }

bool preserves_up_to_scalar(const ProjectiveMatrix& m, const SparsePoly& f)
{
    const SparsePoly g = m.act_on(f);
    if (g.size() != f.size() || f.is_zero()) return g.size() == f.size();
    auto fi = f.terms().begin();
    auto gi = g.terms().begin();
    const __int128 f0 = fi->second, g0 = gi->second;
    for (; fi != f.terms().end(); ++fi, ++gi) {
        if (fi->first != gi->first) return false;
        if (static_cast<__int128>(gi->second) * f0 != static_cast<__int128>(fi->second) * g0) return false;
    }
    return true;
}

namespace {

std::set<ProjectiveMatrix> closure(const std::vector<ProjectiveMatrix>& gens, std::size_t limit)
{
    if (gens.empty()) throw DomainError("no generators");
    std::set<ProjectiveMatrix> seen;
    std::vector<ProjectiveMatrix> frontier = {ProjectiveMatrix::identity(gens.front().size())};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<ProjectiveMatrix> next;
        for (const auto& m : frontier)
            for (const auto& g : gens) {
                auto p = m * g;
                if (seen.insert(p).second) {
                    if (seen.size() > limit)
                        throw DomainError("group closure exceeds " + std::to_string(limit) + " elements");
                    next.push_back(std::move(p));
                }
            }
        frontier = std::move(next);
    }
    return seen;
}

} // namespace

std::size_t projective_closure_order(const std::vector<ProjectiveMatrix>& gens, std::size_t limit)
{
    return closure(gens, limit).size();
}

AutomorphismReport automorphism_subgroup(const std::vector<ProjectiveMatrix>& gens, const MultiHomPoly& form,
                                         std::size_t limit)
{
    const SparsePoly f = as_six_vars(form);
    for (const auto& g : gens)
        if (!preserves_up_to_scalar(g, f))
            throw VerificationError("generator " + (g.name().empty() ? std::string("<unnamed>") : g.name()) +
                                    " does not preserve the form");
    const auto group = closure(gens, limit);
    AutomorphismReport r{group.size(), 0};
    for (const auto& m : group) {
        if (!preserves_up_to_scalar(m, f)) throw VerificationError("closure contains a non-preserving element");
        ++r.elements_checked;
    }
    return r;
}

} // namespace cfz
