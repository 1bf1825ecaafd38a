// One PASS/FAIL line per acceptance criterion, with wall time against the
// allowed limit.  Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "cfz/cm_forms.hpp"
#include "cfz/error.hpp"
#include "cfz/finite_field.hpp"
#include "cfz/grassmannian.hpp"
#include "cfz/point_count.hpp"
#include "cfz/symbolic_checks.hpp"
#include "cfz/zeta.hpp"

using namespace cfz;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

using Body = std::function<void(Outcome&)>;

constexpr std::uint32_t table_primes[] = {7, 13, 19, 31, 37};
constexpr std::int64_t table_counts[] = {177, 429, 753, 1536, 2157};
constexpr std::int64_t table_residues[] = {1, 12, 11, 16, 10};

std::string str(std::int64_t v) { return std::to_string(v); }

std::int64_t fourfold_formula(std::int64_t p, std::int64_t n1) { return 1 + p * p + p * p * p * p + p * n1; }

void table_counts_criterion(Outcome& o)
{
    for (std::size_t i = 0; i < 5; ++i) {
        const auto c = static_cast<std::int64_t>(count_S_fibered(table_primes[i]).count);
        o.require(c == table_counts[i], "p=" + str(table_primes[i]) + " gives " + str(c));
    }
}

void residue_criterion(Outcome& o)
{
    for (std::size_t i = 0; i < 5; ++i) {
        const auto r = trace_from_count(table_counts[i], table_primes[i]).residue;
        o.require(r == table_residues[i], "residue at p=" + str(table_primes[i]) + " is " + str(r));
    }
    for (std::uint32_t p : {5u, 11u, 17u, 23u, 29u}) {
        const auto n1 = static_cast<std::int64_t>(count_S_fibered(p).count);
        o.require(trace_from_count(n1, p).residue == 0 && residue_zero_check(p, n1),
                  "nonzero residue at p=" + str(p));
    }
}

void fermat_criterion(Outcome& o)
{
    const auto f = count_fermat_cubic(7).count;
    const auto x = count_pairsum_convolution(7).count;
    o.require(f == 3690, "fermat count " + str(f));
    o.require(x == 3690, "fourfold count " + str(x));
    o.require(fourfold_formula(7, 177) == 3690, "1 + 7^2 + 7^4 + 7*177 != 3690");
}

void second_prime_criterion(Outcome& o)
{
    const auto conv = static_cast<std::int64_t>(count_pairsum_convolution(13).count);
    o.require(conv == 34308, "convolution gives " + str(conv));
    o.require(fourfold_formula(13, 429) == 34308, "formula mismatch");
    const auto generic = static_cast<std::int64_t>(count_points_generic(builtin_variety("X"), 13).count);
    o.require(generic == 34308, "generic enumeration gives " + str(generic));
}

void identification_criterion(Outcome& o)
{
    std::vector<std::pair<std::uint32_t, std::int64_t>> data;
    for (std::size_t i = 0; i < 5; ++i) data.emplace_back(table_primes[i], table_residues[i]);
    const auto id = identify_form(data);
    o.require(id.status == Identification::Status::unique && id.match && *id.match == 0, to_json(id));
    const std::vector<std::pair<std::uint32_t, std::int64_t>> inert = {{5, 0}, {11, 0}, {17, 0}};
    o.require(identify_form(inert).status == Identification::Status::ambiguous, "inert-only input not ambiguous");
    for (std::uint32_t p = 7; p <= 200; ++p) {
        if (!is_prime(p) || p % 3 != 1) continue;
        try {
            o.require(ap_via_eisenstein(p) == ap_base(p), "a_p routes differ at p=" + str(p));
        } catch (const VerificationError& e) {
            o.require(false, e.what());
        }
    }
}

void hilbert_criterion(Outcome& o)
{
    const auto s = builtin_variety("S");
    const auto f49 = FiniteField::make(7, 2);
    const auto n2 = static_cast<std::int64_t>(count_points_generic(s, f49).count);
    const auto pts = list_points_generic(s, f49);
    o.require(static_cast<std::int64_t>(pts.size()) == n2, "point list size differs from the count");
    const std::size_t blocks[] = {3, 3};
    const auto orbit = hilbert_square_orbit_count(pts, *f49, blocks);
    const auto formula = hilbert_square_count(177, n2, 7);
    o.require(orbit.total == formula, "orbit count " + str(orbit.total) + " vs formula " + str(formula));
    o.detail = "N2=" + str(n2) + ", #S^[2](F_7)=" + str(orbit.total);
}

void algebraic_trace_criterion(Outcome& o)
{
    for (std::size_t i = 0; i < 5; ++i) {
        const std::uint32_t p = table_primes[i];
        const auto t2 = trace_from_count(table_counts[i], p).t2;
        const auto t_alg = algebraic_trace_split(t2, ap_base(p), p);
        o.require(t_alg == 20 * static_cast<std::int64_t>(p), "t_alg/p at p=" + str(p) + " is not 20");
    }
    for (std::uint32_t p : {7u, 13u}) {
        const auto rec = reconstruct_count(assemble_fourfold_factors(p, ap_base(p), 20));
        const auto direct = static_cast<std::int64_t>(count_pairsum_convolution(p).count);
        o.require(rec == direct, "reconstruction at p=" + str(p) + " gives " + str(rec));
    }
}

void grassmannian_criterion(Outcome& o)
{
    const auto r = max_linear_subspace_dim(1, 4, 2);
    o.require(r.max_dim == 3, "max dim " + str(r.max_dim));
    o.require(r.witness().family == SubspaceFamily::pencil, "witness is " + to_string(r.witness().family));
    const auto b = max_linear_subspace_dim(1, 3, 2);
    o.require(b.max_dim == 2, "boundary max dim " + str(b.max_dim));
    o.require(b.count(SubspaceFamily::pencil) > 0 && b.count(SubspaceFamily::coplanar) > 0,
              "boundary case lacks one of the plane families");
}

void symbolic_criterion(Outcome& o)
{
    const auto check = verify_pfaffian_map_identity();
    o.require(check.residual.is_zero(), "nonzero residual");
    o.require(check.random_failures == 0, "random evaluation failures");
    const auto form = fourfold_form();
    const auto one = automorphism_subgroup({pair_swap(0), pair_rotation(0)}, form);
    o.require(one.order == 6, "one pair order " + str(one.order));
    std::vector<ProjectiveMatrix> gens;
    for (unsigned i = 0; i < 3; ++i) {
        gens.push_back(pair_swap(i));
        gens.push_back(pair_rotation(i));
    }
    const auto all = automorphism_subgroup(gens, form);
    o.require(all.order == 216 && all.elements_checked == 216, "three pair order " + str(all.order));
}

/// Product in F_p[t]/(m) by schoolbook multiplication, independent of the
/// log tables.
FiniteField::Rep slow_product(const FiniteField& f, FiniteField::Rep a, FiniteField::Rep b)
{
    const auto p = f.characteristic();
    const auto& m = f.modulus();
    const auto ca = f.coefficients(a), cb = f.coefficients(b);
    std::vector<std::uint64_t> prod(ca.size() + cb.size(), 0);
    for (std::size_t i = 0; i < ca.size(); ++i)
        for (std::size_t j = 0; j < cb.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p;
    const std::size_t k = m.size() - 1;
    for (std::size_t d = prod.size(); d-- > k;) {
        const auto c = prod[d];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * m[i]) % p;
    }
    std::vector<std::uint32_t> out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return f.from_coefficients(out);
}

void property_criterion(Outcome& o)
{
    const auto s = builtin_variety("S"), x = builtin_variety("X"), fermat = builtin_variety("fermat");
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
        o.require(count_points_generic(s, p).count == count_S_fibered(p).count, "S oracles differ at p=" + str(p));
        o.require(count_points_generic(x, p).count == count_pairsum_convolution(p).count,
                  "X oracles differ at p=" + str(p));
        o.require(count_points_generic(fermat, p).count == count_fermat_cubic(p).count,
                  "fermat oracles differ at p=" + str(p));
    }
    o.require(count_points_generic(s, 5, 2).count == count_S_fibered(5, 2).count, "S oracles differ over F_25");

    for (std::uint32_t p = 5; p <= 47; ++p) {
        if (!is_prime(p)) continue;
        for (unsigned k = 1; k <= 2; ++k) {
            if (k == 2 && p * p > 49) break;
            const auto f = FiniteField::make(p, k);
            const auto q = f->order();
            for (FiniteField::Rep a = 0; a < q; ++a) {
                if (a != 0) o.require(f->mul(a, f->inv(a)) == 1, "inverse fails in F_" + str(q));
                o.require(f->add(a, f->neg(a)) == 0, "negation fails in F_" + str(q));
                for (FiniteField::Rep b = 0; b < q; ++b) {
                    const auto ab = f->mul(a, b);
                    o.require(ab == slow_product(*f, a, b), "product table wrong in F_" + str(q));
                    o.require(ab == f->mul(b, a) && f->add(a, b) == f->add(b, a), "commutativity in F_" + str(q));
                    for (FiniteField::Rep c = 0; c < q; ++c) {
                        o.require(f->mul(a, f->add(b, c)) == f->add(ab, f->mul(a, c)),
                                  "distributivity in F_" + str(q));
                        o.require(f->mul(ab, c) == f->mul(a, f->mul(b, c)), "associativity in F_" + str(q));
                        o.require(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)),
                                  "additive associativity in F_" + str(q));
                    }
                }
            }
        }
    }

    for (unsigned n : {3u, 4u})
        for (std::uint32_t q : {2u, 3u}) {
            std::set<std::vector<std::int64_t>> image;
            for (const auto& pt : grassmannian_points(1, n, q)) image.insert(pt.pluecker.coords);
            const auto rel = pluecker_relations(1, n);
            const auto m = pluecker_indices(1, n).size();
            std::vector<std::int64_t> c(m, 0);
            for (;;) {
                std::size_t i = 0;
                while (i < m && ++c[i] == static_cast<std::int64_t>(q)) c[i++] = 0;
                if (i == m) break;
                const PlueckerVector v{1, n, q, c};
                if (v.normalized() != v) continue;
                bool sat = true;
                for (const auto& r : rel) sat = sat && r.eval_mod(c, q) == 0;
                o.require(sat == (image.count(c) == 1),
                          "relations and enumeration disagree for Gr(1," + str(n) + ") over F_" + str(q));
            }
        }

    for (std::uint32_t p = 5; p <= 200; ++p)
        if (is_prime(p)) o.require(std::abs(ap_base(p)) <= 2 * static_cast<std::int64_t>(p), "Hasse bound at " + str(p));
}

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    Body body;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "surface point-count table", 5, table_counts_criterion},
        {2, "trace residues", 5, residue_criterion},
        {3, "Fermat and fourfold counts at p=7", 1, fermat_criterion},
        {4, "fourfold identity at p=13 with generic oracle", 60, second_prime_criterion},
        {5, "form identification and dual a_p oracles", 5, identification_criterion},
        {6, "Hilbert square identity at p=7", 120, hilbert_criterion},
        {7, "algebraic trace and zeta reconstruction", 5, algebraic_trace_criterion},
        {8, "maximal linear subspaces of Grassmannians", 60, grassmannian_criterion},
        {9, "Pfaffian map identity and automorphism subgroups", 5, symbolic_criterion},
        {10, "property suites", 120, property_criterion},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.limit_seconds;
        if (o.ok && !in_time) o.detail = "over the time limit";
        const bool pass = o.ok && in_time;
        failures += !pass;
        std::printf("%s  criterion %2d  %-50s %8.3fs / %gs%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                    c.limit_seconds, o.detail.empty() ? "" : "  ", o.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
