#include "cfz/zeta.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include <nlohmann/json.hpp>

namespace cfz {

namespace {

std::int64_t pow_int(std::int64_t base, unsigned e)
{
    std::int64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (__builtin_mul_overflow(r, base, &r)) throw Error("integer overflow");
    }
    return r;
}

std::int64_t narrow(__int128 v)
{
    if (v > INT64_MAX || v < INT64_MIN) throw Error("integer overflow");
    return static_cast<std::int64_t>(v);
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

} // namespace

TraceRecord trace_from_count(std::int64_t n1, std::uint32_t p)
{
    require_good_prime(p);
    const std::int64_t pp = p;
    TraceRecord rec;
    rec.p = p;
    rec.t2 = n1 - 1 - pp * pp;
    if (std::llabs(rec.t2) > 22 * pp)
        throw VerificationError("count " + std::to_string(n1) + " at p=" + std::to_string(p) +
                                " gives |t2| = " + std::to_string(std::llabs(rec.t2)) +
                                " > 22p; not the count of a K3 surface");
    rec.residue = mod_floor(n1 - 1, pp);
    return rec;
}

bool residue_zero_check(std::uint32_t p, std::int64_t n1)
{
    require_good_prime(p);
    if (p % 3 != 2) throw DomainError("residue_zero_check needs p = 2 mod 3, got " + std::to_string(p));
    return mod_floor(n1 - 1, p) == 0;
}

std::int64_t hilbert_square_count(std::int64_t n1, std::int64_t n2, std::uint32_t p)
{
    require_good_prime(p);
    const __int128 sum = static_cast<__int128>(n1) * n1 + n2;
    if (sum % 2 != 0)
        throw VerificationError("N1^2 + N2 is odd for N1=" + std::to_string(n1) + ", N2=" + std::to_string(n2) +
                                "; these cannot be counts of one variety over F_p and F_p^2");
    return narrow(sum / 2 + static_cast<__int128>(p) * n1);
}

HilbertOrbitCount hilbert_square_orbit_count(std::span<const std::vector<FiniteField::Rep>> points,
                                             const FiniteField& f, std::span<const std::size_t> block_sizes)
{
    if (f.degree() != 2) throw DomainError("orbit count needs the quadratic extension field");
    std::set<std::vector<FiniteField::Rep>> all(points.begin(), points.end());
    if (all.size() != points.size()) throw DomainError("duplicate points in list");

    auto frob = [&](const std::vector<FiniteField::Rep>& pt) {
        std::vector<FiniteField::Rep> out(pt.size());
        std::transform(pt.begin(), pt.end(), out.begin(), [&](auto c) { return f.frobenius(c); });
        std::size_t off = 0;
        for (auto s : block_sizes) {
            normalize_projective(f, std::span(out).subspan(off, s));
            off += s;
        }
        return out;
    };

    HilbertOrbitCount r;
    std::set<std::vector<FiniteField::Rep>> paired;
    for (const auto& pt : all) {
        const auto img = frob(pt);
        if (!all.count(img)) throw VerificationError("point list is not Frobenius-stable");
        if (img == pt) {
            ++r.rational_points;
        } else if (!paired.count(pt)) {
            paired.insert(pt);
            paired.insert(img);
            ++r.conjugate_pairs;
        }
    }
    // unordered pairs of rational points, diagonal included
    r.stable_pairs = r.rational_points * (r.rational_points + 1) / 2 + r.conjugate_pairs;
    r.total = r.stable_pairs + static_cast<std::int64_t>(f.characteristic()) * r.rational_points;
    return r;
}

std::int64_t fourfold_count_from_surface(std::int64_t n1, std::uint32_t p)
{
    require_good_prime(p);
    const std::int64_t pp = p;
    return 1 + pp * pp + pow_int(pp, 4) + pp * n1;
}

std::int64_t algebraic_trace_split(std::int64_t t2, std::int64_t a_p, std::uint32_t p)
{
    require_good_prime(p);
    const std::int64_t t_alg = t2 - a_p;
    if (t_alg % static_cast<std::int64_t>(p) != 0)
        throw VerificationError("algebraic trace " + std::to_string(t_alg) + " is not divisible by p=" +
                                std::to_string(p));
    if (std::llabs(t_alg / static_cast<std::int64_t>(p)) > 20)
        throw VerificationError("algebraic trace " + std::to_string(t_alg) + " exceeds 20p");
    return t_alg;
}

LocalFactor local_factor_cm(std::int64_t a_p, std::uint32_t p, int tate_shift)
{
    require_good_prime(p);
    const std::int64_t pp = p;
    if (std::llabs(a_p) > 2 * pp) throw DomainError("|a_p| exceeds the weight-3 bound 2p");
    if (tate_shift < 0) throw DomainError("negative Tate shift");
    const std::int64_t scale = pow_int(pp, static_cast<unsigned>(tate_shift));
    return {p, 2 + 2 * tate_shift, {1, -scale * a_p, pow_int(pp, 2 + 2 * static_cast<unsigned>(tate_shift))}};
}

LocalFactor linear_factor(std::uint32_t p, int w, int sign)
{
    return {p, 2 * w, {1, -sign * pow_int(p, static_cast<unsigned>(w))}};
}

std::int64_t FrobeniusPiece::trace(std::uint32_t p) const
{
    if (kind == Kind::tate) return sign * static_cast<std::int64_t>(dimension) * pow_int(p, static_cast<unsigned>(weight));
    return pow_int(p, static_cast<unsigned>(tate_shift)) * a_p;
}

std::pair<LocalFactor, unsigned> FrobeniusPiece::factor(std::uint32_t p) const
{
    if (kind == Kind::tate) return {linear_factor(p, weight, sign), dimension};
    return {local_factor_cm(a_p, p, tate_shift), 1};
}

unsigned CohomologyDecomposition::dimension() const
{
    unsigned d = 0;
    for (const auto& piece : pieces) d += piece.dimension;
    return d;
}

std::int64_t CohomologyDecomposition::trace(std::uint32_t p) const
{
    std::int64_t t = 0;
    for (const auto& piece : pieces) t += piece.trace(p);
    return t;
}

NeronSeveriModel NeronSeveriModel::from_fixed(int ns_fixed)
{
    if (ns_fixed < -20 || ns_fixed > 20 || (ns_fixed + 20) % 2 != 0)
        throw DomainError("inconsistent ns_fixed=" + std::to_string(ns_fixed) +
                          ": need an even value in [-20, 20] so that m+ + m- = 20");
    return {(20 + ns_fixed) / 2, (20 - ns_fixed) / 2};
}

namespace {

CohomologyDecomposition middle_decomposition(std::string group, int shift, std::int64_t a_p, NeronSeveriModel ns)
{
    using K = FrobeniusPiece::Kind;
    const int w = 1 + shift;
    CohomologyDecomposition d{std::move(group), {}};
    if (ns.m_plus) d.pieces.push_back({"NS+", static_cast<unsigned>(ns.m_plus), K::tate, w, 1, 0, 0});
    if (ns.m_minus) d.pieces.push_back({"NS-", static_cast<unsigned>(ns.m_minus), K::tate, w, -1, 0, 0});
    d.pieces.push_back({"T", 2, K::cm_form, 0, 1, a_p, shift});
    d.pieces.push_back({"Delta", 1, K::tate, w, 1, 0, 0});
    return d;
}

} // namespace

CohomologyDecomposition hilbert_square_h2(std::int64_t a_p, NeronSeveriModel ns)
{
    return middle_decomposition("H2(S[2])", 0, a_p, ns);
}

CohomologyDecomposition fourfold_h4(std::int64_t a_p, NeronSeveriModel ns)
{
    return middle_decomposition("H4(X)", 1, a_p, ns);
}

std::vector<FactorTerm> assemble_fourfold_factors(std::uint32_t p, std::int64_t a_p, int ns_fixed)
{
    require_good_prime(p);
    const auto ns = NeronSeveriModel::from_fixed(ns_fixed);
    std::vector<FactorTerm> out;
    out.push_back({0, linear_factor(p, 0), -1});
    out.push_back({2, linear_factor(p, 1), -1});
    for (const auto& piece : fourfold_h4(a_p, ns).pieces) {
        auto [f, mult] = piece.factor(p);
        out.push_back({4, std::move(f), -static_cast<int>(mult)});
    }
    out.push_back({6, linear_factor(p, 3), -1});
    out.push_back({8, linear_factor(p, 4), -1});
    return out;
}

std::vector<std::int64_t> inverse_root_power_sums(const LocalFactor& f, unsigned k)
{
    if (f.coeffs.empty() || f.coeffs[0] != 1) throw DomainError("local factor must have constant term 1");
    auto c = [&](unsigned i) -> __int128 { return i < f.coeffs.size() ? f.coeffs[i] : 0; };
    // Newton: s_j = -j c_j - sum_{i=1}^{j-1} c_i s_{j-i}
    std::vector<std::int64_t> s(k + 1, 0);
    for (unsigned j = 1; j <= k; ++j) {
        __int128 v = -static_cast<__int128>(j) * c(j);
        for (unsigned i = 1; i < j; ++i) v -= c(i) * s[j - i];
        s[j] = narrow(v);
    }
    return {s.begin() + 1, s.end()};
}

std::int64_t reconstruct_count(std::span<const FactorTerm> factors, unsigned k)
{
    if (k == 0) throw DomainError("k must be positive");
    // log Z = sum e log P, and -log P = sum_j s_j T^j / j
    __int128 n = 0;
    for (const auto& t : factors) n -= static_cast<__int128>(t.exponent) * inverse_root_power_sums(t.factor, k)[k - 1];
    return narrow(n);
}

std::string to_json(const LocalFactor& f)
{
    nlohmann::ordered_json j;
    j["p"] = f.p;
    j["weight"] = f.weight;
    j["coeffs"] = f.coeffs;
    return j.dump();
}

} // namespace cfz
