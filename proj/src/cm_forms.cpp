#include "cfz/cm_forms.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "cfz/error.hpp"
#include "cfz/finite_field.hpp"
#include "cfz/point_count.hpp"

namespace cfz {

CornacchiaSolution cornacchia_4p(std::uint32_t p)
{
    if (p == 3) throw DomainError("3 is ramified in Q(sqrt(-3))");
    require_good_prime(p);
    if (p % 3 == 2) throw DomainError("inert prime " + std::to_string(p) + ": no solution to 4p = L^2 + 27M^2");
    const std::int64_t four_p = 4 * static_cast<std::int64_t>(p);
    for (std::int64_t m = 1; 27 * m * m < four_p; ++m) {
        const std::int64_t rest = four_p - 27 * m * m;
        auto l = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(rest))));
        while (l * l > rest) --l;
        while ((l + 1) * (l + 1) <= rest) ++l;
        if (l > 0 && l * l == rest) return {p, l, m};
    }
    throw Error("no representation 4p = L^2 + 27M^2 for p=" + std::to_string(p));
}

std::int64_t ap_base(std::uint32_t p)
{
    require_good_prime(p);
    if (p % 3 == 2) return 0;
    const auto s = cornacchia_4p(p);
    return (s.L * s.L - 27 * s.M * s.M) / 2;
}

EisensteinInt primary_prime_above(std::uint32_t p)
{
    require_good_prime(p);
    if (p % 3 != 1) throw DomainError(std::to_string(p) + " does not split in Z[w]");
    const std::int64_t bound = 2 * static_cast<std::int64_t>(std::sqrt(static_cast<double>(p))) + 2;
    for (std::int64_t a = -bound; a <= bound; ++a)
        for (std::int64_t b = -bound; b <= bound; ++b) {
            const EisensteinInt pi{a, b};
            if (pi.norm() != p) continue;
            for (unsigned e = 0; e < 3; ++e)
                for (int s : {1, -1}) {
                    const EisensteinInt u = s * (EisensteinInt::omega_power(e) * pi);
                    const std::int64_t ra = ((u.a % 3) + 3) % 3;
                    if (u.b % 3 == 0 && ra != 0) return u;
                }
        }
    throw Error("no element of norm " + std::to_string(p) + " found");
}

std::int64_t ap_via_eisenstein(std::uint32_t p)
{
    const auto pi = primary_prime_above(p);
    const auto sq = pi * pi;
    const auto sum = sq + sq.conj();
    if (!sum.is_rational()) throw Error("pi^2 + conj(pi)^2 is not rational");
    const std::int64_t via_pi = sum.a;
    const std::int64_t base = ap_base(p);
    if (via_pi != base)
        throw VerificationError("a_p mismatch at p=" + std::to_string(p) + ": Cornacchia gives " +
                                std::to_string(base) + ", Eisenstein prime gives " + std::to_string(via_pi));
    return via_pi;
}

unsigned cubic_character_exponent(std::int64_t n)
{
    const std::int64_t r = ((n % 9) + 9) % 9;
    if (r % 3 == 0) throw DomainError("cubic character undefined at multiples of 3");
    // powers of 2 mod 9: 1, 2, 4, 8, 7, 5
    static constexpr int dlog[9] = {-1, 0, 1, -1, 2, 5, -1, 4, 3};
    return static_cast<unsigned>(dlog[r] % 3);
}

EisensteinInt cubic_character(std::int64_t n) { return EisensteinInt::omega_power(cubic_character_exponent(n)); }

EisensteinInt twisted_ap(std::uint32_t p, unsigned twist_index)
{
    if (twist_index > 2) throw DomainError("twist index must be 0, 1 or 2");
    const std::int64_t a = ap_base(p);
    return a * EisensteinInt::omega_power(cubic_character_exponent(p) * twist_index);
}

std::vector<std::int64_t> cube_roots_of_unity(std::uint32_t p)
{
    std::vector<std::int64_t> out;
    if (p % 3 != 1) return out;
    for (std::int64_t c = 2; c < p; ++c)
        if ((c * c + c + 1) % p == 0) out.push_back(c);
    return out;
}

Identification identify_form(std::span<const std::pair<std::uint32_t, std::int64_t>> residues,
                             EmbeddingPolicy policy)
{
    std::map<std::uint32_t, std::int64_t> data;
    for (const auto& [p, r] : residues) {
        require_good_prime(p);
        if (r < 0 || r >= static_cast<std::int64_t>(p))
            throw DomainError("residue " + std::to_string(r) + " out of range for p=" + std::to_string(p));
        auto [it, inserted] = data.emplace(p, r);
        if (!inserted && it->second != r) throw DomainError("conflicting residues for p=" + std::to_string(p));
    }
    if (data.empty()) throw DomainError("no residues supplied");

    Identification id;
    for (const auto& [p, r] : data) id.checked_primes.push_back(p);

    for (unsigned idx = 0; idx < 3; ++idx) {
        std::map<std::uint32_t, std::int64_t> choices;
        bool fits = true;
        for (const auto& [p, r] : data) {
            const auto value = twisted_ap(p, idx);
            const auto roots = cube_roots_of_unity(p);
            if (roots.empty()) {
                // inert: the coefficient is 0
                if (!(value == EisensteinInt{}) || r != 0) fits = false;
            } else {
                std::vector<std::int64_t> allowed = roots;
                if (policy == EmbeddingPolicy::declared) allowed.resize(1);
                auto hit = std::find_if(allowed.begin(), allowed.end(),
                                        [&](std::int64_t c) { return value.reduce(c, p) == r; });
                if (hit == allowed.end())
                    fits = false;
                else
                    choices[p] = *hit;
            }
            if (!fits) break;
        }
        if (fits) {
            id.candidates.push_back(idx);
            if (id.candidates.size() == 1) id.embedding_choices = choices;
        }
    }
    if (id.candidates.size() == 1) {
        id.status = Identification::Status::unique;
        id.match = id.candidates.front();
    } else {
        id.status = id.candidates.empty() ? Identification::Status::no_match : Identification::Status::ambiguous;
        id.embedding_choices.clear();
    }
    return id;
}

std::string to_json(const Identification& id)
{
    nlohmann::ordered_json j;
    j["match"] = id.match ? nlohmann::ordered_json(*id.match) : nlohmann::ordered_json(nullptr);
    j["checked_primes"] = id.checked_primes;
    nlohmann::ordered_json emb = nlohmann::ordered_json::object();
    for (const auto& [p, c] : id.embedding_choices) emb[std::to_string(p)] = c;
    j["embedding_choices"] = emb;
    switch (id.status) {
    case Identification::Status::unique: j["status"] = "unique"; break;
    case Identification::Status::ambiguous: j["status"] = "ambiguous, supply more primes"; break;
    case Identification::Status::no_match: j["status"] = "no match"; break;
    }
    j["candidates"] = id.candidates;
    return j.dump();
}

FermatComparison fermat_comparison(std::uint32_t p)
{
    require_good_prime(p);
    if (p % 3 != 1) throw DomainError("fermat_comparison needs p = 1 mod 3, got " + std::to_string(p));
    FermatComparison c{p, count_fermat_cubic(p).count, count_pairsum_convolution(p).count};
    if (c.fermat != c.fourfold)
        throw VerificationError("at p=" + std::to_string(p) + " the Fermat cubic has " + std::to_string(c.fermat) +
                                " points but X has " + std::to_string(c.fourfold));
    return c;
}

} // namespace cfz
