#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cfz/eisenstein.hpp"

namespace cfz {

/// 4p = L^2 + 27 M^2 with L, M > 0.
struct CornacchiaSolution {
    std::uint32_t p = 0;
    std::int64_t L = 0;
    std::int64_t M = 0;
};

/// Throws DomainError for p = 3 ("ramified") and p = 2 mod 3 ("inert prime").
CornacchiaSolution cornacchia_4p(std::uint32_t p);

/// Coefficient of the level-27 weight-3 CM newform at a good prime:
/// 0 for p = 2 mod 3, (L^2 - 27 M^2)/2 otherwise.
std::int64_t ap_base(std::uint32_t p);

/// The primary prime pi = a + b w (b = 0 mod 3, a = +-1 mod 3) of norm p.
EisensteinInt primary_prime_above(std::uint32_t p);

/// pi^2 + conj(pi)^2 computed in Z[w]; must agree with ap_base.
std::int64_t ap_via_eisenstein(std::uint32_t p);

/// Cubic Dirichlet character of conductor 9 with chi(2) = w: chi(n) = w^e.
/// Throws DomainError if 3 | n.
unsigned cubic_character_exponent(std::int64_t n);
EisensteinInt cubic_character(std::int64_t n);

/// ap_base(p) * chi(p)^twist_index
EisensteinInt twisted_ap(std::uint32_t p, unsigned twist_index);

/// Nontrivial cube roots of unity mod p, ascending (empty unless p = 1 mod 3).
std::vector<std::int64_t> cube_roots_of_unity(std::uint32_t p);

/// How w is sent into F_p when comparing Z[w]-valued coefficients with residues.
enum class EmbeddingPolicy {
    declared,     ///< w -> the least nontrivial cube root of unity mod p
    existential,  ///< any embedding, chosen independently per prime
};

struct Identification {
    enum class Status { unique, ambiguous, no_match };

    Status status = Status::no_match;
    std::optional<unsigned> match;
    std::vector<unsigned> candidates;                    ///< every twist index that fits
    std::vector<std::uint32_t> checked_primes;           ///< ascending
    std::map<std::uint32_t, std::int64_t> embedding_choices;  ///< image of w per split prime, for `match`
};

/// Which of the three candidate forms (trivial, chi, chi^2 twist) has
/// coefficients congruent to the given residues.
Identification identify_form(std::span<const std::pair<std::uint32_t, std::int64_t>> residues,
                             EmbeddingPolicy policy = EmbeddingPolicy::declared);

/// {"match", "checked_primes", "embedding_choices", "status", "candidates"}
std::string to_json(const Identification& id);

struct FermatComparison {
    std::uint32_t p = 0;
    std::uint64_t fermat = 0;
    std::uint64_t fourfold = 0;
};

/// Checks #X'(F_p) = #X(F_p) for p = 1 mod 3; throws VerificationError with
/// both counts on mismatch and DomainError for other p.
FermatComparison fermat_comparison(std::uint32_t p);

} // namespace cfz
