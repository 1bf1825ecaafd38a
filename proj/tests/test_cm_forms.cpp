#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "cfz/cm_forms.hpp"
#include "cfz/error.hpp"
#include "cfz/finite_field.hpp"

using namespace cfz;

using Residues = std::vector<std::pair<std::uint32_t, std::int64_t>>;

namespace {
const Residues table_residues = {{7, 1}, {13, 12}, {19, 11}, {31, 16}, {37, 10}};
} // namespace

TEST_CASE("eisenstein arithmetic")
{
    const auto w = EisensteinInt::omega();
    CHECK(w * w * w == EisensteinInt{1, 0});
    CHECK(w * w == EisensteinInt{-1, -1});
    CHECK(EisensteinInt::omega_power(4) == w);
    CHECK(w.conj() == w * w);
    const EisensteinInt z{3, 1};
    CHECK(z.norm() == 7);
    CHECK((z * z.conj()) == EisensteinInt{7, 0});
    CHECK(z.trace() == 5);
    // w -> 2 mod 7
    CHECK(w.reduce(2, 7) == 2);
    CHECK(EisensteinInt{-13, 0}.reduce(2, 7) == 1);
}

TEST_CASE("cornacchia")
{
    const auto s7 = cornacchia_4p(7);
    CHECK(s7.L == 1);
    CHECK(s7.M == 1);
    const auto s31 = cornacchia_4p(31);
    CHECK(s31.L == 4);
    CHECK(s31.M == 2);
    const auto s37 = cornacchia_4p(37);
    CHECK(s37.L == 11);
    CHECK(s37.M == 1);
    CHECK_THROWS_WITH_AS(cornacchia_4p(3), doctest::Contains("ramified"), DomainError);
    CHECK_THROWS_WITH_AS(cornacchia_4p(5), doctest::Contains("inert prime"), DomainError);
    CHECK_THROWS_AS(cornacchia_4p(2), DomainError);
}

TEST_CASE("a_p values")
{
    CHECK(ap_base(7) == -13);
    CHECK(ap_base(13) == -1);
    CHECK(ap_base(19) == 11);
    CHECK(ap_base(31) == -46);
    CHECK(ap_base(37) == 47);
    for (std::uint32_t p : {5u, 11u, 17u, 23u, 29u}) CHECK(ap_base(p) == 0);
    CHECK(primary_prime_above(7).norm() == 7);
}

TEST_CASE("two a_p routes agree and respect the Hasse bound")
{
    int split = 0;
    for (std::uint32_t p = 5; p <= 200; ++p) {
        if (!is_prime(p)) continue;
        const std::int64_t a = ap_base(p);
        CHECK(std::abs(a) <= 2 * static_cast<std::int64_t>(p));
        if (p % 3 != 1) continue;
        ++split;
        CHECK(ap_via_eisenstein(p) == a);
        const auto pi = primary_prime_above(p);
        CHECK(pi.b % 3 == 0);
        CHECK(((pi.a % 3) + 3) % 3 != 0);
        // a^2 = (2p)^2 - 27 (LM)^2, so 4p^2 - a^2 is 27 times a square
        const auto s = cornacchia_4p(p);
        CHECK(4 * static_cast<std::int64_t>(p) * p - a * a == 27 * s.L * s.L * s.M * s.M);
    }
    CHECK(split == 21);
}

TEST_CASE("cubic character mod 9")
{
    CHECK(cubic_character(2) == EisensteinInt::omega());
    CHECK(cubic_character(1) == EisensteinInt{1, 0});
    CHECK(cubic_character(-1) == EisensteinInt{1, 0});
    CHECK(cubic_character(7) == EisensteinInt::omega());
    CHECK_THROWS_AS(cubic_character(6), DomainError);
    for (std::int64_t a = 1; a < 40; ++a)
        for (std::int64_t b = 1; b < 40; ++b) {
            if (a % 3 == 0 || b % 3 == 0) continue;
            CHECK(cubic_character(a * b) == cubic_character(a) * cubic_character(b));
            CHECK(cubic_character(a + 9) == cubic_character(a));
        }
}

TEST_CASE("twists")
{
    CHECK(twisted_ap(7, 0) == EisensteinInt{-13, 0});
    CHECK(twisted_ap(7, 1) == -13 * EisensteinInt::omega());
    for (std::uint32_t p : {7u, 13u, 19u, 31u, 37u, 43u}) {
        CHECK(twisted_ap(p, 2) == twisted_ap(p, 1).conj());
        CHECK(twisted_ap(p, 1).norm() == ap_base(p) * ap_base(p));
    }
    CHECK(twisted_ap(5, 1) == EisensteinInt{});
    CHECK_THROWS_AS(twisted_ap(7, 3), DomainError);
    CHECK(cube_roots_of_unity(7) == std::vector<std::int64_t>{2, 4});
    CHECK(cube_roots_of_unity(5).empty());
}

TEST_CASE("identify the table residues")
{
    const auto id = identify_form(table_residues);
    CHECK(id.status == Identification::Status::unique);
    REQUIRE(id.match);
    CHECK(*id.match == 0);
    CHECK(id.checked_primes == std::vector<std::uint32_t>{7, 13, 19, 31, 37});

    const auto ex = identify_form(table_residues, EmbeddingPolicy::existential);
    CHECK(std::find(ex.candidates.begin(), ex.candidates.end(), 0u) != ex.candidates.end());

    auto shuffled = table_residues;
    std::reverse(shuffled.begin(), shuffled.end());
    std::rotate(shuffled.begin(), shuffled.begin() + 2, shuffled.end());
    CHECK(to_json(identify_form(shuffled)) == to_json(id));
}

TEST_CASE("identify edge cases")
{
    const Residues inert = {{5, 0}, {11, 0}};
    const auto amb = identify_form(inert);
    CHECK(amb.status == Identification::Status::ambiguous);
    CHECK_FALSE(amb.match);
    CHECK(amb.candidates.size() == 3);
    CHECK(to_json(amb).find("ambiguous") != std::string::npos);

    // synthetic residue of -13 w under w -> 2
    const Residues twisted = {{7, 2}};
    const auto one = identify_form(twisted);
    REQUIRE(one.match);
    CHECK(*one.match == 1);
    CHECK(one.embedding_choices.at(7) == 2);

    const Residues nonsense = {{7, 3}};
    CHECK(identify_form(nonsense).status == Identification::Status::no_match);

    const Residues conflicting = {{7, 1}, {7, 2}};
    CHECK_THROWS_AS(identify_form(conflicting), DomainError);
    const Residues out_of_range = {{7, 9}};
    CHECK_THROWS_AS(identify_form(out_of_range), DomainError);
    const Residues bad = {{9, 1}};
    CHECK_THROWS_AS(identify_form(bad), DomainError);
}

TEST_CASE("identify json shape")
{
    const auto j = to_json(identify_form(table_residues));
    CHECK(j.rfind("{\"match\":0,\"checked_primes\":[7,13,19,31,37],\"embedding_choices\":{", 0) == 0);
    CHECK(j.find("\"status\":\"unique\"") != std::string::npos);
}

TEST_CASE("fermat comparison")
{
    const auto c7 = fermat_comparison(7);
    CHECK(c7.fermat == 3690);
    CHECK(c7.fourfold == 3690);
    CHECK(fermat_comparison(13).fermat == 34308);
    CHECK_THROWS_AS(fermat_comparison(5), DomainError);
}
