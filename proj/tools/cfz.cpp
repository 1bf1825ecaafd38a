// cfz: point counts, trace tables, form identification, zeta factors and
// verification suites from the command line.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cfz/cm_forms.hpp"
#include "cfz/count_cache.hpp"
#include "cfz/error.hpp"
#include "cfz/finite_field.hpp"
#include "cfz/grassmannian.hpp"
#include "cfz/lattice.hpp"
#include "cfz/point_count.hpp"
#include "cfz/symbolic_checks.hpp"
#include "cfz/zeta.hpp"

using namespace cfz;
using json = nlohmann::ordered_json;

namespace {

enum ExitCode { ok = 0, verification_failed = 1, usage = 2 };

struct Config {
    std::string variety = "builtin:S";
    std::string primes;
    unsigned ext = 1;
    std::string format;
    bool no_cache = false;
    std::uint64_t budget = 1'000'000'000;
    unsigned workers = 1;
    std::vector<std::string> overrides;
    std::string embedding = "declared";
    std::uint32_t prime = 0;
    std::optional<int> ns_fixed;
    std::string suite = "all";
    unsigned k = 1, n = 4, q = 2;
    bool relations = false;
    std::optional<std::int64_t> d;
    std::string gram;
};

std::int64_t parse_int(const std::string& s)
{
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw ParseError("not an integer: '" + s + "'");
    return v;
}

std::uint32_t parse_prime_value(const std::string& s)
{
    const auto v = parse_int(s);
    if (v < 0 || v > 0xffffffffLL) throw ParseError("prime out of range: " + s);
    return static_cast<std::uint32_t>(v);
}

/// "7,13,19" (each must be a good prime) or "7..40" (good primes in range).
std::vector<std::uint32_t> parse_primes(const std::string& spec)
{
    if (spec.empty()) throw ParseError("--primes is required");
    std::set<std::uint32_t> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dots = item.find("..");
        if (dots != std::string::npos) {
            const auto lo = parse_prime_value(item.substr(0, dots));
            const auto hi = parse_prime_value(item.substr(dots + 2));
            if (lo > hi) throw ParseError("empty prime range " + item);
            for (std::uint32_t p = std::max<std::uint32_t>(lo, 5); p <= hi; ++p)
                if (is_prime(p)) out.insert(p);
        } else {
            const auto p = parse_prime_value(item);
            require_good_prime(p);
            out.insert(p);
        }
    }
    if (out.empty()) throw ParseError("no good primes in '" + spec + "'");
    return {out.begin(), out.end()};
}

struct VarietyChoice {
    VarietySpec spec;
    std::string builtin; ///< empty for file varieties
};

VarietyChoice load_variety(const std::string& sel)
{
    constexpr std::string_view prefix = "builtin:";
    if (sel.rfind(prefix, 0) == 0) {
        const auto name = sel.substr(prefix.size());
        return {builtin_variety(name), name};
    }
    return {load_variety_file(sel), ""};
}

class Counter {
public:
    explicit Counter(const Config& cfg) : cfg_(cfg)
    {
        if (!cfg.no_cache) cache_.emplace(CountCache::default_path());
    }

    CountRecord count(const VarietyChoice& v, std::uint32_t p, unsigned k) const
    {
        require_good_prime(p);
        const auto key = spec_key(v.spec);
        if (cache_)
            if (auto hit = cache_->lookup(key, p, k)) return *hit;
        auto rec = compute(v, p, k);
        if (cache_) cache_->append(key, rec);
        return rec;
    }

private:
    CountRecord compute(const VarietyChoice& v, std::uint32_t p, unsigned k) const
    {
        if (v.builtin == "S" && k <= 2) return count_S_fibered(p, k);
        if (v.builtin == "X" && k == 1) return count_pairsum_convolution(p);
        if (v.builtin == "fermat" && k == 1) return count_fermat_cubic(p);
        return count_points_generic(v.spec, p, k, {cfg_.budget, cfg_.workers});
    }

    const Config& cfg_;
    std::optional<CountCache> cache_;
};

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int cmd_count(const Config& cfg)
{
    const auto v = load_variety(cfg.variety);
    const auto primes = parse_primes(cfg.primes);
    const Counter counter(cfg);
    const bool tsv = cfg.format == "tsv";
    if (tsv) std::cout << "variety\tp\tk\tcount\tmethod\n";
    for (auto p : primes) {
        const auto r = counter.count(v, p, cfg.ext);
        if (tsv) {
            std::cout << r.variety << '\t' << r.p << '\t' << r.k << '\t' << r.count << '\t' << to_string(r.method)
                      << '\n';
        } else {
            emit(json{{"variety", r.variety}, {"p", r.p}, {"k", r.k}, {"count", r.count},
                      {"method", to_string(r.method)}});
        }
    }
    return ok;
}

struct TraceRow {
    std::uint32_t p;
    std::int64_t n1;
    std::int64_t residue;
    std::int64_t a_p;
    bool match;
};

TraceRow trace_row(const Counter& counter, std::uint32_t p)
{
    const VarietyChoice s{builtin_variety("S"), "S"};
    const auto n1 = static_cast<std::int64_t>(counter.count(s, p, 1).count);
    const auto tr = trace_from_count(n1, p);
    const auto a = ap_base(p);
    return {p, n1, tr.residue, a, tr.residue == mod(a, p)};
}

int cmd_trace_table(const Config& cfg)
{
    const auto primes = parse_primes(cfg.primes);
    const Counter counter(cfg);
    bool all = true;
    if (cfg.format == "json") {
        for (auto p : primes) {
            const auto r = trace_row(counter, p);
            all = all && r.match;
            emit(json{{"p", r.p}, {"N1", r.n1}, {"residue", r.residue}, {"a_p", r.a_p}, {"match", r.match}});
        }
    } else {
        std::cout << "p\tN1\tresidue\ta_p\tmatch\n";
        for (auto p : primes) {
            const auto r = trace_row(counter, p);
            all = all && r.match;
            std::cout << r.p << '\t' << r.n1 << '\t' << r.residue << '\t' << r.a_p << '\t'
                      << (r.match ? "true" : "false") << '\n';
        }
    }
    return all ? ok : verification_failed;
}

int cmd_identify(const Config& cfg)
{
    const auto primes = parse_primes(cfg.primes);
    const Counter counter(cfg);
    std::map<std::uint32_t, std::int64_t> residues;
    for (auto p : primes) residues[p] = trace_row(counter, p).residue;
    for (const auto& o : cfg.overrides) {
        const auto colon = o.find(':');
        if (colon == std::string::npos) throw ParseError("--residue-override expects p:r, got '" + o + "'");
        const auto p = parse_prime_value(o.substr(0, colon));
        require_good_prime(p);
        residues[p] = parse_int(o.substr(colon + 1));
    }
    EmbeddingPolicy policy;
    if (cfg.embedding == "declared")
        policy = EmbeddingPolicy::declared;
    else if (cfg.embedding == "existential")
        policy = EmbeddingPolicy::existential;
    else
        throw ParseError("--embedding must be declared or existential");

    const std::vector<std::pair<std::uint32_t, std::int64_t>> data(residues.begin(), residues.end());
    const auto id = identify_form(data, policy);
    json j;
    j["twist_index"] = id.match ? json(*id.match) : json(nullptr);
    json res = json::object();
    for (const auto& [p, r] : residues) res[std::to_string(p)] = r;
    j["residues"] = res;
    const auto parsed = json::parse(to_json(id));
    for (const auto& [key, value] : parsed.items())
        if (key != "match") j[key] = value;
    if (cfg.format == "tsv") {
        std::cout << "twist_index\t" << (id.match ? std::to_string(*id.match) : "none") << "\n"
                  << "status\t" << j["status"].get<std::string>() << "\n";
    } else {
        emit(j);
    }
    return id.status == Identification::Status::unique ? ok : verification_failed;
}

json factor_json(const FactorTerm& t)
{
    return json{{"degree", t.degree}, {"exponent", t.exponent}, {"coeffs", t.factor.coeffs},
                {"weight", t.factor.weight}};
}

int cmd_zeta(const Config& cfg)
{
    if (cfg.prime == 0) throw ParseError("--prime is required");
    const auto p = cfg.prime;
    require_good_prime(p);
    const Counter counter(cfg);
    const auto row = trace_row(counter, p);
    const auto t2 = trace_from_count(row.n1, p).t2;

    int ns_fixed = 0;
    std::optional<std::int64_t> t_alg;
    if (p % 3 == 1) {
        t_alg = algebraic_trace_split(t2, row.a_p, p);
        ns_fixed = static_cast<int>(*t_alg / p);
        if (cfg.ns_fixed && *cfg.ns_fixed != ns_fixed) {
            std::cerr << "error: --ns-fixed " << *cfg.ns_fixed << " is inconsistent with the count, which gives "
                      << ns_fixed << "\n";
            return verification_failed;
        }
    } else {
        if (!cfg.ns_fixed) {
            std::cerr << "error: p=" << p
                      << " is inert, the Neron-Severi Frobenius action is not determined here; supply --ns-fixed\n";
            return usage;
        }
        ns_fixed = *cfg.ns_fixed;
    }

    const auto factors = assemble_fourfold_factors(p, row.a_p, ns_fixed);
    const auto reconstructed = reconstruct_count(factors, 1);
    const VarietyChoice x{builtin_variety("X"), "X"};
    const auto direct = static_cast<std::int64_t>(counter.count(x, p, 1).count);

    json j;
    j["p"] = p;
    j["N1"] = row.n1;
    j["t2"] = t2;
    j["a_p"] = row.a_p;
    j["t_alg"] = t_alg ? json(*t_alg) : json(nullptr);
    j["ns_fixed"] = ns_fixed;
    json fs = json::array();
    for (const auto& t : factors) fs.push_back(factor_json(t));
    j["factors"] = fs;
    j["reconstructed_count"] = reconstructed;
    j["direct_count"] = direct;
    j["match"] = reconstructed == direct;
    emit(j);
    if (reconstructed != direct) {
        std::cerr << "error: inconsistent NS input: factors give " << reconstructed << " points, direct count is "
                  << direct << "\n";
        return verification_failed;
    }
    return ok;
}

// verification suites

struct Check {
    std::string name;
    bool passed;
    std::string detail;
};

using Suite = std::vector<Check>;

template <class F>
void run_check(Suite& out, std::string name, F&& f)
{
    try {
        auto [passed, detail] = f();
        out.push_back({std::move(name), passed, std::move(detail)});
    } catch (const std::exception& e) {
        out.push_back({std::move(name), false, e.what()});
    }
}

std::string eq_detail(std::int64_t a, std::int64_t b) { return std::to_string(a) + " vs " + std::to_string(b); }

Suite suite_counts(const Config& cfg, const std::vector<std::uint32_t>& primes)
{
    Suite out;
    const auto s = builtin_variety("S"), x = builtin_variety("X"), fermat = builtin_variety("fermat");
    const CountOptions opts{cfg.budget, cfg.workers};
    for (auto p : primes) {
        const auto ps = std::to_string(p);
        run_check(out, "S generic = fibered at p=" + ps, [&] {
            const auto a = count_points_generic(s, p, 1, opts).count, b = count_S_fibered(p).count;
            return std::pair{a == b, eq_detail(a, b)};
        });
        run_check(out, "X generic = convolution at p=" + ps, [&] {
            const auto a = count_points_generic(x, p, 1, opts).count, b = count_pairsum_convolution(p).count;
            return std::pair{a == b, eq_detail(a, b)};
        });
        run_check(out, "fermat generic = convolution at p=" + ps, [&] {
            const auto a = count_points_generic(fermat, p, 1, opts).count, b = count_fermat_cubic(p).count;
            return std::pair{a == b, eq_detail(a, b)};
        });
    }
    return out;
}

Suite suite_identities(const Config& cfg, const std::vector<std::uint32_t>& primes)
{
    Suite out;
    const Counter counter(cfg);
    const VarietyChoice s{builtin_variety("S"), "S"};
    for (auto p : primes) {
        const auto ps = std::to_string(p);
        const auto n1 = static_cast<std::int64_t>(counter.count(s, p, 1).count);
        run_check(out, "fourfold identity at p=" + ps, [&] {
            const auto a = static_cast<std::int64_t>(count_pairsum_convolution(p).count);
            const auto b = fourfold_count_from_surface(n1, p);
            return std::pair{a == b, eq_detail(a, b)};
        });
        run_check(out, "hilbert square identity at p=" + ps, [&] {
            const auto f = FiniteField::make(p, 2);
            if (enumeration_size(s.spec, f->order()) * 2 > cfg.budget)
                return std::pair{true, std::string("skipped: F_") + std::to_string(f->order()) +
                                           " point list exceeds the budget"};
            const auto pts = list_points_generic(s.spec, f, {cfg.budget, cfg.workers});
            const std::size_t blocks[] = {3, 3};
            const auto orbit = hilbert_square_orbit_count(pts, *f, blocks);
            const auto formula = hilbert_square_count(n1, static_cast<std::int64_t>(pts.size()), p);
            return std::pair{orbit.total == formula, eq_detail(orbit.total, formula)};
        });
        if (p % 3 == 1) {
            run_check(out, "algebraic trace and zeta reconstruction at p=" + ps, [&] {
                const auto t2 = trace_from_count(n1, p).t2;
                const auto a = ap_base(p);
                const auto t_alg = algebraic_trace_split(t2, a, p);
                const auto rec = reconstruct_count(assemble_fourfold_factors(p, a, static_cast<int>(t_alg / p)));
                const auto direct = fourfold_count_from_surface(n1, p);
                return std::pair{rec == direct, "t_alg/p=" + std::to_string(t_alg / p) + ", " + eq_detail(rec, direct)};
            });
        } else {
            run_check(out, "trace is 0 mod p at p=" + ps,
                      [&] { return std::pair{residue_zero_check(p, n1), "N1=" + std::to_string(n1)}; });
        }
    }
    return out;
}

Suite suite_forms()
{
    Suite out;
    run_check(out, "a_p routes agree for split p <= 200", [] {
        int n = 0;
        for (std::uint32_t p = 7; p <= 200; ++p)
            if (is_prime(p) && p % 3 == 1) {
                ap_via_eisenstein(p);
                ++n;
            }
        return std::pair{true, std::to_string(n) + " primes"};
    });
    run_check(out, "Hasse bound |a_p| <= 2p for p <= 200", [] {
        for (std::uint32_t p = 5; p <= 200; ++p)
            if (is_prime(p) && std::abs(ap_base(p)) > 2 * static_cast<std::int64_t>(p))
                return std::pair{false, "p=" + std::to_string(p)};
        return std::pair{true, std::string()};
    });
    run_check(out, "table residues identify the base form", [] {
        const std::vector<std::pair<std::uint32_t, std::int64_t>> r = {
            {7, 1}, {13, 12}, {19, 11}, {31, 16}, {37, 10}};
        const auto id = identify_form(r);
        return std::pair{id.match && *id.match == 0 && id.status == Identification::Status::unique, to_json(id)};
    });
    run_check(out, "fermat comparison at p=7", [] {
        const auto c = fermat_comparison(7);
        return std::pair{c.fermat == 3690, eq_detail(c.fermat, c.fourfold)};
    });
    return out;
}

Suite suite_pluecker()
{
    Suite out;
    for (unsigned n : {3u, 4u})
        for (std::uint32_t q : {2u, 3u})
            run_check(out, "relations cut out Gr(1," + std::to_string(n) + ") over F_" + std::to_string(q), [=] {
                std::set<std::vector<std::int64_t>> image;
                for (const auto& pt : grassmannian_points(1, n, q)) image.insert(pt.pluecker.coords);
                const auto rel = pluecker_relations(1, n);
                const auto m = pluecker_indices(1, n).size();
                std::vector<std::int64_t> c(m, 0);
                std::size_t bad = 0;
                for (;;) {
                    std::size_t i = 0;
                    while (i < m && ++c[i] == static_cast<std::int64_t>(q)) c[i++] = 0;
                    if (i == m) break;
                    PlueckerVector v{1, n, q, c};
                    if (v.normalized() != v) continue;
                    const bool sat = std::all_of(rel.begin(), rel.end(), [&](const auto& r) { return r.eval_mod(c, q) == 0; });
                    bad += sat != (image.count(c) == 1);
                }
                return std::pair{bad == 0, std::to_string(image.size()) + " points"};
            });
    run_check(out, "max linear subspace of Gr(1,4) over F_2", [] {
        const auto r = max_linear_subspace_dim(1, 4, 2);
        return std::pair{r.max_dim == 3 && r.witness().family == SubspaceFamily::pencil,
                         "max_dim=" + std::to_string(r.max_dim) + ", witness " + to_string(r.witness().family)};
    });
    run_check(out, "two plane families in Gr(1,3) over F_2", [] {
        const auto r = max_linear_subspace_dim(1, 3, 2);
        const auto a = r.count(SubspaceFamily::pencil), b = r.count(SubspaceFamily::coplanar);
        return std::pair{r.max_dim == 2 && a > 0 && b > 0,
                         "max_dim=" + std::to_string(r.max_dim) + ", pencils " + std::to_string(a) + ", coplanar " +
                             std::to_string(b)};
    });
    return out;
}

Suite suite_automorphisms()
{
    Suite out;
    run_check(out, "pfaffian map identity", [] {
        const auto c = verify_pfaffian_map_identity();
        return std::pair{c.passed(), c.residual.is_zero() ? std::string("zero polynomial")
                                                          : c.residual.to_string(std::vector<std::string>{
                                                                "x", "y", "z", "u", "v", "w"})};
    });
    const auto form = fourfold_form();
    run_check(out, "one pair subgroup", [&] {
        const auto r = automorphism_subgroup({pair_swap(0), pair_rotation(0)}, form);
        return std::pair{r.order == 6, "order " + std::to_string(r.order)};
    });
    run_check(out, "three pair subgroup", [&] {
        std::vector<ProjectiveMatrix> gens;
        for (unsigned i = 0; i < 3; ++i) {
            gens.push_back(pair_swap(i));
            gens.push_back(pair_rotation(i));
        }
        const auto r = automorphism_subgroup(gens, form);
        return std::pair{r.order == 216, "order " + std::to_string(r.order)};
    });
    return out;
}

int cmd_verify(const Config& cfg)
{
    static const std::set<std::string> suites = {"counts", "identities", "forms", "pluecker", "automorphisms", "all"};
    if (!suites.count(cfg.suite)) throw ParseError("unknown suite '" + cfg.suite + "'");
    const bool all = cfg.suite == "all";
    std::vector<std::pair<std::string, Suite>> results;
    if (all || cfg.suite == "counts")
        results.emplace_back("counts", suite_counts(cfg, parse_primes(cfg.primes.empty() ? "5,7" : cfg.primes)));
    if (all || cfg.suite == "identities")
        results.emplace_back("identities",
                             suite_identities(cfg, parse_primes(cfg.primes.empty() ? "5,7" : cfg.primes)));
    if (all || cfg.suite == "forms") results.emplace_back("forms", suite_forms());
    if (all || cfg.suite == "pluecker") results.emplace_back("pluecker", suite_pluecker());
    if (all || cfg.suite == "automorphisms") results.emplace_back("automorphisms", suite_automorphisms());

    bool passed = true;
    json checks = json::array();
    for (const auto& [suite, list] : results)
        for (const auto& c : list) {
            passed = passed && c.passed;
            checks.push_back(json{{"suite", suite}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
            if (!c.passed) std::cerr << "FAILED: " << c.name << ": " << c.detail << "\n";
        }
    if (cfg.format == "tsv") {
        std::cout << "suite\tcheck\tpassed\tdetail\n";
        for (const auto& c : checks)
            std::cout << c["suite"].get<std::string>() << '\t' << c["name"].get<std::string>() << '\t'
                      << (c["passed"].get<bool>() ? "true" : "false") << '\t' << c["detail"].get<std::string>()
                      << '\n';
    } else {
        emit(json{{"suite", cfg.suite}, {"passed", passed}, {"checks", checks}});
    }
    return passed ? ok : verification_failed;
}

int cmd_lattice(const Config& cfg)
{
    json j;
    std::int64_t d = 0;
    if (!cfg.gram.empty()) {
        const auto comma = cfg.gram.find(',');
        if (comma == std::string::npos) throw ParseError("--gram expects h2T,TT");
        const GramMatrix2 g{parse_int(cfg.gram.substr(0, comma)), parse_int(cfg.gram.substr(comma + 1))};
        d = discriminant(g);
        j["h2T"] = g.h2T;
        j["TT"] = g.TT;
        if (cfg.d && *cfg.d != d) throw ParseError("--d disagrees with the Gram matrix discriminant");
    } else if (cfg.d) {
        d = *cfg.d;
    } else {
        throw ParseError("supply --d or --gram");
    }
    j["d"] = d;
    j["special_admissible"] = special_admissible(d);
    const auto n = associated_k3_degree(d);
    j["associated_k3_n"] = n ? json(*n) : json(nullptr);
    emit(j);
    return ok;
}

int cmd_pluecker(const Config& cfg)
{
    if (cfg.relations) {
        for (const auto& r : pluecker_relations(cfg.k, cfg.n)) std::cout << to_string(r, cfg.k, cfg.n) << "\n";
        return ok;
    }
    std::cout << to_json(max_linear_subspace_dim(cfg.k, cfg.n, cfg.q, cfg.budget)) << "\n";
    return ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"cfz: point counts and zeta data for a K3 surface and a cubic fourfold"};
    app.require_subcommand(1);
    Config cfg;
    if (const char* b = std::getenv("CFZ_BUDGET")) {
        try {
            cfg.budget = static_cast<std::uint64_t>(std::stoull(b));
        } catch (const std::exception&) {
            std::cerr << "error: CFZ_BUDGET is not a number\n";
            return usage;
        }
    }

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
        sub->add_flag("--no-cache", cfg.no_cache, "Ignore and do not update the count cache");
        sub->add_option("--budget", cfg.budget, "Enumeration budget (points x equations)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--workers", cfg.workers, "Threads for generic enumeration")->check(CLI::Range(1u, 256u));
    };

    auto* count = app.add_subcommand("count", "Count points of a variety");
    count->add_option("--variety", cfg.variety, "builtin:S, builtin:X, builtin:fermat or a JSON file");
    count->add_option("--primes", cfg.primes, "e.g. 7,13 or 7..40")->required();
    count->add_option("--ext", cfg.ext, "Extension degree")->check(CLI::Range(1u, 8u));
    common(count);

    auto* trace = app.add_subcommand("trace-table", "Counts, residues and predicted coefficients of S");
    trace->add_option("--primes", cfg.primes)->required();
    common(trace);

    auto* identify = app.add_subcommand("identify", "Identify the weight-3 form from residues");
    identify->add_option("--primes", cfg.primes)->required();
    identify->add_option("--residue-override", cfg.overrides, "p:r, replaces the counted residue");
    identify->add_option("--embedding", cfg.embedding, "declared or existential");
    common(identify);

    auto* zeta = app.add_subcommand("zeta", "Local zeta factors of the fourfold");
    zeta->add_option("--prime", cfg.prime)->required();
    zeta->add_option("--ns-fixed", cfg.ns_fixed, "Trace of Frobenius on NS(S) divided by p");
    common(zeta);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", cfg.suite, "counts, identities, forms, pluecker, automorphisms or all");
    verify->add_option("--primes", cfg.primes);
    common(verify);

    auto* lattice = app.add_subcommand("lattice", "Discriminant and admissibility of a labelled fourfold");
    lattice->add_option("--d", cfg.d, "Discriminant");
    lattice->add_option("--gram", cfg.gram, "h2T,TT");

    auto* pluecker = app.add_subcommand("pluecker", "Linear subspaces of a Grassmannian in its Pluecker embedding");
    pluecker->add_option("--k", cfg.k);
    pluecker->add_option("--n", cfg.n);
    pluecker->add_option("--q", cfg.q);
    pluecker->add_flag("--relations", cfg.relations, "Print the quadratic relations instead");
    common(pluecker);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }

    try {
        if (*count) return cmd_count(cfg);
        if (*trace) return cmd_trace_table(cfg);
        if (*identify) return cmd_identify(cfg);
        if (*zeta) return cmd_zeta(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*lattice) return cmd_lattice(cfg);
        if (*pluecker) return cmd_pluecker(cfg);
    } catch (const VerificationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return verification_failed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}
