#include "cfz/point_count.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace cfz {

std::string to_string(CountMethod m)
{
    switch (m) {
    case CountMethod::generic: return "generic";
    case CountMethod::fibered: return "fibered";
    case CountMethod::convolution: return "convolution";
    }
    return "?";
}

CountMethod count_method_from_string(std::string_view s)
{
    if (s == "generic") return CountMethod::generic;
    if (s == "fibered") return CountMethod::fibered;
    if (s == "convolution") return CountMethod::convolution;
    throw DomainError("unknown count method '" + std::string(s) + "'");
}

namespace {

using Rep = FiniteField::Rep;

/// A polynomial reduced into a field, laid out for repeated evaluation.
class CompiledPoly {
public:
    CompiledPoly(const SparsePoly& poly, const FiniteField& f)
    {
        for (const auto& [e, c] : poly.terms()) {
            Term t{f.from_int(c), {}};
            if (t.coeff == 0) continue;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i]) {
                    t.factors.emplace_back(static_cast<unsigned>(i), e[i]);
                    max_exp_ = std::max<unsigned>(max_exp_, e[i]);
                }
            }
            terms_.push_back(std::move(t));
        }
    }

    unsigned max_exponent() const { return max_exp_; }

    /// pw[v * stride + e] = x_v^e
    Rep eval(const FiniteField& f, const std::vector<Rep>& pw, std::size_t stride) const
    {
        Rep acc = 0;
        for (const auto& t : terms_) {
            Rep v = t.coeff;
            for (const auto& [var, e] : t.factors) v = f.mul(v, pw[var * stride + e]);
            acc = f.add(acc, v);
        }
        return acc;
    }

private:
    struct Term {
        Rep coeff;
        std::vector<std::pair<unsigned, unsigned>> factors;
    };
    std::vector<Term> terms_;
    unsigned max_exp_ = 0;
};

struct CompiledSystem {
    std::vector<CompiledPoly> polys;
    std::size_t stride = 1;

    CompiledSystem(const std::vector<SparsePoly>& ps, const FiniteField& f)
    {
        unsigned m = 1;
        for (const auto& p : ps) {
            polys.emplace_back(p, f);
            m = std::max(m, polys.back().max_exponent());
        }
        stride = m + 1;
    }

    void fill_powers(const FiniteField& f, const std::vector<Rep>& coords, std::vector<Rep>& pw) const
    {
        for (std::size_t v = 0; v < coords.size(); ++v) {
            Rep x = 1;
            pw[v * stride] = 1;
            for (std::size_t e = 1; e < stride; ++e) {
                x = f.mul(x, coords[v]);
                pw[v * stride + e] = x;
            }
        }
    }

    bool all_zero(const FiniteField& f, const std::vector<Rep>& pw) const
    {
        for (const auto& p : polys)
            if (p.eval(f, pw, stride) != 0) return false;
        return true;
    }
};

void check_budget(std::uint64_t points, std::size_t equations, std::uint64_t budget)
{
    const std::uint64_t eq = std::max<std::uint64_t>(1, equations);
    if (points > budget / eq)
        throw BudgetExceeded("enumeration of " + std::to_string(points) + " points x " + std::to_string(eq) +
                             " equations exceeds the budget of " + std::to_string(budget));
}

/// Walks the product of projective spaces, restricting the first factor to
/// ranks [begin, end), and calls fn(coords, powers) for every zero.
template <class Fn>
void walk_zeros(const VarietySpec& spec, const FiniteField& f, const CompiledSystem& sys, std::uint64_t begin,
                std::uint64_t end, Fn&& fn)
{
    const auto sizes = spec.blocks.sizes();
    const std::size_t nb = sizes.size();
    const std::uint32_t q = f.order();

    std::vector<std::vector<std::vector<Rep>>> inner(nb);
    for (std::size_t b = 1; b < nb; ++b) {
        ProjectiveSpace ps(q, static_cast<unsigned>(sizes[b] - 1));
        inner[b].assign(ps.begin(), ps.end());
    }
    std::vector<std::size_t> offset(nb, 0);
    for (std::size_t b = 1; b < nb; ++b) offset[b] = offset[b - 1] + sizes[b - 1];

    std::vector<Rep> coords(spec.blocks.num_vars());
    std::vector<Rep> pw(coords.size() * sys.stride);
    std::vector<std::size_t> idx(nb, 0);

    ProjectiveSpace outer(q, static_cast<unsigned>(sizes[0] - 1));
    auto it = outer.at(begin);
    for (std::uint64_t r = begin; r < end; ++r, ++it) {
        std::copy(it->begin(), it->end(), coords.begin());
        std::fill(idx.begin(), idx.end(), 0);
        for (;;) {
            for (std::size_t b = 1; b < nb; ++b)
                std::copy(inner[b][idx[b]].begin(), inner[b][idx[b]].end(), coords.begin() + offset[b]);
            sys.fill_powers(f, coords, pw);
            if (sys.all_zero(f, pw)) fn(coords);
            bool wrapped = true;
            for (std::size_t b = nb; b-- > 1;) {
                if (++idx[b] < inner[b].size()) {
                    wrapped = false;
                    break;
                }
                idx[b] = 0;
            }
            if (wrapped) break;
        }
    }
}

template <class PerRange>
void partition(std::uint64_t total, unsigned workers, PerRange&& per_range)
{
    workers = std::max(1u, workers);
    if (workers == 1 || total < workers) {
        per_range(0u, std::uint64_t{0}, total);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t b = total * w / workers, e = total * (w + 1) / workers;
        pool.emplace_back([&per_range, w, b, e] { per_range(w, b, e); });
    }
    for (auto& t : pool) t.join();
}

std::vector<SparsePoly> raw_polys(const VarietySpec& spec)
{
    std::vector<SparsePoly> out;
    for (const auto& p : spec.polys) {
        if (!(p.blocks() == spec.blocks)) throw DomainError("polynomial blocks differ from the variety's blocks");
        out.push_back(p.poly());
    }
    return out;
}

std::uint64_t outer_size(const VarietySpec& spec, std::uint32_t q)
{
    return projective_point_count(q, static_cast<unsigned>(spec.blocks.sizes().at(0) - 1));
}

} // namespace

std::uint64_t enumeration_size(const VarietySpec& spec, std::uint64_t q)
{
    std::uint64_t total = 1;
    for (auto s : spec.blocks.sizes()) {
        const auto n = projective_point_count(q, static_cast<unsigned>(s - 1));
        if (total > UINT64_MAX / n) return UINT64_MAX;
        total *= n;
    }
    return total;
}

CountRecord count_points_generic(const VarietySpec& spec, const FieldPtr& field, const CountOptions& opts)
{
    if (spec.blocks.num_blocks() == 0) throw DomainError("variety has no ambient space");
    const auto& f = *field;
    check_budget(enumeration_size(spec, f.order()), spec.polys.size(), opts.budget);
    const CompiledSystem sys(raw_polys(spec), f);
    std::vector<std::uint64_t> partial(std::max(1u, opts.workers), 0);
    partition(outer_size(spec, f.order()), opts.workers, [&](unsigned w, std::uint64_t b, std::uint64_t e) {
        std::uint64_t n = 0;
        walk_zeros(spec, f, sys, b, e, [&n](const std::vector<Rep>&) { ++n; });
        partial[w] = n;
    });
    return {spec.name, f.characteristic(), f.degree(), std::accumulate(partial.begin(), partial.end(), std::uint64_t{0}),
            CountMethod::generic};
}

CountRecord count_points_generic(const VarietySpec& spec, std::uint32_t p, unsigned k, const CountOptions& opts)
{
    return count_points_generic(spec, FiniteField::make(p, k), opts);
}

std::vector<std::vector<FiniteField::Rep>> list_points_generic(const VarietySpec& spec, const FieldPtr& field,
                                                                const CountOptions& opts)
{
    const auto& f = *field;
    check_budget(enumeration_size(spec, f.order()), spec.polys.size(), opts.budget);
    const CompiledSystem sys(raw_polys(spec), f);
    std::vector<std::vector<std::vector<Rep>>> parts(std::max(1u, opts.workers));
    partition(outer_size(spec, f.order()), opts.workers, [&](unsigned w, std::uint64_t b, std::uint64_t e) {
        walk_zeros(spec, f, sys, b, e, [&](const std::vector<Rep>& c) { parts[w].push_back(c); });
    });
    std::vector<std::vector<Rep>> out;
    for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
    return out;
}

std::uint64_t count_affine_cone(const VarietySpec& spec, const FieldPtr& field, const CountOptions& opts)
{
    const auto& f = *field;
    const std::size_t n = spec.blocks.num_vars();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > UINT64_MAX / f.order()) throw BudgetExceeded("affine cone too large");
        total *= f.order();
    }
    check_budget(total, spec.polys.size(), opts.budget);
    const CompiledSystem sys(raw_polys(spec), f);
    std::vector<Rep> coords(n, 0), pw(n * sys.stride);
    std::uint64_t zeros = 0;
    for (std::uint64_t i = 0; i < total; ++i) {
        sys.fill_powers(f, coords, pw);
        if (sys.all_zero(f, pw)) ++zeros;
        for (std::size_t v = n; v-- > 0;) {
            if (++coords[v] < f.order()) break;
            coords[v] = 0;
        }
    }
    return zeros;
}

// ---------------------------------------------------------------------------

CountRecord count_S_fibered(const FieldPtr& field)
{
    const auto& f = *field;
    if (f.degree() > 2) throw DomainError("fibered counter supports extension degree 1 or 2");
    const Rep two = f.from_int(2);
    std::uint64_t total = 0;
    for (const auto& pt : ProjectiveSpace(f.order(), 2)) {
        // G restricted to this fiber: x^2 u + y^2 v + z^2 w = 0
        const Rep a[3] = {f.mul(pt[0], pt[0]), f.mul(pt[1], pt[1]), f.mul(pt[2], pt[2])};
        const int j = a[0] ? 0 : (a[1] ? 1 : 2);
        const int i1 = j == 0 ? 1 : 0;
        const int i2 = j == 2 ? 1 : 2;
        Rep b1[3] = {0, 0, 0}, b2[3] = {0, 0, 0};
        b1[i1] = 1;
        b1[j] = f.neg(f.div(a[i1], a[j]));
        b2[i2] = 1;
        b2[j] = f.neg(f.div(a[i2], a[j]));
        // F(s b1 + t b2) = A s^2 + B s t + C t^2
        Rep A = 0, B = 0, C = 0;
        for (int i = 0; i < 3; ++i) {
            A = f.add(A, f.mul(pt[i], f.mul(b1[i], b1[i])));
            B = f.add(B, f.mul(pt[i], f.mul(b1[i], b2[i])));
            C = f.add(C, f.mul(pt[i], f.mul(b2[i], b2[i])));
        }
        total += f.quadratic_root_count(A, f.mul(two, B), C);
    }
    return {"S", f.characteristic(), f.degree(), total, CountMethod::fibered};
}

CountRecord count_S_fibered(std::uint32_t p, unsigned k)
{
    if (k < 1 || k > 2) throw DomainError("fibered counter supports extension degree 1 or 2");
    return count_S_fibered(FiniteField::make(p, k));
}

// ---------------------------------------------------------------------------

ValueHistogram value_histogram(const MultiHomPoly& form, std::uint32_t p)
{
    const auto field = FiniteField::make(p);
    const auto& f = *field;
    const std::size_t n = form.blocks().num_vars();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= p;
        if (total > 100'000'000) throw BudgetExceeded("histogram domain too large");
    }
    const CompiledSystem sys({form.poly()}, f);
    ValueHistogram h(p, 0);
    std::vector<Rep> coords(n, 0), pw(n * sys.stride);
    for (std::uint64_t i = 0; i < total; ++i) {
        sys.fill_powers(f, coords, pw);
        ++h[sys.polys[0].eval(f, pw, sys.stride)];
        for (std::size_t v = n; v-- > 0;) {
            if (++coords[v] < p) break;
            coords[v] = 0;
        }
    }
    return h;
}

ValueHistogram convolve(const ValueHistogram& a, const ValueHistogram& b)
{
    if (a.size() != b.size() || a.empty()) throw DomainError("histograms over different fields");
    const std::size_t p = a.size();
    ValueHistogram out(p, 0);
    for (std::size_t i = 0; i < p; ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < p; ++j) {
            const std::size_t s = i + j >= p ? i + j - p : i + j;
            unsigned __int128 v = static_cast<unsigned __int128>(a[i]) * b[j] + out[s];
            if (v > UINT64_MAX) throw Error("histogram convolution overflow");
            out[s] = static_cast<std::uint64_t>(v);
        }
    }
    return out;
}

std::vector<MultiHomPoly> split_separable(const MultiHomPoly& form)
{
    const std::size_t n = form.blocks().num_vars();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [e, c] : form.poly().terms()) {
        std::size_t first = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!e[i]) continue;
            if (first == n)
                first = i;
            else
                parent[find(i)] = find(first);
        }
    }
    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < n; ++i)
        if (std::find(roots.begin(), roots.end(), find(i)) == roots.end()) roots.push_back(find(i));

    std::vector<MultiHomPoly> out;
    const auto& names = form.blocks().flat_names();
    for (auto r : roots) {
        std::vector<std::size_t> vars;
        for (std::size_t i = 0; i < n; ++i)
            if (find(i) == r) vars.push_back(i);
        std::vector<std::string> sub_names;
        for (auto v : vars) sub_names.push_back(names[v]);
        SparsePoly sub(vars.size());
        for (const auto& [e, c] : form.poly().terms()) {
            if (std::none_of(vars.begin(), vars.end(), [&](auto v) { return e[v] != 0; })) continue;
            Exponents se;
            for (auto v : vars) se.push_back(e[v]);
            sub.add_term(c, std::move(se));
        }
        out.emplace_back(VariableBlocks({sub_names}), std::move(sub));
    }
    return out;
}

CountRecord count_separable_convolution(std::span<const MultiHomPoly> summands, std::uint32_t p, std::string name)
{
    require_good_prime(p);
    if (summands.empty()) throw DomainError("no summands");
    std::optional<unsigned> degree;
    for (const auto& s : summands) {
        for (const auto& [e, c] : s.poly().terms()) {
            unsigned d = 0;
            for (auto x : e) d += x;
            if (d == 0) throw DomainError("summand has a constant term; the equation is not homogeneous");
            if (degree && *degree != d)
                throw DomainError("summands are not homogeneous of a common degree; "
                                  "the affine cone does not map (p-1)-to-1 onto projective points");
            degree = d;
        }
    }
    ValueHistogram acc;
    for (const auto& s : summands) {
        auto h = value_histogram(s, p);
        acc = acc.empty() ? std::move(h) : convolve(acc, h);
    }
    const std::uint64_t affine = acc[0];
    if ((affine - 1) % (p - 1) != 0)
        throw VerificationError("affine count " + std::to_string(affine) + " is not 1 mod p-1");
    return {std::move(name), p, 1, (affine - 1) / (p - 1), CountMethod::convolution};
}

CountRecord count_pairsum_convolution(std::span<const MultiHomPoly> pair_forms, std::uint32_t p, std::string name)
{
    for (const auto& g : pair_forms)
        if (g.blocks().num_vars() != 2) throw DomainError("pair-sum summands must each have two variables");
    return count_separable_convolution(pair_forms, p, std::move(name));
}

CountRecord count_pairsum_convolution(std::uint32_t p)
{
    const auto pairs = split_separable(fourfold_form());
    return count_pairsum_convolution(pairs, p, "X");
}

CountRecord count_fermat_cubic(std::uint32_t p)
{
    require_good_prime(p);
    const auto cube = parse_poly("t^3", VariableBlocks({{"t"}}));
    const auto h = value_histogram(cube, p);
    ValueHistogram acc = h;
    for (int i = 1; i < 6; ++i) acc = convolve(acc, h);
    const std::uint64_t affine = acc[0];
    if ((affine - 1) % (p - 1) != 0)
        throw VerificationError("affine count " + std::to_string(affine) + " is not 1 mod p-1");
    return {"fermat", p, 1, (affine - 1) / (p - 1), CountMethod::convolution};
}

// ---------------------------------------------------------------------------

SmoothnessReport check_smoothness(const VarietySpec& spec, const FieldPtr& field, const CountOptions& opts)
{
    const auto& f = *field;
    const auto polys = raw_polys(spec);
    const std::size_t n = spec.blocks.num_vars();
    std::vector<SparsePoly> partials;
    for (const auto& p : polys)
        for (std::size_t v = 0; v < n; ++v) partials.push_back(p.derivative(v));
    const CompiledSystem jac(partials, f);
    const std::size_t rows = polys.size();

    SmoothnessReport rep{f.characteristic(), f.degree(), 0, 0};
    for (const auto& pt : list_points_generic(spec, field, opts)) {
        ++rep.points;
        std::vector<Rep> pw(n * jac.stride);
        jac.fill_powers(f, pt, pw);
        std::vector<Rep> m(rows * n);
        for (std::size_t i = 0; i < rows * n; ++i) m[i] = jac.polys[i].eval(f, pw, jac.stride);
        std::size_t rank = 0;
        for (std::size_t col = 0; col < n && rank < rows; ++col) {
            std::size_t piv = rank;
            while (piv < rows && m[piv * n + col] == 0) ++piv;
            if (piv == rows) continue;
            for (std::size_t c = 0; c < n; ++c) std::swap(m[piv * n + c], m[rank * n + c]);
            const Rep inv = f.inv(m[rank * n + col]);
            for (std::size_t r = 0; r < rows; ++r) {
                if (r == rank || m[r * n + col] == 0) continue;
                const Rep s = f.mul(m[r * n + col], inv);
                for (std::size_t c = 0; c < n; ++c) m[r * n + c] = f.sub(m[r * n + c], f.mul(s, m[rank * n + c]));
            }
            ++rank;
        }
        if (rank < rows) ++rep.singular;
    }
    return rep;
}

} // namespace cfz
