#include "cfz/grassmannian.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "cfz/error.hpp"
#include "cfz/finite_field.hpp"

namespace cfz {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t q) { return ((a % q) + q) % q; }

std::int64_t inv_mod(std::int64_t a, std::int64_t q)
{
    std::int64_t r = 1, e = q - 2;
    a = mod(a, q);
    while (e > 0) {
        if (e & 1) r = r * a % q;
        a = a * a % q;
        e >>= 1;
    }
    return r;
}

void require_small_prime(std::uint32_t q)
{
    if (!is_prime(q)) throw DomainError("Pluecker computations need a prime field order, got " + std::to_string(q));
}

void require_grassmannian(unsigned k, unsigned n)
{
    if (k >= n) throw DomainError("Gr(k, n) needs 0 <= k < n");
}

using IndexMap = std::map<std::vector<unsigned>, std::size_t>;

IndexMap index_map(unsigned k, unsigned n)
{
    IndexMap m;
    const auto idx = pluecker_indices(k, n);
    for (std::size_t i = 0; i < idx.size(); ++i) m.emplace(idx[i], i);
    return m;
}

/// Sorts a sequence of indices; returns 0 if it has a repeat, else the
/// permutation sign.
int sort_with_sign(std::vector<unsigned>& s)
{
    int sign = 1;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j + 1 < s.size() - i; ++j)
            if (s[j] > s[j + 1]) {
                std::swap(s[j], s[j + 1]);
                sign = -sign;
            }
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] == s[i + 1]) return 0;
    return sign;
}

std::size_t matrix_rank(std::vector<std::vector<std::int64_t>> m, std::int64_t q)
{
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        const auto inv = inv_mod(m[rank][c], q);
        for (auto& x : m[rank]) x = x * inv % q;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const auto s = m[r][c];
            for (std::size_t j = 0; j < cols; ++j) m[r][j] = mod(m[r][j] - s * m[rank][j], q);
        }
        ++rank;
    }
    return rank;
}

std::int64_t det_mod(std::vector<std::vector<std::int64_t>> m, std::int64_t q)
{
    const std::size_t n = m.size();
    std::int64_t det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = mod(-det, q);
        }
        det = det * m[c][c] % q;
        const auto inv = inv_mod(m[c][c], q);
        for (std::size_t r = c + 1; r < n; ++r) {
            const auto s = m[r][c] * inv % q;
            for (std::size_t j = c; j < n; ++j) m[r][j] = mod(m[r][j] - s * m[c][j], q);
        }
    }
    return det;
}

} // namespace

std::vector<std::vector<unsigned>> pluecker_indices(unsigned k, unsigned n)
{
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    std::function<void(unsigned)> rec = [&](unsigned start) {
        if (cur.size() == k + 1) {
            out.push_back(cur);
            return;
        }
        for (unsigned i = start; i <= n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

bool PlueckerVector::is_zero() const
{
    return std::all_of(coords.begin(), coords.end(), [](auto c) { return c == 0; });
}

PlueckerVector PlueckerVector::normalized() const
{
    auto it = std::find_if(coords.begin(), coords.end(), [](auto c) { return c != 0; });
    if (it == coords.end()) throw DomainError("zero Pluecker vector");
    const auto inv = inv_mod(*it, q);
    PlueckerVector out = *this;
    for (auto& c : out.coords) c = c * inv % q;
    return out;
}

PlueckerVector pluecker_from_terms(unsigned k, unsigned n, std::uint32_t q,
                                   std::span<const std::vector<unsigned>> wedges)
{
    require_grassmannian(k, n);
    require_small_prime(q);
    const auto idx = index_map(k, n);
    PlueckerVector v{k, n, q, std::vector<std::int64_t>(idx.size(), 0)};
    for (auto w : wedges) {
        if (w.size() != k + 1) throw DomainError("wedge has the wrong number of factors");
        const int sign = sort_with_sign(w);
        if (sign == 0) continue;
        if (w.back() > n) throw DomainError("basis index out of range");
        auto& c = v.coords[idx.at(w)];
        c = mod(c + sign, q);
    }
    return v;
}

PlueckerVector wedge_rows(std::span<const std::vector<std::int64_t>> rows, std::uint32_t q)
{
    require_small_prime(q);
    if (rows.empty()) throw DomainError("no rows");
    const unsigned k = static_cast<unsigned>(rows.size() - 1);
    const unsigned n = static_cast<unsigned>(rows[0].size() - 1);
    require_grassmannian(k, n);
    PlueckerVector v{k, n, q, {}};
    for (const auto& cols : pluecker_indices(k, n)) {
        std::vector<std::vector<std::int64_t>> sub(k + 1, std::vector<std::int64_t>(k + 1));
        for (unsigned r = 0; r <= k; ++r)
            for (unsigned c = 0; c <= k; ++c) sub[r][c] = mod(rows[r][cols[c]], q);
        v.coords.push_back(det_mod(std::move(sub), q));
    }
    return v;
}

std::int64_t QuadraticRelation::eval_mod(std::span<const std::int64_t> coords, std::int64_t q) const
{
    std::int64_t acc = 0;
    for (const auto& t : terms) acc = mod(acc + mod(t.coeff, q) * (coords[t.i] * coords[t.j] % q), q);
    return acc;
}

std::vector<QuadraticRelation> pluecker_relations(unsigned k, unsigned n)
{
    require_grassmannian(k, n);
    const auto idx = index_map(k, n);
    std::vector<std::vector<unsigned>> small_sets, big_sets;
    {
        std::vector<unsigned> cur;
        std::function<void(unsigned, unsigned, std::vector<std::vector<unsigned>>&)> rec =
            [&](unsigned start, unsigned size, std::vector<std::vector<unsigned>>& out) {
                if (cur.size() == size) {
                    out.push_back(cur);
                    return;
                }
                for (unsigned i = start; i <= n; ++i) {
                    cur.push_back(i);
                    rec(i + 1, size, out);
                    cur.pop_back();
                }
            };
        rec(0, k, small_sets);
        if (k + 2 <= n + 1) rec(0, k + 2, big_sets);
    }

    std::set<std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>>> seen;
    std::vector<QuadraticRelation> out;
    for (const auto& I : small_sets)
        for (const auto& J : big_sets) {
            std::map<std::pair<std::size_t, std::size_t>, std::int64_t> acc;
            for (std::size_t l = 0; l < J.size(); ++l) {
                std::vector<unsigned> left = I;
                left.push_back(J[l]);
                const int s = sort_with_sign(left);
                if (s == 0) continue;
                std::vector<unsigned> right;
                for (std::size_t t = 0; t < J.size(); ++t)
                    if (t != l) right.push_back(J[t]);
                const std::size_t a = idx.at(left), b = idx.at(right);
                const std::int64_t sign = ((l + 1) % 2 == 0 ? 1 : -1) * s;
                acc[{std::min(a, b), std::max(a, b)}] += sign;
            }
            std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> terms;
            for (const auto& [key, c] : acc)
                if (c != 0) terms.emplace_back(key.first, key.second, c);
            if (terms.empty()) continue;
            if (std::get<2>(terms.front()) < 0)
                for (auto& t : terms) std::get<2>(t) = -std::get<2>(t);
            if (!seen.insert(terms).second) continue;
            QuadraticRelation r;
            for (const auto& [i, j, c] : terms) r.terms.push_back({c, i, j});
            out.push_back(std::move(r));
        }
    return out;
}

std::string to_string(const QuadraticRelation& r, unsigned k, unsigned n)
{
    const auto idx = pluecker_indices(k, n);
    auto name = [&](std::size_t i) {
        std::string s = "p";
        for (std::size_t t = 0; t < idx[i].size(); ++t) {
            if (n >= 10 && t) s += '_';
            s += std::to_string(idx[i][t]);
        }
        return s;
    };
    std::string out;
    bool first = true;
    for (const auto& t : r.terms) {
        const std::int64_t mag = t.coeff < 0 ? -t.coeff : t.coeff;
        if (first)
            out += t.coeff < 0 ? "-" : "";
        else
            out += t.coeff < 0 ? " - " : " + ";
        first = false;
        if (mag != 1) out += std::to_string(mag) + "*";
        out += t.i == t.j ? name(t.i) + "^2" : name(t.i) + "*" + name(t.j);
    }
    return out;
}

bool is_decomposable(const PlueckerVector& v)
{
    if (v.is_zero()) throw DomainError("zero Pluecker vector");
    for (const auto& r : pluecker_relations(v.k, v.n))
        if (r.eval_mod(v.coords, v.q) != 0) return false;
    return true;
}

std::vector<GrassmannianPoint> grassmannian_points(unsigned k, unsigned n, std::uint32_t q)
{
    require_grassmannian(k, n);
    require_small_prime(q);
    std::vector<GrassmannianPoint> out;
    const unsigned rows = k + 1, cols = n + 1;
    for (const auto& pivots : pluecker_indices(k, n)) {
        // free entries: row r, column c > pivots[r], c not a pivot column
        std::vector<std::pair<unsigned, unsigned>> free;
        for (unsigned r = 0; r < rows; ++r)
            for (unsigned c = pivots[r] + 1; c < cols; ++c)
                if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
        std::vector<std::int64_t> vals(free.size(), 0);
        for (;;) {
            std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols, 0));
            for (unsigned r = 0; r < rows; ++r) m[r][pivots[r]] = 1;
            for (std::size_t i = 0; i < free.size(); ++i) m[free[i].first][free[i].second] = vals[i];
            out.push_back({wedge_rows(m, q).normalized(), m});
            std::size_t i = 0;
            while (i < vals.size() && ++vals[i] == q) vals[i++] = 0;
            if (i == vals.size()) break;
        }
    }
    return out;
}

bool is_decomposable_exhaustive(const PlueckerVector& v)
{
    const auto target = v.normalized();
    for (const auto& pt : grassmannian_points(v.k, v.n, v.q))
        if (pt.pluecker == target) return true;
    return false;
}

std::string to_string(SubspaceFamily f)
{
    switch (f) {
    case SubspaceFamily::pencil: return "pencil";
    case SubspaceFamily::coplanar: return "coplanar";
    case SubspaceFamily::both: return "both";
    case SubspaceFamily::other: return "other";
    }
    return "?";
}

std::size_t SubspaceSearchReport::count(SubspaceFamily f) const
{
    return static_cast<std::size_t>(
        std::count_if(maximal.begin(), maximal.end(), [f](const auto& s) { return s.family == f; }));
}

namespace {

/// Vectors of F_q^N encoded base q, coordinate 0 most significant.
class CodeSpace {
public:
    CodeSpace(std::uint32_t q, std::size_t len) : q_(q), len_(len)
    {
        total_ = 1;
        for (std::size_t i = 0; i < len; ++i) total_ *= q;
    }

    std::uint64_t total() const { return total_; }

    std::vector<std::int64_t> decode(std::uint64_t code) const
    {
        std::vector<std::int64_t> v(len_);
        for (std::size_t i = len_; i-- > 0;) {
            v[i] = static_cast<std::int64_t>(code % q_);
            code /= q_;
        }
        return v;
    }

    std::uint64_t encode(std::span<const std::int64_t> v) const
    {
        std::uint64_t code = 0;
        for (auto c : v) code = code * q_ + static_cast<std::uint64_t>(c);
        return code;
    }

    /// u + lambda * g
    std::uint64_t add_scaled(std::uint64_t u, std::int64_t lambda, std::uint64_t g) const
    {
        std::uint64_t out = 0, scale = 1;
        for (std::size_t i = 0; i < len_; ++i) {
            const auto d = (u % q_ + static_cast<std::uint64_t>(lambda) * (g % q_)) % q_;
            out += d * scale;
            scale *= q_;
            u /= q_;
            g /= q_;
        }
        return out;
    }

private:
    std::uint32_t q_;
    std::size_t len_;
    std::uint64_t total_;
};

class SubspaceSearch {
public:
    SubspaceSearch(unsigned k, unsigned n, std::uint32_t q, std::uint64_t budget)
        : k_(k), n_(n), q_(q), points_(grassmannian_points(k, n, q)),
          space_(q, points_.front().pluecker.coords.size())
    {
        if (space_.total() > budget)
            throw BudgetExceeded("subspace search over " + std::to_string(space_.total()) +
                                 " vectors exceeds the budget of " + std::to_string(budget));
        in_g_.assign(space_.total(), 0);
        norm_.assign(space_.total(), 0);
        in_span_.assign(space_.total(), 0);
        for (std::uint64_t c = 1; c < space_.total(); ++c) {
            PlueckerVector v{k, n, q, space_.decode(c)};
            norm_[c] = space_.encode(v.normalized().coords);
        }
        for (std::size_t i = 0; i < points_.size(); ++i) {
            const auto code = space_.encode(points_[i].pluecker.coords);
            point_of_code_[code] = i;
            for (std::int64_t s = 1; s < q; ++s) in_g_[space_.add_scaled(0, s, code)] = 1;
            grass_codes_.push_back(code);
        }
        std::sort(grass_codes_.begin(), grass_codes_.end());
    }

    SubspaceSearchReport run()
    {
        std::vector<std::uint64_t> span = {0};
        in_span_[0] = 1;
        dfs(span, grass_codes_);
        SubspaceSearchReport r;
        r.k = k_;
        r.n = n_;
        r.q = q_;
        r.max_dim = best_dim_;
        r.bound_applies = 2 * k_ + 1 < n_;
        r.grassmannian_size = points_.size();
        r.subspaces_examined = examined_;
        for (const auto& basis : best_) r.maximal.push_back(describe(basis));
        return r;
    }

private:
    void dfs(const std::vector<std::uint64_t>& span, const std::vector<std::uint64_t>& candidates)
    {
        if (!basis_.empty()) record();
        // candidates c with span(W, c) inside the Grassmannian, and whether c
        // is the least point of span(W, c) outside span(W)
        std::vector<std::pair<std::uint64_t, bool>> ok;
        for (auto c : candidates) {
            if (in_span_[c]) continue;
            bool inside = true;
            std::uint64_t least = c;
            for (auto u : span) {
                for (std::int64_t s = 1; s < q_ && inside; ++s) {
                    const auto v = space_.add_scaled(u, s, c);
                    if (!in_g_[v]) inside = false;
                    least = std::min(least, norm_[v]);
                }
                if (!inside) break;
            }
            if (inside) ok.emplace_back(c, least == c);
        }
        for (std::size_t i = 0; i < ok.size(); ++i) {
            if (!ok[i].second) continue;
            const auto g = ok[i].first;
            std::vector<std::uint64_t> next = span;
            for (auto u : span)
                for (std::int64_t s = 1; s < q_; ++s) next.push_back(space_.add_scaled(u, s, g));
            for (std::size_t t = span.size(); t < next.size(); ++t) in_span_[next[t]] = 1;
            std::vector<std::uint64_t> rest;
            for (std::size_t j = i + 1; j < ok.size(); ++j) rest.push_back(ok[j].first);
            basis_.push_back(g);
            dfs(next, rest);
            basis_.pop_back();
            for (std::size_t t = span.size(); t < next.size(); ++t) in_span_[next[t]] = 0;
        }
    }

    void record()
    {
        ++examined_;
        const unsigned dim = static_cast<unsigned>(basis_.size() - 1);
        if (best_.empty() || dim > best_dim_) {
            best_dim_ = dim;
            best_.clear();
        }
        if (dim == best_dim_) best_.push_back(basis_);
    }

    LinearSubspace describe(const std::vector<std::uint64_t>& basis) const
    {
        LinearSubspace s;
        for (auto c : basis) s.basis.push_back(points_[point_of_code_.at(c)].pluecker);

        // every Grassmannian point of the span
        std::vector<std::uint64_t> span = {0};
        for (auto g : basis) {
            const auto size = span.size();
            for (std::size_t i = 0; i < size; ++i)
                for (std::int64_t t = 1; t < q_; ++t) span.push_back(space_.add_scaled(span[i], t, g));
        }
        std::set<std::uint64_t> pts;
        for (auto v : span)
            if (v) pts.insert(norm_[v]);

        const CodeSpace ambient(q_, n_ + 1);
        std::vector<std::vector<std::int64_t>> stacked;
        std::set<std::uint64_t> common;
        bool first = true;
        for (auto code : pts) {
            const auto& m = points_[point_of_code_.at(code)].basis;
            stacked.insert(stacked.end(), m.begin(), m.end());
            // all vectors of this (k+1)-dimensional subspace
            std::set<std::uint64_t> vecs;
            std::vector<std::int64_t> coef(k_ + 1, 0);
            for (;;) {
                std::vector<std::int64_t> v(n_ + 1, 0);
                for (unsigned r = 0; r <= k_; ++r)
                    for (unsigned c = 0; c <= n_; ++c) v[c] = (v[c] + coef[r] * m[r][c]) % q_;
                vecs.insert(ambient.encode(v));
                std::size_t i = 0;
                while (i < coef.size() && ++coef[i] == q_) coef[i++] = 0;
                if (i == coef.size()) break;
            }
            if (first) {
                common = std::move(vecs);
                first = false;
            } else {
                std::set<std::uint64_t> both;
                std::set_intersection(common.begin(), common.end(), vecs.begin(), vecs.end(),
                                      std::inserter(both, both.begin()));
                common = std::move(both);
            }
        }
        std::size_t common_dim = 0;
        for (std::size_t sz = common.size(); sz > 1; sz /= q_) ++common_dim;
        const std::size_t sum_dim = matrix_rank(stacked, q_);
        const bool pencil = common_dim == k_;
        const bool coplanar = sum_dim == k_ + 2;
        s.family = pencil && coplanar ? SubspaceFamily::both
                   : pencil           ? SubspaceFamily::pencil
                   : coplanar         ? SubspaceFamily::coplanar
                                      : SubspaceFamily::other;
        return s;
    }

    unsigned k_, n_;
    std::int64_t q_;
    std::vector<GrassmannianPoint> points_;
    CodeSpace space_;
    std::vector<std::uint8_t> in_g_;
    std::vector<std::uint64_t> norm_;
    std::vector<std::uint8_t> in_span_;
    std::map<std::uint64_t, std::size_t> point_of_code_;
    std::vector<std::uint64_t> grass_codes_;
    std::vector<std::uint64_t> basis_;
    unsigned best_dim_ = 0;
    std::vector<std::vector<std::uint64_t>> best_;
    std::uint64_t examined_ = 0;
};

} // namespace

SubspaceSearchReport max_linear_subspace_dim(unsigned k, unsigned n, std::uint32_t q, std::uint64_t budget)
{
    require_grassmannian(k, n);
    require_small_prime(q);
    const std::size_t m1 = pluecker_indices(k, n).size();
    double size = 1;
    for (std::size_t i = 0; i < m1; ++i) size *= q;
    if (size > static_cast<double>(budget))
        throw BudgetExceeded("subspace search over " + std::to_string(static_cast<std::uint64_t>(size)) +
                             " vectors exceeds the budget of " + std::to_string(budget));
    return SubspaceSearch(k, n, q, budget).run();
}

std::string to_json(const SubspaceSearchReport& r)
{
    nlohmann::ordered_json j;
    j["k"] = r.k;
    j["n"] = r.n;
    j["q"] = r.q;
    j["max_dim"] = r.max_dim;
    nlohmann::ordered_json basis = nlohmann::ordered_json::array();
    if (!r.maximal.empty())
        for (const auto& v : r.witness().basis) basis.push_back(v.coords);
    j["witness_basis"] = basis;
    j["witness_family"] = r.maximal.empty() ? "none" : to_string(r.witness().family);
    j["bound_applies"] = r.bound_applies;
    j["maximal_subspaces"] = r.maximal.size();
    j["pencils"] = r.count(SubspaceFamily::pencil);
    j["coplanar"] = r.count(SubspaceFamily::coplanar);
    j["grassmannian_points"] = r.grassmannian_size;
    return j.dump();
}

} // namespace cfz
