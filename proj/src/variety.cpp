#include "cfz/variety.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cfz/error.hpp"

namespace cfz {

VariableBlocks::VariableBlocks(std::vector<std::vector<std::string>> names) : names_(std::move(names))
{
    for (std::size_t b = 0; b < names_.size(); ++b) {
        if (names_[b].empty()) throw ParseError("empty variable block");
        for (const auto& n : names_[b]) {
            if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0])))
                throw ParseError("invalid variable name '" + n + "'");
            if (index_of(n)) throw ParseError("duplicate variable '" + n + "'");
            flat_.push_back(n);
            block_of_.push_back(b);
        }
    }
}

VariableBlocks VariableBlocks::parse(std::string_view decl)
{
    std::vector<std::vector<std::string>> names(1);
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) names.back().push_back(cur);
        cur.clear();
    };
    for (char ch : decl) {
        if (ch == '|') {
            flush();
            names.emplace_back();
        } else if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
            flush();
        } else {
            cur += ch;
        }
    }
    flush();
    return VariableBlocks(std::move(names));
}

std::vector<std::size_t> VariableBlocks::sizes() const
{
    std::vector<std::size_t> out;
    for (const auto& b : names_) out.push_back(b.size());
    return out;
}

std::optional<std::size_t> VariableBlocks::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < flat_.size(); ++i)
        if (flat_[i] == name) return i;
    return std::nullopt;
}

MultiHomPoly::MultiHomPoly(VariableBlocks blocks, SparsePoly poly)
    : blocks_(std::move(blocks)), poly_(std::move(poly)), multidegree_(blocks_.num_blocks(), 0)
{
    if (poly_.num_vars() != blocks_.num_vars()) throw ParseError("polynomial does not match variable blocks");
    auto degree_of = [this](const Exponents& e) {
        std::vector<unsigned> d(blocks_.num_blocks(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) d[blocks_.block_of(i)] += e[i];
        return d;
    };
    if (poly_.is_zero()) return;
    multidegree_ = degree_of(poly_.terms().begin()->first);
    std::vector<std::string> bad;
    for (const auto& [e, c] : poly_.terms()) {
        if (degree_of(e) != multidegree_) {
            SparsePoly t(poly_.num_vars());
            t.add_term(c, e);
            bad.push_back(t.to_string(blocks_.flat_names()));
        }
    }
    if (!bad.empty()) {
        std::string msg = "polynomial is not multihomogeneous; offending terms:";
        for (const auto& b : bad) msg += " " + b;
        throw ParseError(msg);
    }
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const VariableBlocks& blocks) : text_(text), blocks_(blocks) {}

    SparsePoly parse()
    {
        SparsePoly out(blocks_.num_vars());
        skip_ws();
        if (at_end()) throw error("empty polynomial");
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = next() == '-' ? -1 : 1;
            skip_ws();
        }
        parse_term(out, sign);
        for (;;) {
            skip_ws();
            if (at_end()) break;
            const char op = next();
            if (op != '+' && op != '-') throw error(std::string("expected '+' or '-', found '") + op + "'");
            skip_ws();
            parse_term(out, op == '-' ? -1 : 1);
        }
        return out;
    }

private:
    void parse_term(SparsePoly& out, int sign)
    {
        std::int64_t coeff = sign;
        Exponents e(blocks_.num_vars(), 0);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = checked_mul(coeff, parse_int());
            skip_ws();
            if (at_end() || peek() != '*') throw error("coefficient must be followed by '*' and a variable");
            next();
            skip_ws();
        }
        parse_power(e);
        for (;;) {
            skip_ws();
            if (at_end() || peek() != '*') break;
            next();
            skip_ws();
            parse_power(e);
        }
        out.add_term(coeff, std::move(e));
    }

    void parse_power(Exponents& e)
    {
        const std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        const auto name = text_.substr(start, pos_ - start);
        if (name.empty()) throw error("expected a variable");
        if (std::isdigit(static_cast<unsigned char>(name[0]))) throw error("expected a variable, found a number");
        const auto idx = blocks_.index_of(name);
        if (!idx) throw error("unknown variable '" + std::string(name) + "'");
        std::int64_t exp = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            next();
            skip_ws();
            exp = parse_int();
        }
        if (exp + e[*idx] > 60000) throw error("exponent too large");
        e[*idx] = static_cast<std::uint16_t>(e[*idx] + exp);
    }

    std::int64_t parse_int()
    {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) throw error("expected an integer");
        std::int64_t v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            v = checked_add(checked_mul(v, 10), next() - '0');
        return v;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    char next() { return text_[pos_++]; }
    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    ParseError error(const std::string& msg) const
    {
        return ParseError(msg + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    std::string_view text_;
    const VariableBlocks& blocks_;
    std::size_t pos_ = 0;
};

} // namespace

MultiHomPoly parse_poly(std::string_view text, const VariableBlocks& blocks)
{
    return MultiHomPoly(blocks, PolyParser(text, blocks).parse());
}

std::vector<unsigned> VarietySpec::ambient() const
{
    std::vector<unsigned> out;
    for (auto s : blocks.sizes()) out.push_back(static_cast<unsigned>(s - 1));
    return out;
}

std::string VarietySpec::canonical_string() const
{
    std::ostringstream os;
    os << "name=" << name << ";vars=";
    for (std::size_t b = 0; b < blocks.num_blocks(); ++b) {
        if (b) os << '|';
        for (std::size_t i = 0; i < blocks.names()[b].size(); ++i) os << (i ? "," : "") << blocks.names()[b][i];
    }
    os << ";polys=";
    for (const auto& p : polys) {
        os << '[';
        for (const auto& [e, c] : p.poly().terms()) {
            os << c << ':';
            for (auto x : e) os << x << '.';
            os << ' ';
        }
        os << ']';
    }
    return os.str();
}

namespace {

const VariableBlocks& surface_blocks()
{
    static const VariableBlocks b({{"x", "y", "z"}, {"u", "v", "w"}});
    return b;
}

const VariableBlocks& fourfold_blocks()
{
    static const VariableBlocks b({{"x", "u", "y", "v", "z", "w"}});
    return b;
}

} // namespace

MultiHomPoly surface_form_F() { return parse_poly("x*u^2 + y*v^2 + z*w^2", surface_blocks()); }
MultiHomPoly surface_form_G() { return parse_poly("x^2*u + y^2*v + z^2*w", surface_blocks()); }

MultiHomPoly fourfold_form()
{
    return parse_poly("x*u^2 - u*x^2 + y*v^2 - v*y^2 + z*w^2 - z^2*w", fourfold_blocks());
}

MultiHomPoly fermat_form() { return parse_poly("u^3 + v^3 + w^3 + x^3 + y^3 + z^3", fourfold_blocks()); }

VarietySpec builtin_variety(std::string_view name)
{
    if (name == "S") return {"S", surface_blocks(), {surface_form_F(), surface_form_G()}};
    if (name == "X") return {"X", fourfold_blocks(), {fourfold_form()}};
    if (name == "fermat") return {"fermat", fourfold_blocks(), {fermat_form()}};
    throw ParseError("unknown builtin variety '" + std::string(name) + "' (expected S, X or fermat)");
}

VarietySpec variety_from_json(std::string_view json_text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid variety JSON: ") + e.what());
    }
    try {
        VarietySpec spec;
        spec.name = j.at("name").get<std::string>();
        spec.blocks = VariableBlocks(j.at("vars").get<std::vector<std::vector<std::string>>>());
        const auto ambient = j.at("ambient").get<std::vector<unsigned>>();
        if (ambient != spec.ambient()) throw ParseError("'ambient' does not match the sizes of 'vars'");
        for (const auto& text : j.at("polys").get<std::vector<std::string>>())
            spec.polys.push_back(parse_poly(text, spec.blocks));
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed variety file: ") + e.what());
    }
}

VarietySpec load_variety_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open variety file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return variety_from_json(ss.str());
}

} // namespace cfz
