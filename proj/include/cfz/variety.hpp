#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cfz/sparse_poly.hpp"

namespace cfz {

/// Variable names grouped into blocks, one block per projective factor.
class VariableBlocks {
public:
    VariableBlocks() = default;
    explicit VariableBlocks(std::vector<std::vector<std::string>> names);

    /// "x,y,z|u,v,w"
    static VariableBlocks parse(std::string_view decl);

    const std::vector<std::vector<std::string>>& names() const { return names_; }
    std::size_t num_blocks() const { return names_.size(); }
    std::size_t num_vars() const { return flat_.size(); }
    std::vector<std::size_t> sizes() const;
    const std::vector<std::string>& flat_names() const { return flat_; }
    std::size_t block_of(std::size_t var) const { return block_of_[var]; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const VariableBlocks& a, const VariableBlocks& b) { return a.names_ == b.names_; }

private:
    std::vector<std::vector<std::string>> names_;
    std::vector<std::string> flat_;
    std::vector<std::size_t> block_of_;
};

/// A polynomial that is homogeneous separately in each variable block.
class MultiHomPoly {
public:
    /// Throws ParseError listing the offending terms if `poly` is not
    /// multihomogeneous.  The zero polynomial has multidegree all zeros.
    MultiHomPoly(VariableBlocks blocks, SparsePoly poly);

    const VariableBlocks& blocks() const { return blocks_; }
    const SparsePoly& poly() const { return poly_; }
    const std::vector<unsigned>& multidegree() const { return multidegree_; }
    std::size_t num_terms() const { return poly_.size(); }
    bool is_zero() const { return poly_.is_zero(); }

    std::string to_string() const { return poly_.to_string(blocks_.flat_names()); }

private:
    VariableBlocks blocks_;
    SparsePoly poly_;
    std::vector<unsigned> multidegree_;
};

/// Parses `[int "*"] var ("^" int)? ("*" var ("^" int)?)*` terms joined by
/// + and -.  A leading sign is accepted.
MultiHomPoly parse_poly(std::string_view text, const VariableBlocks& blocks);

/// The system of equations cutting out a variety in a product of
/// projective spaces.
struct VarietySpec {
    std::string name;
    VariableBlocks blocks;
    std::vector<MultiHomPoly> polys;

    /// Projective dimension of each factor.
    std::vector<unsigned> ambient() const;

    /// Stable textual form used for content addressing.
    std::string canonical_string() const;
};

/// "S", "X" or "fermat".
VarietySpec builtin_variety(std::string_view name);

/// {"name", "ambient", "vars", "polys"}; ambient must match the block sizes.
VarietySpec variety_from_json(std::string_view json_text);
VarietySpec load_variety_file(const std::string& path);

/// Builtin polynomials over the blocks (x,y,z | u,v,w).
MultiHomPoly surface_form_F();
MultiHomPoly surface_form_G();
/// The cubic x u^2 - u x^2 + y v^2 - v y^2 + z w^2 - z^2 w in P^5 with
/// coordinates ordered (x, u, y, v, z, w).
MultiHomPoly fourfold_form();
MultiHomPoly fermat_form();

} // namespace cfz
