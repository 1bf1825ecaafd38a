#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cfz/finite_field.hpp"
#include "cfz/variety.hpp"

namespace cfz {

enum class CountMethod { generic, fibered, convolution };

std::string to_string(CountMethod m);
CountMethod count_method_from_string(std::string_view s);

struct CountRecord {
    std::string variety;
    std::uint32_t p = 0;
    unsigned k = 1;
    std::uint64_t count = 0;
    CountMethod method = CountMethod::generic;

    friend bool operator==(const CountRecord&, const CountRecord&) = default;
};

struct CountOptions {
    /// Upper bound on (points enumerated) x (equations per point).
    std::uint64_t budget = 1'000'000'000;
    /// Worker threads; the first projective factor is split into contiguous ranges.
    unsigned workers = 1;
};

/// Size of the product of projective spaces for `spec` over F_q.
std::uint64_t enumeration_size(const VarietySpec& spec, std::uint64_t q);

/// Full enumeration of the product of projective spaces.
CountRecord count_points_generic(const VarietySpec& spec, const FieldPtr& field, const CountOptions& opts = {});
CountRecord count_points_generic(const VarietySpec& spec, std::uint32_t p, unsigned k = 1, const CountOptions& opts = {});

/// The rational points themselves, each as the concatenation of the
/// normalized block coordinates, in enumeration order.
std::vector<std::vector<FiniteField::Rep>> list_points_generic(const VarietySpec& spec, const FieldPtr& field,
                                                                const CountOptions& opts = {});

/// Number of zeros in F_q^{N} of a single-block homogeneous system.
std::uint64_t count_affine_cone(const VarietySpec& spec, const FieldPtr& field, const CountOptions& opts = {});

/// Counts the surface F = G = 0 in P^2 x P^2 by fibering over [x:y:z]:
/// G is linear in (u,v,w) so each fiber is a line, and F restricted to that
/// line is a binary quadratic form.
CountRecord count_S_fibered(const FieldPtr& field);
CountRecord count_S_fibered(std::uint32_t p, unsigned k = 1);

/// H[v] = number of affine points where a form takes the value v in F_p.
using ValueHistogram = std::vector<std::uint64_t>;

ValueHistogram value_histogram(const MultiHomPoly& form, std::uint32_t p);

/// Additive (cyclic mod p) convolution of two histograms.
ValueHistogram convolve(const ValueHistogram& a, const ValueHistogram& b);

/// Splits a single-block polynomial into summands in pairwise disjoint
/// variable sets, each returned as a form in its own variables.
std::vector<MultiHomPoly> split_separable(const MultiHomPoly& form);

/// Projective count of sum_i g_i = 0 where each g_i is a homogeneous form in
/// its own variables (all of a common degree), via convolution of the value
/// histograms.
CountRecord count_separable_convolution(std::span<const MultiHomPoly> summands, std::uint32_t p,
                                        std::string name);

/// Two-variable summands only.
CountRecord count_pairsum_convolution(std::span<const MultiHomPoly> pair_forms, std::uint32_t p,
                                      std::string name = "X");
/// The fourfold X, split into its (x,u), (y,v), (z,w) parts.
CountRecord count_pairsum_convolution(std::uint32_t p);

/// u^3+v^3+w^3+x^3+y^3+z^3 via six-fold convolution of the cube histogram.
CountRecord count_fermat_cubic(std::uint32_t p);

struct SmoothnessReport {
    std::uint32_t p = 0;
    unsigned k = 1;
    std::uint64_t points = 0;
    std::uint64_t singular = 0;
};

/// Jacobian-criterion check at every F_q-point of a complete intersection.
/// Only detects singular points that are rational over F_q.
SmoothnessReport check_smoothness(const VarietySpec& spec, const FieldPtr& field, const CountOptions& opts = {});

} // namespace cfz
