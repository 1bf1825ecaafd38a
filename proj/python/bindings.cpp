#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cfz/cm_forms.hpp"
#include "cfz/error.hpp"
#include "cfz/grassmannian.hpp"
#include "cfz/lattice.hpp"
#include "cfz/point_count.hpp"
#include "cfz/symbolic_checks.hpp"
#include "cfz/zeta.hpp"

namespace py = pybind11;
using namespace cfz;

namespace {

py::dict record_dict(const CountRecord& r)
{
    py::dict d;
    d["variety"] = r.variety;
    d["p"] = r.p;
    d["k"] = r.k;
    d["count"] = r.count;
    d["method"] = to_string(r.method);
    return d;
}

const char* status_name(Identification::Status s)
{
    switch (s) {
    case Identification::Status::unique: return "unique";
    case Identification::Status::ambiguous: return "ambiguous";
    case Identification::Status::no_match: return "no match";
    }
    return "?";
}

} // namespace

PYBIND11_MODULE(_cfz, m)
{
    m.doc() = "Bindings for the cfz C++ library";

    auto base = py::register_exception<Error>(m, "CfzError", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
    py::register_exception<VerificationError>(m, "VerificationError", base.ptr());
    py::register_exception<FieldError>(m, "FieldError", base.ptr());

    m.def(
        "count_points",
        [](const std::string& variety, std::uint32_t p, unsigned k, std::uint64_t budget, unsigned workers) {
            py::gil_scoped_release release;
            auto r = count_points_generic(builtin_variety(variety), p, k, {budget, workers});
            py::gil_scoped_acquire acquire;
            return record_dict(r);
        },
        py::arg("variety"), py::arg("p"), py::arg("k") = 1, py::arg("budget") = 1'000'000'000ULL,
        py::arg("workers") = 1, "Generic enumeration count of a builtin variety ('S', 'X' or 'fermat').");
    m.def(
        "count_S_fibered", [](std::uint32_t p, unsigned k) { return record_dict(count_S_fibered(p, k)); },
        py::arg("p"), py::arg("k") = 1);
    m.def(
        "count_pairsum_convolution", [](std::uint32_t p) { return record_dict(count_pairsum_convolution(p)); },
        py::arg("p"));
    m.def("count_fermat_cubic", [](std::uint32_t p) { return record_dict(count_fermat_cubic(p)); }, py::arg("p"));

    m.def(
        "trace_from_count",
        [](std::int64_t n1, std::uint32_t p) {
            const auto r = trace_from_count(n1, p);
            py::dict d;
            d["p"] = r.p;
            d["t2"] = r.t2;
            d["residue"] = r.residue;
            return d;
        },
        py::arg("n1"), py::arg("p"));
    m.def("hilbert_square_count", &hilbert_square_count, py::arg("n1"), py::arg("n2"), py::arg("p"));
    m.def("fourfold_count_from_surface", &fourfold_count_from_surface, py::arg("n1"), py::arg("p"));
    m.def("algebraic_trace_split", &algebraic_trace_split, py::arg("t2"), py::arg("a_p"), py::arg("p"));
    m.def(
        "local_factor_cm",
        [](std::int64_t a, std::uint32_t p, int shift) { return local_factor_cm(a, p, shift).coeffs; },
        py::arg("a_p"), py::arg("p"), py::arg("tate_shift") = 0, "Ascending coefficients of the quadratic factor.");
    m.def(
        "reconstruct_fourfold_count",
        [](std::uint32_t p, std::int64_t a_p, int ns_fixed, unsigned k) {
            return reconstruct_count(assemble_fourfold_factors(p, a_p, ns_fixed), k);
        },
        py::arg("p"), py::arg("a_p"), py::arg("ns_fixed") = 20, py::arg("k") = 1);

    m.def("ap_base", &ap_base, py::arg("p"));
    m.def("ap_via_eisenstein", &ap_via_eisenstein, py::arg("p"));
    m.def(
        "identify_form",
        [](const std::vector<std::pair<std::uint32_t, std::int64_t>>& residues, const std::string& embedding) {
            EmbeddingPolicy policy;
            if (embedding == "declared")
                policy = EmbeddingPolicy::declared;
            else if (embedding == "existential")
                policy = EmbeddingPolicy::existential;
            else
                throw DomainError("embedding must be 'declared' or 'existential'");
            const auto id = identify_form(residues, policy);
            py::dict d;
            d["status"] = status_name(id.status);
            d["match"] = id.match ? py::cast(*id.match) : py::none();
            d["candidates"] = id.candidates;
            d["checked_primes"] = id.checked_primes;
            d["embedding_choices"] = id.embedding_choices;
            return d;
        },
        py::arg("residues"), py::arg("embedding") = "declared");

    m.def(
        "discriminant", [](std::int64_t h2T, std::int64_t TT) { return discriminant({h2T, TT}); }, py::arg("h2T"),
        py::arg("TT"));
    m.def("special_admissible", &special_admissible, py::arg("d"));
    m.def("associated_k3_degree", &associated_k3_degree, py::arg("d"));

    m.def(
        "pluecker_relations",
        [](unsigned k, unsigned n) {
            std::vector<std::string> out;
            for (const auto& r : pluecker_relations(k, n)) out.push_back(to_string(r, k, n));
            return out;
        },
        py::arg("k"), py::arg("n"));
    m.def(
        "is_decomposable",
        [](unsigned k, unsigned n, std::uint32_t q, const std::vector<std::vector<unsigned>>& wedges) {
            return is_decomposable(pluecker_from_terms(k, n, q, wedges));
        },
        py::arg("k"), py::arg("n"), py::arg("q"), py::arg("wedges"),
        "Whether a sum of basis wedges such as [[0, 1], [2, 3]] is decomposable.");
    m.def(
        "max_linear_subspace_dim",
        [](unsigned k, unsigned n, std::uint32_t q) {
            const auto r = max_linear_subspace_dim(k, n, q);
            py::dict d;
            d["max_dim"] = r.max_dim;
            d["witness_family"] = to_string(r.witness().family);
            d["maximal_subspaces"] = r.maximal.size();
            d["pencils"] = r.count(SubspaceFamily::pencil);
            d["coplanar"] = r.count(SubspaceFamily::coplanar);
            std::vector<std::vector<std::int64_t>> basis;
            for (const auto& v : r.witness().basis) basis.push_back(v.coords);
            d["witness_basis"] = basis;
            return d;
        },
        py::arg("k"), py::arg("n"), py::arg("q"));

    m.def("verify_pfaffian_map_identity", [] { return verify_pfaffian_map_identity().passed(); });
    m.def(
        "automorphism_group_order",
        [](const std::vector<unsigned>& pairs) {
            std::vector<ProjectiveMatrix> gens;
            for (auto i : pairs) {
                gens.push_back(pair_swap(i));
                gens.push_back(pair_rotation(i));
            }
            if (gens.empty()) gens.push_back(ProjectiveMatrix::identity());
            return automorphism_subgroup(gens, fourfold_form()).order;
        },
        py::arg("pairs"), "Order of the group generated by the swap and rotation on the given coordinate pairs.");
}
