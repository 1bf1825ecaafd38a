import pytest

import cfz


def test_surface_counts():
    assert [cfz.count_S_fibered(p)["count"] for p in (7, 13, 19, 31, 37)] == [177, 429, 753, 1536, 2157]
    assert cfz.count_points("S", 7)["count"] == 177
    assert cfz.count_S_fibered(7, 2)["count"] == 3453


def test_residues_and_identification():
    residues = [(p, cfz.trace_from_count(cfz.count_S_fibered(p)["count"], p)["residue"]) for p in (7, 13, 19, 31, 37)]
    assert [r for _, r in residues] == [1, 12, 11, 16, 10]
    result = cfz.identify_form(residues)
    assert result["status"] == "unique"
    assert result["match"] == 0
    assert cfz.identify_form([(5, 0), (11, 0)])["status"] == "ambiguous"
    assert cfz.identify_form([(7, 2)])["match"] == 1


def test_fourfold():
    assert cfz.count_fermat_cubic(7)["count"] == 3690
    assert cfz.count_pairsum_convolution(13)["count"] == 34308
    assert cfz.fourfold_count_from_surface(177, 7) == 3690
    assert cfz.reconstruct_fourfold_count(7, -13) == 3690
    assert cfz.local_factor_cm(-13, 7, 1) == [1, 91, 2401]
    assert cfz.hilbert_square_count(177, 3453, 7) == 18630


def test_forms():
    assert cfz.ap_base(7) == -13
    assert all(cfz.ap_via_eisenstein(p) == cfz.ap_base(p) for p in (7, 13, 19, 31, 37, 43))


def test_lattice_and_grassmannian():
    assert cfz.discriminant(4, 10) == 14
    assert cfz.special_admissible(14)
    assert cfz.associated_k3_degree(26) == 3
    assert cfz.associated_k3_degree(20) is None
    assert cfz.pluecker_relations(1, 3) == ["p01*p23 - p02*p13 + p03*p12"]
    assert not cfz.is_decomposable(1, 3, 5, [[0, 1], [2, 3]])
    report = cfz.max_linear_subspace_dim(1, 4, 2)
    assert report["max_dim"] == 3
    assert report["witness_family"] == "pencil"


def test_symbolic():
    assert cfz.verify_pfaffian_map_identity()
    assert cfz.automorphism_group_order([0]) == 6
    assert cfz.automorphism_group_order([0, 1, 2]) == 216
    assert cfz.automorphism_group_order([]) == 1


def test_errors():
    with pytest.raises(cfz.DomainError, match="4 is not prime"):
        cfz.count_S_fibered(4)
    with pytest.raises(cfz.BudgetExceeded):
        cfz.count_points("X", 13, budget=10)
    with pytest.raises(cfz.CfzError):
        cfz.trace_from_count(177, 3)
