"""Point counts and zeta data for a K3 surface and a cubic fourfold."""

from ._cfz import (
    BudgetExceeded,
    CfzError,
    DomainError,
    ParseError,
    VerificationError,
    algebraic_trace_split,
    ap_base,
    ap_via_eisenstein,
    associated_k3_degree,
    automorphism_group_order,
    count_fermat_cubic,
    count_points,
    count_S_fibered,
    count_pairsum_convolution,
    discriminant,
    fourfold_count_from_surface,
    hilbert_square_count,
    identify_form,
    is_decomposable,
    local_factor_cm,
    max_linear_subspace_dim,
    pluecker_relations,
    reconstruct_fourfold_count,
    special_admissible,
    trace_from_count,
    verify_pfaffian_map_identity,
)

__all__ = [name for name in dir() if not name.startswith("_")]
