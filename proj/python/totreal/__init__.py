"""Classification of totally real immersions and embeddings of closed
surfaces in the model complex surfaces, with exact index-set enumeration,
degree-system solving and numerical Maslov indices."""

from ._core import (
    Surface,
    Target,
    bdm_step,
    c1_eval,
    canonicalize,
    classify_report,
    connected_sum,
    d_set_contains,
    dvf_check,
    embedding_admissible,
    embedding_exists,
    euler_char,
    immersion_exists,
    intersection,
    iq_cardinality,
    iq_contains,
    iq_enumerate,
    iq_is_empty,
    is_solution,
    jacobian,
    ker_c1_mod2,
    maslov_index,
    modq_reduction_surjective,
    pontryagin_square,
    ppsss_formula,
    q_of,
    realized_by_embedding,
    sl2_realizer,
    solve_all,
    surface_params,
    table1,
    table2,
    total_mod2_degree,
    total_reality_check,
    trivial_modifications,
    w2_eval,
    winding_number,
    z_set,
    z_set_pairs,
)

__all__ = [
    "Surface",
    "Target",
    "bdm_step",
    "c1_eval",
    "canonicalize",
    "classify_report",
    "connected_sum",
    "d_set_contains",
    "dvf_check",
    "embedding_admissible",
    "embedding_exists",
    "euler_char",
    "immersion_exists",
    "intersection",
    "iq_cardinality",
    "iq_contains",
    "iq_enumerate",
    "iq_is_empty",
    "is_solution",
    "jacobian",
    "ker_c1_mod2",
    "maslov_index",
    "modq_reduction_surjective",
    "pontryagin_square",
    "ppsss_formula",
    "q_of",
    "realized_by_embedding",
    "sl2_realizer",
    "solve_all",
    "surface_params",
    "table1",
    "table2",
    "total_mod2_degree",
    "total_reality_check",
    "trivial_modifications",
    "w2_eval",
    "winding_number",
    "z_set",
    "z_set_pairs",
]
