from __future__ import annotations

from .cochain import CochainCheck, coboundary, z5_cochain_check
from .cubic import (
    C2_VALUES,
    CubicForm,
    IndexCheck,
    LocalForm,
    c2_dot_h,
    check_hyperplane,
    compare_local,
    cubic_form_local_toric,
    cubic_form_global,
    edge_chain_identities,
    form_to_csv,
    form_to_json,
    generator_rank,
    grouped_table,
    hyperplane_products,
    index_consistency,
    pairing_matrix,
    rank_and_radical,
)
from .divisors import Divisor, DivisorSet, canonical_name, divisor_set
from .flop import FlopReport, flop, interior_rhombi, reassemble
from .saturation import (
    SaturationResult,
    cartan_check,
    check_toric_relations,
    fiber_cartan,
    fibers_orthogonal,
    line_coordinates,
    saturation_quotient,
    toric_relations,
    trapezoid_congruences,
)

__all__ = [
    "C2_VALUES",
    "CochainCheck",
    "CubicForm",
    "Divisor",
    "DivisorSet",
    "FlopReport",
    "IndexCheck",
    "LocalForm",
    "SaturationResult",
    "c2_dot_h",
    "canonical_name",
    "cartan_check",
    "check_hyperplane",
    "check_toric_relations",
    "coboundary",
    "compare_local",
    "cubic_form_local_toric",
    "cubic_form_global",
    "divisor_set",
    "edge_chain_identities",
    "fiber_cartan",
    "fibers_orthogonal",
    "flop",
    "form_to_csv",
    "form_to_json",
    "generator_rank",
    "grouped_table",
    "hyperplane_products",
    "index_consistency",
    "interior_rhombi",
    "line_coordinates",
    "pairing_matrix",
    "rank_and_radical",
    "reassemble",
    "saturation_quotient",
    "toric_relations",
    "trapezoid_congruences",
    "z5_cochain_check",
]
