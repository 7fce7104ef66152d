from __future__ import annotations

from .core import (
    IntMatrix,
    LatticeVector,
    conjugate,
    content,
    determinant,
    diagonal,
    identity,
    is_primitive,
    is_unimodular,
    is_unipotent,
    matrix_power,
    primitive_part,
    product,
    stack,
    trace,
    transpose_inverse,
    zeros,
)
from .snf import (
    EchelonResult,
    SnfResult,
    complete_basis,
    elementary_divisors,
    hermite_rows,
    inverse_unimodular,
    kernel_saturated,
    no_invariants_mod_any_n,
    rank,
    row_echelon,
    smith_normal_form,
    solve_integer,
    trivial_invariants_all_n,
)

__all__ = [
    "EchelonResult",
    "IntMatrix",
    "LatticeVector",
    "SnfResult",
    "complete_basis",
    "conjugate",
    "content",
    "determinant",
    "diagonal",
    "elementary_divisors",
    "hermite_rows",
    "identity",
    "inverse_unimodular",
    "is_primitive",
    "is_unimodular",
    "is_unipotent",
    "kernel_saturated",
    "matrix_power",
    "no_invariants_mod_any_n",
    "primitive_part",
    "product",
    "rank",
    "row_echelon",
    "smith_normal_form",
    "solve_integer",
    "stack",
    "trace",
    "transpose_inverse",
    "trivial_invariants_all_n",
    "zeros",
]
