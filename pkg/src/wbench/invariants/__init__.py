"""Invariant theory: symmetric functions, Dynkin data, Molien series and the
universality table of Slodowy slices."""

from .dynkin import (
    DynkinDatum,
    FoldingPair,
    folding_degree_check,
    folding_pair,
    fundamental_degrees,
    lambda_partition,
    parse_type_rank,
    theorem_hypothesis,
    weyl_group_order,
)
from .molien import cartan_matrix, close_group, molien_degrees, weyl_group, weyl_group_generators
from .symmetric import (
    SymmetricContext,
    coinvariant_kernel_typeAB,
    coinvariant_report,
    elementary_symmetric,
    gamma_action_typeA,
    rho_shift,
)
from .universality import OrbitClass, table_row, universality_report, universality_table

__all__ = [
    "DynkinDatum",
    "FoldingPair",
    "OrbitClass",
    "SymmetricContext",
    "cartan_matrix",
    "close_group",
    "coinvariant_kernel_typeAB",
    "coinvariant_report",
    "elementary_symmetric",
    "folding_degree_check",
    "folding_pair",
    "fundamental_degrees",
    "gamma_action_typeA",
    "lambda_partition",
    "molien_degrees",
    "parse_type_rank",
    "rho_shift",
    "table_row",
    "theorem_hypothesis",
    "universality_report",
    "universality_table",
    "weyl_group",
    "weyl_group_generators",
    "weyl_group_order",
]
