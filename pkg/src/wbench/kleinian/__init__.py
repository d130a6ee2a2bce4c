from .ring import (
    KleinianRing,
    PoissonBracketTable,
    bracket_table,
    build_kleinian,
    degree_check,
    expected_brackets,
    from_invariants,
    generation_check,
    induced_bracket,
    invariant_monomials,
    is_invariant,
    jacobi_check,
    kleinian_report,
    poisson_ideal_check,
    to_invariants,
)

__all__ = [
    "KleinianRing",
    "PoissonBracketTable",
    "bracket_table",
    "build_kleinian",
    "degree_check",
    "expected_brackets",
    "from_invariants",
    "generation_check",
    "induced_bracket",
    "invariant_monomials",
    "is_invariant",
    "jacobi_check",
    "kleinian_report",
    "poisson_ideal_check",
    "to_invariants",
]
