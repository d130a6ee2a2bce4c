from .cpoly import CPolynomial, coefficients, rational_ring, transfer
from .generators import Alphabet, Family, Generator
from .ncpoly import IDENTITY, NCMonomial, NCPolynomial, nc_commutator, nc_mul
from .scalars import ExactScalar, as_scalar, binomial, format_scalar, from_qq, to_qq

__all__ = [
    "Alphabet",
    "CPolynomial",
    "ExactScalar",
    "Family",
    "Generator",
    "IDENTITY",
    "NCMonomial",
    "NCPolynomial",
    "as_scalar",
    "binomial",
    "coefficients",
    "format_scalar",
    "from_qq",
    "nc_commutator",
    "nc_mul",
    "rational_ring",
    "to_qq",
    "transfer",
]
