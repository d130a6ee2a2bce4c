"""Symmetric functions on the Cartan of sl_2n and the diagram involution.

The ring is Q[x_1, ..., x_2n] / (x_1 + ... + x_2n), realized by eliminating
x_2n = -(x_1 + ... + x_2n-1), so every element is already reduced.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

from sympy.polys.rings import PolyRing

from ..constants import MINIMUM_N
from ..errors import DimensionMismatch, InvalidArgument, InvariantError
from ..exactalg import CPolynomial, rational_ring, to_qq
from ..exactalg.scalars import ScalarLike
from ..exprio.report import Report

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SymmetricContext:
    """
    The quotient ring of the type A_2n-1 Cartan.

    Attributes:
        n (int): Half the number of coordinates, at least 2.
        ring (PolyRing): Q[x_1 .. x_2n-1].
    """

    n: int
    ring: PolyRing = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < MINIMUM_N:
            raise InvalidArgument(f"n must be an integer >= {MINIMUM_N}, got {self.n!r}")
        names = tuple(f"x_{i}" for i in range(1, 2 * self.n))
        object.__setattr__(self, "ring", rational_ring(names))

    @property
    def size(self) -> int:
        return 2 * self.n

    def variable(self, i: int) -> CPolynomial:
        """x_i for 1 <= i <= 2n; x_2n is minus the sum of the others."""
        if not 1 <= i <= self.size:
            raise InvalidArgument(f"variable index must be in 1..{self.size}, got {i}")
        if i == self.size:
            return -sum(self.ring.gens, self.ring.zero)
        return self.ring.gens[i - 1]

    def variables(self) -> list[CPolynomial]:
        return [self.variable(i) for i in range(1, self.size + 1)]

    def bindings(self) -> dict[str, CPolynomial]:
        """Printed names of x_1 .. x_2n and e_0 .. e_2n, for expression elaboration."""
        names = {f"x_{i}": self.variable(i) for i in range(1, self.size + 1)}
        names.update({f"e_{j}": e for j, e in enumerate(_elementary(self))})
        return names


def _elementary(ctx: SymmetricContext) -> list[CPolynomial]:
    e = [ctx.ring.one] + [ctx.ring.zero] * ctx.size
    for x in ctx.variables():
        for j in range(ctx.size, 0, -1):
            e[j] = e[j] + x * e[j - 1]
    return e


def elementary_symmetric(ctx: SymmetricContext, j: int) -> CPolynomial:
    """
    The j-th elementary symmetric polynomial in x_1 .. x_2n, reduced.

    Raises:
        InvalidArgument: Unless 0 <= j <= 2n.
    """
    if not 0 <= j <= ctx.size:
        raise InvalidArgument(f"j must be in 0..{ctx.size}, got {j}")
    return _elementary(ctx)[j]


def gamma_action_typeA(ctx: SymmetricContext, p: CPolynomial) -> CPolynomial:
    """The diagram involution x_i -> -x_(2n+1-i), applied simultaneously."""
    if p.ring != ctx.ring:
        raise InvalidArgument("polynomial does not belong to this context's ring")
    images = [(ctx.ring.gens[i - 1], -ctx.variable(ctx.size + 1 - i)) for i in range(1, ctx.size)]
    return p.compose(images)


def coinvariant_kernel_typeAB(ctx: SymmetricContext) -> list[CPolynomial]:
    """
    Generators e_3, e_5, ..., e_2n-1 of the ideal spanned by z - z.gamma.

    Raises:
        InvariantError: If some returned e_j is not (e_j - e_j.gamma) / 2.
    """
    kernel = []
    for j in range(3, ctx.size, 2):
        e = elementary_symmetric(ctx, j)
        if e - gamma_action_typeA(ctx, e) != 2 * e:
            raise InvariantError(f"e_{j} is not anti-invariant under the involution")
        kernel.append(e)
    return kernel


def rho_shift(p: CPolynomial, rho: Sequence[ScalarLike]) -> CPolynomial:
    """
    The shift x_i -> x_i - rho_i on every variable of ``p``'s ring.

    Raises:
        DimensionMismatch: If ``rho`` does not have one entry per variable.
    """
    if len(rho) != p.ring.ngens:
        raise DimensionMismatch(p.ring.ngens, len(rho))
    images = [(x, x - to_qq(r)) for x, r in zip(p.ring.gens, rho)]
    return p.compose(images)


def coinvariant_report(ctx: SymmetricContext) -> Report:
    """e_j.gamma = (-1)^j e_j for 2 <= j <= 2n and the kernel generators."""
    report = Report("coinv", {"n": ctx.n})
    for j in range(2, ctx.size + 1):
        e = elementary_symmetric(ctx, j)
        image = gamma_action_typeA(ctx, e)
        if image == e:
            output = f"e_{j}"
        elif image == -e:
            output = f"-e_{j}"
        else:
            output = f"not a multiple of e_{j}"
        report.add(f"gamma(e_{j})", output, f"e_{j}" if j % 2 == 0 else f"-e_{j}")
    kernel = coinvariant_kernel_typeAB(ctx)
    names = ", ".join(f"e_{j}" for j in range(3, ctx.size, 2))
    report.add("kernel generators", f"({names})", ok=len(kernel) == ctx.n - 1)
    logger.debug("checked the involution on e_2 .. e_%d", ctx.size)
    return report
