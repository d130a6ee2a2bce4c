"""Weyl groups as exact matrices and the Molien series of a finite group.

The Molien series (1/|G|) sum_g 1/det(1 - t g) of a reflection group is a
product of factors 1/(1 - t^d) over its fundamental degrees; matching that
product form recovers the degrees independently of the degree table.
"""

import logging
from collections import Counter, deque
from collections.abc import Iterable, Sequence
from math import prod
from typing import Optional

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.ring_series import rs_mul, rs_series_inversion

from ..constants import DEFAULT_MOLIEN_DEGREE_BOUND
from ..errors import GroupClosureError, InvalidArgument, ProductFormError
from ..exactalg import from_qq, rational_ring, to_qq
from .dynkin import validate_type, weyl_group_order

logger = logging.getLogger(__name__)


def cartan_matrix(type_name: str, rank: int) -> list[list[int]]:
    """
    Cartan matrix a_ij = <alpha_i^vee, alpha_j> with the usual numbering.

    B_n and C_n have their special node last; in D_n node n hangs off node
    n-2; E_n follows the numbering with node 2 attached to node 4.
    """
    type_name, rank = validate_type(type_name, rank)
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def link(i: int, j: int, aij: int = -1, aji: int = -1):
        a[i - 1][j - 1], a[j - 1][i - 1] = aij, aji

    if type_name in "ABC":
        for i in range(1, rank):
            link(i, i + 1)
        if type_name == "B":
            link(rank - 1, rank, -1, -2)
        elif type_name == "C":
            link(rank - 1, rank, -2, -1)
    elif type_name == "D":
        for i in range(1, rank - 1):
            link(i, i + 1)
        link(rank - 2, rank)
    elif type_name == "E":
        link(1, 3)
        link(2, 4)
        for i in range(3, rank):
            link(i, i + 1)
    elif type_name == "F":
        link(1, 2)
        link(2, 3, -1, -2)
        link(3, 4)
    else:
        link(1, 2, -1, -3)
    return a


def weyl_group_generators(type_name: str, rank: int) -> list[DomainMatrix]:
    """
    Simple reflections in the simple root basis.

    s_i(alpha_j) = alpha_j - a_ij alpha_i, so (S_i)_kj = delta_kj - delta_ki a_ij.
    """
    a = cartan_matrix(type_name, rank)
    generators = []
    for i in range(rank):
        rows = [
            [ZZ(int(k == j) - int(k == i) * a[i][j]) for j in range(rank)] for k in range(rank)
        ]
        generators.append(DomainMatrix(rows, (rank, rank), ZZ))
    return generators


def _key(matrix: DomainMatrix) -> tuple:
    return tuple(matrix.to_list_flat())


def close_group(
    generators: Sequence[DomainMatrix], limit: Optional[int] = None
) -> list[DomainMatrix]:
    """
    All products of ``generators``, by breadth-first search from the identity.

    Raises:
        GroupClosureError: If more than ``limit`` elements appear.
    """
    if not generators:
        raise InvalidArgument("a group needs at least one generator")
    generators = [g.to_dense() for g in generators]
    size = generators[0].shape[0]
    identity = DomainMatrix.eye(size, generators[0].domain).to_dense()
    seen = {_key(identity): identity}
    queue = deque([identity])
    while queue:
        element = queue.popleft()
        for generator in generators:
            product = element * generator
            key = _key(product)
            if key not in seen:
                seen[key] = product
                queue.append(product)
                if limit is not None and len(seen) > limit:
                    raise GroupClosureError(f"more than {limit} elements generated")
    logger.debug("closed a group of %d elements", len(seen))
    return list(seen.values())


def _check_closure(elements: Sequence[DomainMatrix]):
    given = {_key(g): g for g in elements}
    size = elements[0].shape[0]
    identity = _key(DomainMatrix.eye(size, elements[0].domain).to_dense())
    if identity not in given:
        raise GroupClosureError("the identity is missing")
    generators: list[DomainMatrix] = []
    closure: set = {identity}
    for key, g in given.items():
        if key in closure:
            continue
        generators.append(g)
        closure = {_key(h) for h in close_group(generators, limit=len(given))}
    if closure != set(given):
        raise GroupClosureError("the matrices are not closed under multiplication")


def weyl_group(type_name: str, rank: int) -> list[DomainMatrix]:
    """All elements of the Weyl group, checked against the order formula."""
    order = weyl_group_order(type_name, rank)
    elements = close_group(weyl_group_generators(type_name, rank), limit=order)
    if len(elements) != order:
        raise GroupClosureError(f"generated {len(elements)} elements, expected {order}")
    return elements


def molien_series(group_matrices: Iterable[DomainMatrix], prec: int):
    """
    The Molien series truncated below t^prec, as an element of Q[t].

    Elements sharing a characteristic polynomial contribute the same
    term, so each distinct det(1 - t g) is inverted once.
    """
    ring = rational_ring(("t",))
    t = ring.gens[0]
    classes: Counter = Counter()
    order = 0
    for g in group_matrices:
        classes[tuple(g.charpoly())] += 1
        order += 1
    if not order:
        raise InvalidArgument("the group is empty")
    total = ring.zero
    for coefficients, count in classes.items():
        # det(1 - t g) = sum_k c_k t^k when det(x - g) = sum_k c_k x^(d-k).
        denominator = sum(
            (to_qq(from_qq(c)) * t**k for k, c in enumerate(coefficients)), ring.zero
        )
        total += rs_series_inversion(denominator, t, prec) * QQ(count)
    return total * QQ(1, order), order


def product_form_degrees(series, prec: int) -> list[int]:
    """
    Degrees d_i with series = prod 1/(1 - t^d_i) below t^prec.

    Raises:
        ProductFormError: If no such product matches up to t^(prec-1).
    """
    ring = series.ring
    t = ring.gens[0]
    constant = from_qq(series[(0,)]) if (0,) in series else 0
    if constant != 1:
        raise ProductFormError("the series does not start with 1")
    degrees = []
    current = series
    for k in range(1, prec):
        value = from_qq(current[(k,)]) if (k,) in current else 0
        if value < 0 or value.denominator != 1:
            raise ProductFormError(f"coefficient {value} of t^{k} admits no product form")
        for _ in range(int(value)):
            degrees.append(k)
            current = rs_mul(current, ring.one - t**k, t, prec)
    if current != ring.one:
        raise ProductFormError(f"no product form matches below t^{prec}")
    return degrees


def molien_degrees(
    group_matrices: Sequence[DomainMatrix],
    degree_bound: int = DEFAULT_MOLIEN_DEGREE_BOUND,
    check_closure: bool = True,
) -> list[int]:
    """
    Fundamental degrees of a finite reflection group from its Molien series.

    Args:
        group_matrices (Sequence[DomainMatrix]): Every element of the group.
        degree_bound (int): Highest power of t scanned.
        check_closure (bool): Verify that the matrices form a group.

    Raises:
        GroupClosureError: If the matrices are not closed under multiplication.
        ProductFormError: If the series is not a product of 1/(1 - t^d)
            terms up to ``degree_bound``, or the degrees do not multiply to
            the group order with one degree per dimension.
    """
    group_matrices = list(group_matrices)
    if not group_matrices:
        raise InvalidArgument("the group is empty")
    if check_closure:
        _check_closure(group_matrices)
    series, order = molien_series(group_matrices, degree_bound + 1)
    degrees = product_form_degrees(series, degree_bound + 1)
    dimension = group_matrices[0].shape[0]
    if len(degrees) != dimension or prod(degrees) != order:
        raise ProductFormError(
            f"degrees {degrees} do not fit a reflection group of order {order} "
            f"in dimension {dimension}"
        )
    return degrees
