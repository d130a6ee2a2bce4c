"""Type A Kleinian singularities C^2 / mu_m and their Poisson brackets.

The cyclic group mu_m acts by (x, y) -> (zeta x, zeta^-1 y). Its invariant
ring is generated by u = x^m, v = y^m and w = xy subject to uv = w^m. The
bracket is induced from {x, y} = 1 and has degree -2 for deg x = deg y = 1.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from sympy.polys.rings import PolyRing

from ..constants import DEFAULT_JACOBI_DEGREE_BOUND
from ..errors import InvalidArgument, InvariantError, ReexpressionError
from ..exactalg import CPolynomial, rational_ring
from ..exactalg.cpoly import is_homogeneous
from ..exprio.printer import format_cpolynomial
from ..exprio.report import Report

logger = logging.getLogger(__name__)

GENERATOR_NAMES = ("u", "v", "w")


@dataclass(frozen=True)
class KleinianRing:
    """
    The coordinate ring of the A_(m-1) singularity inside Q[x, y].

    Attributes:
        m (int): Order of the cyclic group, at least 2.
        plane (PolyRing): Q[x, y].
        invariants (PolyRing): Q[u, v, w].
    """

    m: int
    plane: PolyRing = field(init=False, repr=False, compare=False)
    invariants: PolyRing = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 2:
            raise InvalidArgument(f"m must be an integer >= 2, got {self.m!r}")
        object.__setattr__(self, "plane", rational_ring(("x", "y")))
        object.__setattr__(self, "invariants", rational_ring(GENERATOR_NAMES))

    @property
    def x(self) -> CPolynomial:
        return self.plane.gens[0]

    @property
    def y(self) -> CPolynomial:
        return self.plane.gens[1]

    @property
    def u(self) -> CPolynomial:
        return self.x**self.m

    @property
    def v(self) -> CPolynomial:
        return self.y**self.m

    @property
    def w(self) -> CPolynomial:
        return self.x * self.y

    def generators(self) -> dict[str, CPolynomial]:
        return {"u": self.u, "v": self.v, "w": self.w}

    @property
    def relation(self) -> CPolynomial:
        """uv - w^m in Q[u, v, w]."""
        u, v, w = self.invariants.gens
        return u * v - w**self.m

    def weights(self) -> tuple[int, int, int]:
        """Degrees of u, v, w for deg x = deg y = 1."""
        return (self.m, self.m, 2)


def build_kleinian(m: int) -> KleinianRing:
    """
    Construct the ring and check uv = w^m in Q[x, y].

    Raises:
        InvalidArgument: If m < 2.
    """
    ring = KleinianRing(m)
    if ring.u * ring.v != ring.w**m:
        raise InvariantError(f"uv != w^{m} in Q[x, y]")
    return ring


def is_invariant(ring: KleinianRing, p: CPolynomial) -> bool:
    """x^a y^b is invariant iff a = b mod m."""
    return all((a - b) % ring.m == 0 for (a, b), _ in p.terms())


def to_invariants(ring: KleinianRing, p: CPolynomial) -> CPolynomial:
    """
    Rewrite an invariant polynomial of Q[x, y] in u, v, w.

    The result contains no monomial divisible by uv, so it is the normal
    form modulo uv - w^m.

    Raises:
        ReexpressionError: If ``p`` is not invariant.
    """
    terms = {}
    for (a, b), coeff in p.terms():
        if (a - b) % ring.m:
            raise ReexpressionError(f"x^{a} y^{b} is not invariant under mu_{ring.m}")
        k = min(a, b)
        exponents = ((a - k) // ring.m, (b - k) // ring.m, k)
        terms[exponents] = terms.get(exponents, 0) + coeff
    return ring.invariants.from_dict(terms)


def from_invariants(ring: KleinianRing, p: CPolynomial) -> CPolynomial:
    """Expand a polynomial in u, v, w back into Q[x, y]."""
    result = ring.plane.zero
    for (i, j, k), coeff in p.terms():
        result += ring.u**i * ring.v**j * ring.w**k * coeff
    return result


def invariant_monomials(ring: KleinianRing, degree_bound: int) -> list[CPolynomial]:
    """The invariant monomials x^a y^b with a + b <= ``degree_bound``."""
    monomials = []
    for total in range(degree_bound + 1):
        for a in range(total, -1, -1):
            b = total - a
            if (a - b) % ring.m == 0:
                monomials.append(ring.x**a * ring.y**b)
    return monomials


def induced_bracket(ring: KleinianRing, p: CPolynomial, q: CPolynomial) -> CPolynomial:
    """{p, q} = p_x q_y - p_y q_x."""
    x, y = ring.x, ring.y
    return p.diff(x) * q.diff(y) - p.diff(y) * q.diff(x)


@dataclass(frozen=True)
class PoissonBracketTable:
    """
    Brackets of the invariant generators, as polynomials in u, v, w.

    Attributes:
        ring (KleinianRing): The ring the table belongs to.
        entries (dict[tuple[str, str], CPolynomial]): {a, b} for the pairs
            (w, u), (w, v) and (u, v).
    """

    ring: KleinianRing
    entries: dict

    def bracket(self, a: str, b: str) -> CPolynomial:
        if a == b:
            return self.ring.invariants.zero
        if (a, b) in self.entries:
            return self.entries[(a, b)]
        return -self.entries[(b, a)]

    def extend(self, f: CPolynomial, g: CPolynomial) -> CPolynomial:
        """The bracket on Q[u, v, w] extended from the table by the Leibniz rule."""
        gens = self.ring.invariants.gens
        result = self.ring.invariants.zero
        for a, ga in zip(GENERATOR_NAMES, gens):
            fa = f.diff(ga)
            if not fa:
                continue
            for b, gb in zip(GENERATOR_NAMES, gens):
                gb_derivative = g.diff(gb)
                if gb_derivative:
                    result += fa * gb_derivative * self.bracket(a, b)
        return result


def expected_brackets(ring: KleinianRing) -> dict[tuple[str, str], CPolynomial]:
    u, v, w = ring.invariants.gens
    m = ring.m
    return {
        ("w", "u"): -m * u,
        ("w", "v"): m * v,
        ("u", "v"): m**2 * w ** (m - 1),
    }


def bracket_table(ring: KleinianRing) -> PoissonBracketTable:
    """
    Compute {w,u}, {w,v} and {u,v} in Q[x, y] and re-express them in u, v, w.

    Raises:
        ReexpressionError: If a bracket is not invariant.
        InvariantError: If a bracket differs from -m u, m v, m^2 w^(m-1).
    """
    generators = ring.generators()
    expected = expected_brackets(ring)
    entries = {}
    for a, b in expected:
        entries[(a, b)] = to_invariants(ring, induced_bracket(ring, generators[a], generators[b]))
        if entries[(a, b)] != expected[(a, b)]:
            raise InvariantError(
                f"{{{a}, {b}}} = {format_cpolynomial(entries[(a, b)])}, "
                f"expected {format_cpolynomial(expected[(a, b)])}"
            )
    return PoissonBracketTable(ring, entries)


def jacobi_check(ring: KleinianRing, degree_bound: int = DEFAULT_JACOBI_DEGREE_BOUND) -> Report:
    """Jacobi identity on every triple of invariant monomials up to the bound."""
    monomials = invariant_monomials(ring, degree_bound)
    report = Report("jacobi", {"m": ring.m, "degree_bound": degree_bound})
    failures = 0
    triples = 0

    def br(p, q):
        return induced_bracket(ring, p, q)

    for a, b, c in combinations_with_replacement(monomials, 3):
        triples += 1
        total = br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b))
        if total:
            failures += 1
            report.fail(
                f"jacobi({format_cpolynomial(a)}, {format_cpolynomial(b)}, {format_cpolynomial(c)})",
                format_cpolynomial(total),
                "0",
            )
    report.add(f"{triples} triples", f"{failures} failures", "0 failures")
    logger.debug("jacobi: m=%d, %d triples", ring.m, triples)
    return report


def poisson_ideal_check(ring: KleinianRing) -> Report:
    """{g, uv - w^m} lies in the ideal (uv - w^m) of Q[u, v, w] for g = u, v, w."""
    table = bracket_table(ring)
    relation = ring.relation
    report = Report("poisson_ideal", {"m": ring.m})
    for name, g in zip(GENERATOR_NAMES, ring.invariants.gens):
        remainder = table.extend(g, relation).rem(relation)
        report.add(f"{{{name}, uv - w^{ring.m}}} mod (uv - w^{ring.m})", format_cpolynomial(remainder), "0")
    return report


def degree_check(ring: KleinianRing) -> Report:
    """Each generator bracket is homogeneous of degree deg a + deg b - 2."""
    generators = ring.generators()
    degrees = dict(zip(GENERATOR_NAMES, ring.weights()))
    report = Report("bracket_degree", {"m": ring.m})
    for a, b in combinations_with_replacement(GENERATOR_NAMES, 2):
        bracket = induced_bracket(ring, generators[a], generators[b])
        target = degrees[a] + degrees[b] - 2
        ok = not bracket or is_homogeneous(bracket, target)
        report.add(f"deg {{{a}, {b}}}", str(target) if ok else "inhomogeneous", ok=ok)
    return report


def generation_check(ring: KleinianRing, degree_bound: int) -> Report:
    """Every invariant monomial up to the bound is a polynomial in u, v, w."""
    report = Report("generation", {"m": ring.m, "degree_bound": degree_bound})
    for monomial in invariant_monomials(ring, degree_bound):
        back = from_invariants(ring, to_invariants(ring, monomial))
        report.add(format_cpolynomial(monomial), format_cpolynomial(back), format_cpolynomial(monomial))
    return report


def kleinian_report(ring: KleinianRing, degree_bound: int = DEFAULT_JACOBI_DEGREE_BOUND) -> Report:
    """Relation, bracket table, Jacobi identity, Poisson ideal and degrees in one report."""
    report = Report("kleinian", {"m": ring.m, "degree_bound": degree_bound})
    report.add(
        "uv",
        format_cpolynomial(ring.u * ring.v),
        format_cpolynomial(ring.w**ring.m),
    )
    table = bracket_table(ring)
    for (a, b), value in table.entries.items():
        report.add(f"{{{a}, {b}}}", format_cpolynomial(value))
    for check in (
        jacobi_check(ring, degree_bound),
        poisson_ideal_check(ring),
        degree_check(ring),
        generation_check(ring, degree_bound),
    ):
        report.merge(check)
    return report
