"""Verification suites over a :class:`~wbench.yangian.algebra.YangianAlgebra`.

Every suite returns a :class:`~wbench.exprio.report.Report`. A mathematical
failure is a failed witness, never an exception; only budget exhaustion and
invalid arguments raise.
"""

import logging
import random
from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import Optional

from sympy.polys.ring_series import rs_mul, rs_series_inversion

from ..constants import DEFAULT_CONFLUENCE_SAMPLES, DEFAULT_DEGREE_BOUND, DEFAULT_SEED
from ..errors import InvalidArgument
from ..exactalg import Family, Generator, NCMonomial, NCPolynomial, from_qq, rational_ring
from ..exprio.report import Report
from .algebra import Mode, YangianAlgebra
from .central import central_element_closed_form

logger = logging.getLogger(__name__)


def _params(alg: YangianAlgebra, **extra) -> dict:
    return {"n": alg.n, "mode": alg.mode.value, **extra}


def verify_commutes(
    alg: YangianAlgebra,
    element: NCPolynomial,
    probes: Iterable[Generator],
    label: Optional[str] = None,
) -> Report:
    """Check that ``element`` commutes with every probe after reduction."""
    label = label or str(element)
    probes = list(probes)
    report = Report("commutes", _params(alg, element=label, probes=[str(g) for g in probes]))
    for probe in probes:
        g = NCPolynomial.generator(alg.alphabet.check(probe), alg.alphabet)
        reduced, steps = alg.normal_form_with_steps(element * g - g * element)
        report.steps += steps
        report.add(f"[{label}, {probe}]", str(reduced), "0")
    return report


def verify_centrality(
    alg: YangianAlgebra,
    r: int,
    probe_generators: Iterable[Generator],
    degree_bound: int = DEFAULT_DEGREE_BOUND,
) -> Report:
    """
    Reduce [Z^(r), g] for every probe g; pass iff all vanish.

    Raises:
        InvalidArgument: If r plus a probe degree exceeds ``degree_bound``.
        RewriteBudgetExceeded: If a reduction runs out of steps.
    """
    probes = list(probe_generators)
    for probe in probes:
        if r + probe.degree > degree_bound:
            raise InvalidArgument(
                f"[Z^{r}, {probe}] has degree {r + probe.degree} above the bound {degree_bound}"
            )
    z = central_element_closed_form(alg, r)
    report = verify_commutes(alg, z.as_polynomial, probes, label=f"Z^{r}")
    report.operation = "centrality"
    report.params = _params(
        alg, r=r, probes=[str(g) for g in probes], degree_bound=degree_bound
    )
    return report


class _RandomElements:
    """Seeded random elements of bounded degree over the algebra's alphabet."""

    def __init__(self, alg: YangianAlgebra, rng: random.Random):
        self.alg = alg
        self.rng = rng

    def _letters(self, budget: int) -> list[Generator]:
        return [
            Generator(family, r)
            for family in Family
            for r in range(self.alg.alphabet.min_superscript(family), budget + 1)
        ]

    def word(self, degree: int) -> tuple[Generator, ...]:
        letters = []
        remaining = degree
        while remaining > 0:
            choices = self._letters(remaining)
            if not choices or self.rng.random() < 0.25:
                break
            letter = self.rng.choice(choices)
            letters.append(letter)
            remaining -= letter.degree
        return tuple(letters)

    def coefficient(self) -> Fraction:
        numerator = self.rng.choice([-3, -2, -1, 1, 2, 3])
        return Fraction(numerator, self.rng.randint(1, 3))

    def element(self, degree: int) -> NCPolynomial:
        terms: dict[NCMonomial, Fraction] = {}
        for _ in range(self.rng.randint(1, 3)):
            monomial = NCMonomial(self.word(degree))
            terms[monomial] = terms.get(monomial, 0) + self.coefficient()
        return NCPolynomial(terms, self.alg.alphabet)

    def split(self, degree_bound: int, parts: int) -> list[int]:
        cuts = sorted(self.rng.randint(0, degree_bound) for _ in range(parts))
        return [b - a for a, b in zip([0] + cuts, cuts)]


def confluence_check(
    alg: YangianAlgebra,
    degree_bound: int = DEFAULT_DEGREE_BOUND,
    samples: int = DEFAULT_CONFLUENCE_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> Report:
    """
    Associativity of reduced products and idempotence of the normal form.

    For each sampled triple p, q, r (total degree at most ``degree_bound``)
    checks nf(nf(pq) r) == nf(p nf(qr)) and nf(nf(p)) == nf(p). The first
    sample is always the triple (1, 1, 1).
    """
    if samples < 0 or degree_bound < 0:
        raise InvalidArgument("samples and degree_bound must be non-negative")
    rng = random.Random(seed)
    draw = _RandomElements(alg, rng)
    report = Report(
        "confluence", _params(alg, degree_bound=degree_bound, samples=samples, seed=seed)
    )
    failures = 0
    for index in range(samples):
        if index == 0:
            p = q = r = NCPolynomial.one(alg.alphabet)
        else:
            p, q, r = (draw.element(d) for d in draw.split(degree_bound, 3))
        left, s1 = alg.normal_form_with_steps(alg.normal_form(p * q) * r)
        right, s2 = alg.normal_form_with_steps(p * alg.normal_form(q * r))
        report.steps += s1 + s2
        if left != right:
            failures += 1
            report.fail(f"(({p}) * ({q})) * ({r})", str(left), str(right))
        reduced = alg.normal_form(p)
        if alg.normal_form(reduced) != reduced or not alg.is_normal(reduced):
            failures += 1
            report.fail(f"nf(nf({p}))", str(alg.normal_form(reduced)), str(reduced))
    report.add(f"{samples} sampled triples", f"{failures} failures", "0 failures")
    logger.debug("confluence: %d samples, %d failures, %d steps", samples, failures, report.steps)
    return report


def graded_dimension(alg: YangianAlgebra, degree: int) -> list[int]:
    """
    Number of PBW basis words of each canonical degree 0..``degree``.

    The basis words are the ordered words in the free generators, so the
    counts are those of the free commutative monoid on the generator degrees.
    In FULL mode the counts are those of the full PBW monoid; a warning is
    logged since they do not describe a truncated quotient.
    """
    if degree < 0:
        raise InvalidArgument(f"degree must be non-negative, got {degree}")
    if alg.mode is Mode.FULL:
        logger.warning("graded dimensions in FULL mode count the full PBW monoid")
    counts = [1] + [0] * degree
    for generator in alg.surviving_generators(degree):
        for d in range(generator.degree, degree + 1):
            counts[d] += counts[d - generator.degree]
    return counts


def _series_counts(degrees: Sequence[int], degree: int) -> list[int]:
    ring = rational_ring(("t",))
    t = ring.gens[0]
    prec = degree + 1
    series = ring.one
    for d in degrees:
        series = rs_mul(series, rs_series_inversion(ring.one - t**d, t, prec), t, prec)
    return [int(from_qq(series[(k,)])) if (k,) in series else 0 for k in range(prec)]


def dimension_report(alg: YangianAlgebra, degree: int) -> Report:
    """
    Graded dimensions cross-checked against the product of 1/(1 - t^d).

    Also checks that every free generator is its own normal form, so that
    the presentation does not collapse further than intended.
    """
    generators = alg.surviving_generators(degree)
    degrees = [g.degree for g in generators]
    report = Report(
        "dims",
        _params(alg, degree=degree, generators=[str(g) for g in generators]),
    )
    counts = graded_dimension(alg, degree)
    expected = _series_counts(degrees, degree)
    report.add("graded dimensions", str(counts), str(expected))
    for generator in generators:
        g = NCPolynomial.generator(generator, alg.alphabet)
        report.add(f"nf({generator})", str(alg.normal_form(g)), str(g))
    return report


def verify_polynomial_center(alg: YangianAlgebra, r_values: Iterable[int]) -> Report:
    """
    Truncated-mode checks on the central series.

    Z^(r) must reduce to 0 for r > 2n, and in TRUNCATED_GL mode Z^(1) must
    reduce to a scalar plus a degree-1 element. In TRUNCATED_SO mode the
    imposed Z^(2r-1), r = 1..n, must reduce to 0 as well.
    """
    if not alg.mode.truncated:
        raise InvalidArgument("the polynomial center check needs a truncated mode")
    r_values = sorted(set(r_values))
    report = Report("polynomial_center", _params(alg, r_values=r_values))
    for r in r_values:
        reduced, steps = alg.normal_form_with_steps(central_element_closed_form(alg, r).as_polynomial)
        report.steps += steps
        if r > 2 * alg.n or (alg.mode is Mode.TRUNCATED_SO and r % 2 == 1 and r < 2 * alg.n):
            report.add(f"Z^{r}", str(reduced), "0")
        elif r == 1 and alg.mode is Mode.TRUNCATED_GL:
            ok = reduced.degree is not None and reduced.degree <= 1
            report.add(f"Z^{r}", str(reduced), ok=ok)
        else:
            report.add(f"Z^{r}", str(reduced))
    return report


def default_probes(alg: YangianAlgebra) -> list[Generator]:
    """D1^1, D1^2, D2^1, D2^2, the two lowest E's and F^1, F^2."""
    e = alg.alphabet.min_superscript(Family.E)
    return [
        Generator(Family.D1, 1),
        Generator(Family.D1, 2),
        Generator(Family.D2, 1),
        Generator(Family.D2, 2),
        Generator(Family.E, e),
        Generator(Family.E, e + 1),
        Generator(Family.F, 1),
        Generator(Family.F, 2),
    ]
