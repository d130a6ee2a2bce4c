"""The :class:`Workbench` facade.

Every command line operation is a method here returning a
:class:`~wbench.exprio.Report`. Algebras are built lazily per mode and
rebuilt with a larger D-ring when an input needs higher D superscripts than
the current one carries.
"""

import logging
import time
from collections.abc import Callable, Iterable
from typing import Optional, Union

from .config import WorkbenchConfig
from .constants import (
    DEFAULT_CENTRAL_R_MAX,
    DEFAULT_CONFLUENCE_SAMPLES,
    DEFAULT_JACOBI_DEGREE_BOUND,
    DEFAULT_KLEINIAN_M,
    DEFAULT_SERIES_ORDER,
    MAX_SERIES_ORDER,
)
from .errors import InvalidArgument, SeriesCapacityExceeded
from .exactalg import Family, Generator
from .exprio import Atom, Report, format_expression, parse
from .exprio.ast import GENERATOR_ATOMS
from .exprio.elaborate import elaborate
from .invariants import (
    SymmetricContext,
    coinvariant_report,
    folding_degree_check,
    folding_pair,
    parse_type_rank,
    universality_report,
)
from .kleinian import build_kleinian, kleinian_report
from .yangian import (
    Mode,
    YangianAlgebra,
    build_algebra,
    central_element_closed_form,
    central_series_expand,
    confluence_check,
    default_probes,
    dimension_report,
    verify_centrality,
    verify_polynomial_center,
)

logger = logging.getLogger(__name__)

FORMULAS = ("corrected", "printed")


class Workbench:
    """
    A facade over every workbench operation.

    Example:
        >>> from wbench import Workbench
        >>> bench = Workbench(n=2)
        >>> bench.central(r_max=1).passed
        True

    Args:
        config (WorkbenchConfig, optional): The configuration; built from
            ``kwargs`` when omitted.
        **kwargs: Fields of :class:`~wbench.config.WorkbenchConfig`.
    """

    def __init__(self, config: Optional[WorkbenchConfig] = None, **kwargs):
        if config is not None and kwargs:
            raise InvalidArgument("pass either a configuration or keyword arguments, not both")
        self.config = config if config is not None else WorkbenchConfig(**kwargs)
        self._algebras: dict[Mode, YangianAlgebra] = {}
        self._series_order = DEFAULT_SERIES_ORDER

    @classmethod
    def from_env(cls, environment=None, **overrides) -> "Workbench":
        """
        Return a workbench configured from the environment.

        Example:
            >>> import wbench
            >>> bench = wbench.Workbench.from_env(n=3)

        Args:
            environment (dict, optional): The environment to read ``WBENCH_*``
                variables from. Defaults to ``os.environ`` after loading a
                ``.env`` file.
            **overrides: Configuration fields that win over the environment.
        """
        return cls(config=WorkbenchConfig.from_env(environment, **overrides))

    @property
    def algebra(self) -> YangianAlgebra:
        """The algebra in the configured mode, built on first use."""
        return self.algebra_for(self.config.mode)

    @property
    def series_order(self) -> int:
        """Largest D superscript the algebras of this workbench currently carry."""
        return self._series_order

    def algebra_for(self, mode: Union[Mode, str]) -> YangianAlgebra:
        mode = Mode.parse(mode)
        if mode not in self._algebras:
            self._algebras[mode] = build_algebra(
                self.config.n,
                mode,
                rules=self.config.rules_path,
                step_budget=self.config.step_budget,
                series_order=self._series_order,
            )
        return self._algebras[mode]

    def _grow_series(self, required: int) -> bool:
        """
        Make room for D superscripts up to ``required``.

        Returns:
            bool: False when ``required`` is already within the current capacity.

        Raises:
            SeriesCapacityExceeded: If ``required`` is beyond MAX_SERIES_ORDER.
        """
        if required > MAX_SERIES_ORDER:
            raise SeriesCapacityExceeded(required, MAX_SERIES_ORDER)
        if required <= self._series_order:
            return False
        order = min(max(required, 2 * self._series_order), MAX_SERIES_ORDER)
        logger.debug("growing the D-ring from %d to %d", self._series_order, order)
        self._series_order = order
        self._algebras.clear()
        return True

    def _timed(self, run: Callable[[], Report]) -> Report:
        start = time.perf_counter()
        while True:
            try:
                report = run()
                break
            except SeriesCapacityExceeded as exc:
                if not self._grow_series(exc.required):
                    raise
        if self.config.timing:
            report.millis = int((time.perf_counter() - start) * 1000)
        logger.debug("%s: %s", report.operation, report.status.value)
        return report

    def parse_generator(self, text: Union[str, Generator]) -> Generator:
        """Read a single generator such as ``E^3`` for the configured rank."""
        if isinstance(text, Generator):
            return self.algebra.alphabet.check(text)
        node = parse(text, self.config.n)
        if not isinstance(node, Atom) or node.name not in GENERATOR_ATOMS:
            raise InvalidArgument(f"{text!r} is not a single generator")
        return self.algebra.alphabet.check(Generator(Family.parse(node.name), node.index))

    def central(self, r_max: int = DEFAULT_CENTRAL_R_MAX, formula: str = "corrected") -> Report:
        """
        Compare the closed form of Z^(0) .. Z^(r_max) with the expanded series.

        Args:
            r_max (int): Largest coefficient index.
            formula (str): ``corrected`` or ``printed``; the printed variant
                drops the index offset in the binomial and disagrees with the
                series from r = 1 on.
        """
        if formula not in FORMULAS:
            raise InvalidArgument(f"formula must be one of {FORMULAS}, got {formula!r}")

        def run() -> Report:
            alg = self.algebra
            oracle = central_series_expand(alg, r_max)
            report = Report(
                "central",
                {"n": alg.n, "mode": alg.mode.value, "r_max": r_max, "formula": formula},
            )
            for expected in oracle:
                closed = central_element_closed_form(alg, expected.r, printed=formula == "printed")
                report.add(f"Z^{expected.r}", str(closed.as_polynomial), str(expected.as_polynomial))
            return report

        return self._timed(run)

    def verify(self, r: int = 1, probes: Optional[Iterable[Union[str, Generator]]] = None) -> Report:
        """Reduce [Z^(r), g] for each probe; the default probes are the lowest generators."""

        def run() -> Report:
            alg = self.algebra
            chosen = default_probes(alg) if probes is None else [self.parse_generator(p) for p in probes]
            return verify_centrality(alg, r, chosen, self.config.degree_bound)

        return self._timed(run)

    def confluence(self, samples: int = DEFAULT_CONFLUENCE_SAMPLES) -> Report:
        """Check (pq)r = p(qr) on ``samples`` seeded random triples within the degree bound."""
        return self._timed(
            lambda: confluence_check(self.algebra, self.config.degree_bound, samples, self.config.seed)
        )

    def dims(self, degree: Optional[int] = None) -> Report:
        """
        Graded dimensions up to ``degree`` (default: the degree bound).

        In the truncated modes the report also carries the vanishing checks
        on the central series.
        """
        degree = self.config.degree_bound if degree is None else degree

        def run() -> Report:
            alg = self.algebra
            report = dimension_report(alg, degree)
            if alg.mode.truncated:
                report.merge(verify_polynomial_center(alg, range(1, 2 * alg.n + 3)))
            return report

        return self._timed(run)

    def fold(self, type_rank: str) -> Report:
        """
        Compare fundamental degrees across a Dynkin folding.

        Args:
            type_rank (str): The folded type and rank, such as ``B2``.
        """
        return self._timed(lambda: folding_degree_check(folding_pair(*parse_type_rank(type_rank))))

    def table1(self, type_name: str, orbit_class: str) -> Report:
        """Look up whether an orbit class of a Lie type is universal."""
        return self._timed(lambda: universality_report(type_name, orbit_class))

    def coinv(self) -> Report:
        """Check the diagram involution on the elementary symmetric functions e_2 .. e_2n."""
        return self._timed(lambda: coinvariant_report(SymmetricContext(self.config.n)))

    def kleinian(
        self, m: int = DEFAULT_KLEINIAN_M, degree_bound: int = DEFAULT_JACOBI_DEGREE_BOUND
    ) -> Report:
        """
        Invariant ring and Poisson bracket of C^2 / (Z/m).

        Args:
            m (int): Order of the cyclic group.
            degree_bound (int): x,y-degree bound of the Jacobi identity check.
        """
        return self._timed(lambda: kleinian_report(build_kleinian(m), degree_bound))

    def nf(self, text: Union[str, bytes]) -> Report:
        """
        Parse ``text``, elaborate it in the configured algebra and reduce it.

        Raises:
            ExprSyntaxError: If ``text`` does not parse.
            RewriteBudgetExceeded: If expansion or rewriting exceeds the step budget.
            SeriesCapacityExceeded: If the input needs D superscripts past MAX_SERIES_ORDER.
        """

        def run() -> Report:
            alg = self.algebra
            source = text.decode("utf-8", errors="replace") if isinstance(text, bytes) else text
            value = elaborate(parse(text, alg.n), alg)
            reduced, steps = alg.normal_form_with_steps(value)
            report = Report("nf", {"n": alg.n, "mode": alg.mode.value, "expr": source})
            report.add(source, str(reduced))
            report.steps = steps
            return report

        return self._timed(run)

    def parse_check(self, text: Union[str, bytes]) -> Report:
        """Print the parsed tree and check that the printed text parses back to it."""

        def run() -> Report:
            source = text.decode("utf-8", errors="replace") if isinstance(text, bytes) else text
            tree = parse(text, self.config.n)
            printed = format_expression(tree)
            reparsed = parse(printed, self.config.n)
            report = Report("parse_check", {"n": self.config.n})
            report.add(source, printed, format_expression(reparsed), ok=reparsed == tree)
            return report

        return self._timed(run)
