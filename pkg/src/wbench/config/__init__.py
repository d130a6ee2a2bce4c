"""Configuration classes for workbench operations.

This module provides the configuration dataclass shared by the command line
front end and the :class:`wbench.client.Workbench` facade.
"""

from dataclasses import asdict, dataclass
from enum import Enum
from pathlib import Path
from typing import Optional, Union

from ..constants import (
    DEFAULT_DEGREE_BOUND,
    DEFAULT_MODE,
    DEFAULT_N,
    DEFAULT_OUTPUT,
    DEFAULT_SEED,
    DEFAULT_STEP_BUDGET,
    MINIMUM_N,
)
from ..errors import InvalidArgument
from ..utils import kwargs_from_env
from ..yangian import Mode


class OutputFormat(Enum):
    TEXT = "text"
    JSON = "json"

    @classmethod
    def parse(cls, value: Union[str, "OutputFormat"]) -> "OutputFormat":
        if isinstance(value, OutputFormat):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError as exc:
            raise InvalidArgument(f"unknown output format {value!r}; expected text or json") from exc


@dataclass
class WorkbenchConfig:
    """
    Configuration for workbench commands.

    Attributes:
        n (int): Rank parameter, at least 2.
        mode (Mode): Algebra mode. Strings ``full``, ``gl``, ``so`` are accepted.
        degree_bound (int): Canonical degree bound of the verification suites.
        seed (int): Seed of every randomized suite.
        output (OutputFormat): ``text`` or ``json``.
        step_budget (int): Rewrite steps allowed per normal form call.
        rules_path (Optional[str]): Rule file replacing the shipped relation table.
        timing (bool): Record wall time in reports.
        verbose (bool): Log at DEBUG level.
    """

    n: int = DEFAULT_N
    mode: Mode = DEFAULT_MODE
    degree_bound: int = DEFAULT_DEGREE_BOUND
    seed: int = DEFAULT_SEED
    output: OutputFormat = DEFAULT_OUTPUT
    step_budget: int = DEFAULT_STEP_BUDGET
    rules_path: Optional[str] = None
    timing: bool = False
    verbose: bool = False

    def __post_init__(self):
        self.mode = Mode.parse(self.mode)
        self.output = OutputFormat.parse(self.output)
        if not isinstance(self.n, int) or self.n < MINIMUM_N:
            raise InvalidArgument(f"n must be an integer >= {MINIMUM_N}, got {self.n!r}")
        if self.degree_bound < 0:
            raise InvalidArgument("degree_bound must be non-negative")
        if self.step_budget < 1:
            raise InvalidArgument("step_budget must be positive")
        if self.rules_path is not None:
            self.rules_path = str(Path(self.rules_path))

    @classmethod
    def from_env(cls, environment=None, **overrides) -> "WorkbenchConfig":
        """
        Build a configuration from the environment.

        Explicit ``overrides`` that are not ``None`` take precedence over the
        environment, which takes precedence over the defaults.
        """
        params = kwargs_from_env(environment)
        params.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**params)

    def asdict(self) -> dict:
        """The configuration as plain JSON-compatible values."""
        result = asdict(self)
        result["mode"] = self.mode.value
        result["output"] = self.output.value
        return result


__all__ = ["OutputFormat", "WorkbenchConfig"]
