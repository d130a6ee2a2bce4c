"""Structured reports produced by every verification operation.

A report serializes to JSON with exactly the keys ``schema_version``,
``operation``, ``params``, ``status``, ``witnesses``, ``steps`` and
``millis``. Expressions inside witnesses are always printed strings.
"""

import json
from dataclasses import asdict, dataclass, field
from enum import Enum
from functools import wraps
from typing import Any, Callable, Optional

from inflection import underscore

from ..constants import REPORT_SCHEMA_VERSION
from ..errors import InvalidArgument


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    ERROR = "error"


def preparse(func: Callable) -> Callable:
    """Hand the wrapped parser a shallow copy of its input dictionary."""

    @wraps(func)
    def wrapper(cls_or_self, data: dict[str, Any], *args, **kwargs) -> Any:
        return func(cls_or_self, dict(data), *args, **kwargs)

    return wrapper


def format_key_of_dict(
    data: dict[str, Any], format_func: Callable[[str], str] = underscore
) -> dict[str, Any]:
    return {format_func(key): value for key, value in data.items()}


@dataclass
class Witness:
    """
    One checked item of a report.

    Attributes:
        input (str): What was checked, as printed text.
        output (str): What the computation produced, as printed text.
        expected (str, optional): The value ``output`` had to equal.
        ok (bool): Whether the check held.
    """

    input: str
    output: str
    expected: Optional[str] = None
    ok: bool = True

    @classmethod
    @preparse
    def parse(cls, data: dict[str, Any]) -> "Witness":
        return cls(**format_key_of_dict(data))

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass
class Report:
    """
    Outcome of one workbench operation.

    ``status`` is derived from the witnesses unless it is set explicitly to
    ``error``: pass iff every witness is ok.
    """

    operation: str
    params: dict[str, Any] = field(default_factory=dict)
    witnesses: list[Witness] = field(default_factory=list)
    steps: int = 0
    millis: int = 0
    status: Status = Status.PASS
    schema_version: int = REPORT_SCHEMA_VERSION

    def __post_init__(self):
        self.status = Status(self.status)
        self.refresh_status()

    def refresh_status(self) -> "Report":
        if self.status is not Status.ERROR:
            failed = any(not w.ok for w in self.witnesses)
            self.status = Status.FAIL if failed else Status.PASS
        return self

    def add(
        self, input: str, output: str, expected: Optional[str] = None, ok: Optional[bool] = None
    ) -> Witness:
        """Append a witness; ``ok`` defaults to ``output == expected`` when expected is given."""
        if ok is None:
            ok = expected is None or output == expected
        witness = Witness(str(input), str(output), None if expected is None else str(expected), ok)
        self.witnesses.append(witness)
        self.refresh_status()
        return witness

    def fail(self, input: str, output: str, expected: Optional[str] = None) -> Witness:
        return self.add(input, output, expected, ok=False)

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    @property
    def failures(self) -> list[Witness]:
        return [w for w in self.witnesses if not w.ok]

    def merge(self, other: "Report") -> "Report":
        """Fold another report's witnesses and step count into this one."""
        self.witnesses.extend(other.witnesses)
        self.steps += other.steps
        if other.status is Status.ERROR:
            self.status = Status.ERROR
        return self.refresh_status()

    @classmethod
    @preparse
    def parse(cls, data: dict[str, Any]) -> "Report":
        data = format_key_of_dict(data)
        missing = {"operation", "status"} - data.keys()
        if missing:
            raise InvalidArgument(f"report is missing keys: {sorted(missing)}")
        data["witnesses"] = [Witness.parse(w) for w in data.get("witnesses", [])]
        status = data.pop("status")
        report = cls(**data)
        if status == Status.ERROR.value:
            report.status = Status.ERROR
        return report

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.parse(json.loads(text))

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema_version": self.schema_version,
            "operation": self.operation,
            "params": dict(self.params),
            "status": self.status.value,
            "witnesses": [w.to_dict() for w in self.witnesses],
            "steps": self.steps,
            "millis": self.millis,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False, allow_nan=False)

    def to_text(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        lines = [f"{self.operation}: {self.status.value}" + (f" ({params})" if params else "")]
        for witness in self.witnesses:
            mark = "ok " if witness.ok else "FAIL"
            line = f"  [{mark}] {witness.input} = {witness.output}"
            if witness.expected is not None and not witness.ok:
                line += f"  (expected {witness.expected})"
            lines.append(line)
        if self.steps:
            lines.append(f"  steps: {self.steps}")
        if self.millis:
            lines.append(f"  millis: {self.millis}")
        return "\n".join(lines)
