from enum import Enum
from typing import Dict

from ..errors import (
    ExprSyntaxError,
    InadmissibleGenerator,
    InconsistentQuery,
    InvalidArgument,
    RewriteBudgetExceeded,
    RuleTableError,
)


class ExitCode(Enum):
    """Enumeration of workbench exit codes and their meanings."""

    SUCCESS = 0
    GENERAL_ERROR = 1
    MATHEMATICAL_FAILURE = 2
    BUDGET_EXCEEDED = 3
    USAGE_ERROR = 4

    @classmethod
    def get_message(cls, code: int) -> str:
        """Get the human-readable message for an exit code."""
        messages: Dict[int, str] = {
            cls.SUCCESS.value: "All checks passed.",
            cls.GENERAL_ERROR.value: "An unexpected error occurred.",
            cls.MATHEMATICAL_FAILURE.value: "A mathematical check failed.",
            cls.BUDGET_EXCEEDED.value: "A rewrite step budget was exhausted.",
            cls.USAGE_ERROR.value: "Invalid arguments or unparsable input.",
        }
        return messages.get(code, f"Unknown exit code: {code}")

    @classmethod
    def is_error(cls, code: int) -> bool:
        """Check if an exit code indicates an error."""
        return code != cls.SUCCESS.value

    @classmethod
    def for_exception(cls, exc: BaseException) -> "ExitCode":
        """Map an exception raised by a command to its exit code."""
        if isinstance(exc, RewriteBudgetExceeded):
            return cls.BUDGET_EXCEEDED
        if isinstance(
            exc,
            (
                ExprSyntaxError,
                InvalidArgument,
                InadmissibleGenerator,
                InconsistentQuery,
                RuleTableError,
            ),
        ):
            return cls.USAGE_ERROR
        return cls.GENERAL_ERROR
