class WorkbenchException(Exception):
    """
    A base class from which all other exceptions inherit.

    If you want to catch all errors that the workbench might raise,
    catch this base exception.
    """


class InvalidArgument(WorkbenchException, ValueError):
    pass


class DimensionMismatch(InvalidArgument):
    def __init__(self, expected: int, actual: int):
        self.expected = expected
        self.actual = actual

    def __str__(self):
        return f"expected {self.expected} coordinates, got {self.actual}"


class AlphabetMismatch(WorkbenchException):
    def __init__(self, left, right):
        self.left = left
        self.right = right

    def __str__(self):
        return f"generator alphabets differ: {self.left} vs {self.right}"


class SeriesCapacityExceeded(InvalidArgument):
    def __init__(self, required: int, capacity: int):
        self.required = required
        self.capacity = capacity

    def __str__(self):
        return f"superscript {self.required} exceeds the D-ring capacity {self.capacity}"


class InadmissibleGenerator(WorkbenchException, ValueError):
    pass


class RuleTableError(WorkbenchException):
    def __init__(self, msg: str, line: int = None):
        self.msg = msg
        self.line = line

    def __str__(self):
        if self.line is None:
            return self.msg
        return f"line {self.line}: {self.msg}"


class RewriteBudgetExceeded(WorkbenchException):
    def __init__(self, steps: int, budget: int):
        self.steps = steps
        self.budget = budget

    def __str__(self):
        return f"rewrite budget exhausted after {self.steps} steps (budget {self.budget})"


class ExprSyntaxError(WorkbenchException):
    def __init__(self, msg: str, line: int, column: int):
        self.msg = msg
        self.line = line
        self.column = column

    def __str__(self):
        return f"{self.line}:{self.column}: {self.msg}"


class UnknownAtom(ExprSyntaxError):
    pass


class GroupClosureError(WorkbenchException):
    pass


class ProductFormError(WorkbenchException):
    pass


class InconsistentQuery(WorkbenchException):
    def __init__(self, type_name: str, orbit_class: str):
        self.type_name = type_name
        self.orbit_class = orbit_class

    def __str__(self):
        return f"orbit class '{self.orbit_class}' does not exist in type {self.type_name}"


class ReexpressionError(WorkbenchException):
    pass


class InvariantError(WorkbenchException):
    """A structural identity that must hold by construction failed."""
