"""Exception hierarchy.

The CLI maps ``UsageError`` to exit code 2 and ``MathValidationError`` /
``InternalInvariantError`` to exit code 1.
"""


class ShiftedBalancedError(Exception):
    """Root of every error raised by this package."""


class UsageError(ShiftedBalancedError):
    """Malformed input or a request beyond the configured caps."""


class InvalidShapeError(UsageError, ValueError):
    pass


class CellOutOfShapeError(UsageError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class ParseError(UsageError, ValueError):
    pass


class CapExceededError(UsageError):
    def __init__(self, what: str, size: int, cap: int) -> None:
        super().__init__(
            f"{what} of size {size} exceeds the cap {cap} "
            "(raise it with --max or SHIFTED_BALANCED_MAX)"
        )
        self.what = what
        self.size = size
        self.cap = cap


class MathValidationError(ShiftedBalancedError):
    """Well-formed input that fails a mathematical condition."""


class NotStandardError(MathValidationError):
    pass


class NotBalancedError(MathValidationError):
    pass


class NotReducedError(MathValidationError):
    pass


class WrongElementError(MathValidationError):
    pass


class InvalidReflectionOrderError(MathValidationError):
    pass


class NotRestrictedError(MathValidationError):
    """Tableau outside SYT(Z(d,r))|_λ or BS(Z(d,r))|_λ."""


class InsertionError(MathValidationError):
    pass


class InternalInvariantError(RuntimeError):
    """A theorem-backed invariant failed; always a bug, never bad input."""


class StageError(ShiftedBalancedError):
    """Failure inside one stage of a composed bijection."""

    def __init__(self, stage: str, cause: BaseException) -> None:
        super().__init__(f"[{stage}] {cause}")
        self.stage = stage
        self.cause = cause
