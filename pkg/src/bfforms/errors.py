"""Exception types shared across the package."""


class GuardTimeoutError(RuntimeError):
    """An exact minimization exceeded its time budget.

    The guard aborts instead of degrading to an approximation; a partial
    or heuristic answer is never returned.
    """


class PlaFormatError(ValueError):
    """Malformed PLA input. Carries the 1-based source line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
