"""Time-guard configuration for the exact minimizers.

Exact covering can degenerate on adversarial inputs; rather than silently
falling back to a heuristic, every minimization call carries a wall-clock
budget and raises :class:`bfforms.errors.GuardTimeoutError` when it is
exceeded.  The default budget is ``DEFAULT_GUARD_SECS`` and can be
overridden globally through the ``BFFORMS_GUARD_SECS`` environment
variable or per call via the ``guard_s`` keyword.
"""

import os

ENV_VAR = "BFFORMS_GUARD_SECS"
DEFAULT_GUARD_SECS = 60.0


def resolve_guard(guard_s: float | None = None) -> float:
    """Return the effective per-call time budget in seconds."""
    if guard_s is not None:
        return float(guard_s)
    env = os.environ.get(ENV_VAR)
    if env:
        return float(env)
    return DEFAULT_GUARD_SECS
