"""Fixed-polarity Reed-Muller polynomials over GF(2).

A polarity vector fixes, per variable, whether it may appear only direct
(bit 0) or only inverted (bit 1).  For every (function, polarity) pair the
coefficient vector is unique; it is computed by n per-variable butterfly
passes over GF(2), one positive-Davio step per direct variable and one
negative-Davio step per inverted variable.

Coefficient index convention: bit ``n - s`` of coefficient index ``j``
selects variable ``x_s`` into the product term, matching the row-index
bit layout of :mod:`bfforms.truthtable`.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import costs
from .truthtable import Assignment, TruthTable, _validate_n


@dataclass(frozen=True)
class PolarityVector:
    """Per-variable polarity choices; ``bits[i]`` = 1 inverts ``x_{i+1}``."""

    n: int
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        _validate_n(self.n)
        if len(self.bits) != self.n or any(b not in (0, 1) for b in self.bits):
            raise ValueError("polarity vector needs exactly n binary entries")

    @classmethod
    def from_int(cls, n: int, k: int) -> PolarityVector:
        _validate_n(n)
        if not 0 <= k < (1 << n):
            raise ValueError(f"polarity integer {k} out of range for n={n}")
        return cls(n, tuple((k >> (n - 1 - i)) & 1 for i in range(n)))

    @property
    def k(self) -> int:
        """The polarity as an integer; bit ``n - s`` belongs to ``x_s``."""
        value = 0
        for b in self.bits:
            value = (value << 1) | b
        return value

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


@dataclass(frozen=True)
class RmPolynomial:
    """GF(2) coefficients of a fixed-polarity Reed-Muller polynomial."""

    polarity: PolarityVector
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != 1 << self.polarity.n:
            raise ValueError("coefficient vector must have length 2**n")
        if any(c not in (0, 1) for c in self.coeffs):
            raise ValueError("Reed-Muller coefficients must be 0 or 1")

    @property
    def n(self) -> int:
        return self.polarity.n

    def term_string(self, j: int) -> str:
        if j == 0:
            return "1"
        n = self.n
        parts = []
        for i in range(n):
            p = n - 1 - i
            if (j >> p) & 1:
                lit = f"x{i + 1}"
                if self.polarity.bits[i]:
                    lit = "~" + lit
                parts.append(lit)
        return "*".join(parts)

    def __str__(self) -> str:
        active = [self.term_string(j) for j, a in enumerate(self.coeffs) if a]
        return " ^ ".join(active) if active else "0"


def fprm_transform(tt: TruthTable, p: PolarityVector) -> RmPolynomial:
    """The unique fixed-polarity Reed-Muller polynomial of ``tt`` at ``p``."""
    if p.n != tt.n:
        raise ValueError(f"polarity has n={p.n}, table has n={tt.n}")
    n = tt.n
    arr = list(tt.bits)
    k = p.k
    for pos in range(n):
        stride = 1 << pos
        neg = (k >> pos) & 1
        for i in range(1 << n):
            if i & stride:
                continue
            lo = arr[i]
            hi = arr[i | stride]
            if neg:
                arr[i] = hi
            arr[i | stride] = lo ^ hi
    return RmPolynomial(p, tuple(arr))


def eval_rm(poly: RmPolynomial, a: Assignment) -> int:
    """XOR of the active product terms at assignment ``a``."""
    if a.n != poly.n:
        raise ValueError(f"assignment has n={a.n}, polynomial has n={poly.n}")
    lits = a.row_index ^ poly.polarity.k  # literal values, bitwise
    acc = 0
    for j, c in enumerate(poly.coeffs):
        if c and (j & ~lits) == 0:
            acc ^= 1
    return acc


def best_polarity(
    tt: TruthTable, criterion: str
) -> tuple[PolarityVector, RmPolynomial]:
    """Scan all 2**n polarities; return the cheapest under ``criterion``.

    Ties break toward the lowest polarity integer.  Each polarity is
    transformed from scratch; a Gray-code incremental scan would save a
    constant factor but n <= 6 keeps the full scan trivial.
    """
    if criterion not in costs.CRITERIA:
        raise ValueError(f"unknown criterion {criterion!r}")
    best: tuple[int, PolarityVector, RmPolynomial] | None = None
    for k in range(1 << tt.n):
        p = PolarityVector.from_int(tt.n, k)
        poly = fprm_transform(tt, p)
        value = costs.cost_of_rm(poly).get(criterion)
        if best is None or value < best[0]:
            best = (value, p, poly)
    assert best is not None
    return best[1], best[2]


def fprm_count(n: int) -> int:
    """Number of fixed-polarity polynomials over all functions: 2**n * 2**2**n."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"variable count must be a positive int, got {n!r}")
    # Python integers are unbounded, so the product cannot silently wrap.
    return (1 << n) * (1 << (1 << n))


def class_power(n: int, k: int) -> int:
    """Size of the class of degree-k product terms on n variables.

    Built from the boundary values E(n, 0) = E(n, n) = 1, E(n, 1) = n and
    the recurrence E(n, k) = E(n-1, k) + E(n-1, k-1); equals C(n, k).
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"variable count must be a positive int, got {n!r}")
    if not 0 <= k <= n:
        raise ValueError(f"class degree {k} out of range for n={n}")
    row = [1]
    for _ in range(n):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row[k]
