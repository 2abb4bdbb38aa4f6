"""Exact two-level SOP minimization: Quine-McCluskey primes + Petrick cover.

The minimization objective is total and documented: fewest product terms,
then fewest literals, then the lexicographically least cube list under the
PLA-string order ('-' < '0' < '1', leftmost character is x_1).  The search
space for the tie-breaks is covers assembled from prime implicants, which
always contains a global optimum.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import GuardTimeoutError
from .guard import resolve_guard
from .truthtable import Assignment, TruthTable


@dataclass(frozen=True)
class Cube:
    """A product term.

    ``care`` and ``value`` are n-bit masks aligned with row-index bit
    positions (bit ``n - s`` belongs to variable ``x_s``): a set ``care``
    bit means the variable appears as a literal, and the matching
    ``value`` bit gives its polarity.  A cube with ``care == 0`` is the
    constant-1 term.
    """

    n: int
    care: int
    value: int

    def __post_init__(self) -> None:
        full = (1 << self.n) - 1
        if not 0 <= self.care <= full:
            raise ValueError(f"care mask {self.care:#x} out of range for n={self.n}")
        if self.value & ~self.care:
            raise ValueError("value bits outside the care mask")

    @classmethod
    def from_string(cls, n: int, s: str) -> Cube:
        if len(s) != n:
            raise ValueError(f"cube string {s!r} has length {len(s)}, expected {n}")
        care = value = 0
        for i, ch in enumerate(s):
            p = n - 1 - i
            if ch == "1":
                care |= 1 << p
                value |= 1 << p
            elif ch == "0":
                care |= 1 << p
            elif ch != "-":
                raise ValueError(f"invalid cube character {ch!r}")
        return cls(n, care, value)

    def to_string(self) -> str:
        chars = []
        for i in range(self.n):
            p = self.n - 1 - i
            if not (self.care >> p) & 1:
                chars.append("-")
            else:
                chars.append("1" if (self.value >> p) & 1 else "0")
        return "".join(chars)

    @property
    def literal_count(self) -> int:
        return bin(self.care).count("1")

    def covers_row(self, row: int) -> bool:
        return (row & self.care) == self.value

    def covers(self, a: Assignment) -> bool:
        if a.n != self.n:
            raise ValueError(f"assignment has n={a.n}, cube has n={self.n}")
        return self.covers_row(a.row_index)

    def cover_mask(self) -> int:
        """Bitmask over row indices covered by this cube."""
        free = ((1 << self.n) - 1) ^ self.care
        mask = 0
        sub = 0
        while True:
            mask |= 1 << (self.value | sub)
            if sub == free:
                break
            sub = (sub - free) & free
        return mask

    def __str__(self) -> str:
        if self.care == 0:
            return "1"
        parts = []
        for i in range(self.n):
            p = self.n - 1 - i
            if (self.care >> p) & 1:
                lit = f"x{i + 1}"
                if not (self.value >> p) & 1:
                    lit = "~" + lit
                parts.append(lit)
        return "*".join(parts)


@dataclass(frozen=True)
class SopForm:
    """A sum-of-products cover; an empty term list is the constant 0."""

    n: int
    terms: tuple[Cube, ...]

    def __post_init__(self) -> None:
        if any(c.n != self.n for c in self.terms):
            raise ValueError("cube dimension differs from cover dimension")
        if len(set(self.terms)) != len(self.terms):
            raise ValueError("duplicate cubes in cover")

    def evaluate(self, a: Assignment) -> int:
        if a.n != self.n:
            raise ValueError(f"assignment has n={a.n}, cover has n={self.n}")
        row = a.row_index
        return 1 if any(c.covers_row(row) for c in self.terms) else 0

    def cover_mask(self) -> int:
        mask = 0
        for c in self.terms:
            mask |= c.cover_mask()
        return mask

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(str(c) for c in self.terms)


def eval_sop(sop: SopForm, a: Assignment) -> int:
    return sop.evaluate(a)


def prime_implicants(tt: TruthTable) -> list[Cube]:
    """All prime implicants of ``tt`` via Quine-McCluskey merging.

    Raises ValueError for the constant-0 function, which has none.
    Result is sorted by cube string.
    """
    n = tt.n
    minterms = [row for row, b in enumerate(tt.bits) if b]
    if not minterms:
        raise ValueError("constant-0 function has no implicants")

    full = (1 << n) - 1
    level = {(full, row) for row in minterms}
    primes: set[tuple[int, int]] = set()
    while level:
        merged: set[tuple[int, int]] = set()
        next_level: set[tuple[int, int]] = set()
        by_care: dict[int, list[tuple[int, int]]] = {}
        for cube in level:
            by_care.setdefault(cube[0], []).append(cube)
        for care, cubes in by_care.items():
            values = {v for _, v in cubes}
            for _, v in cubes:
                for i in range(n):
                    bit = 1 << i
                    if care & bit and v & bit and (v ^ bit) in values:
                        merged.add((care, v))
                        merged.add((care, v ^ bit))
                        next_level.add((care ^ bit, v ^ bit))
        primes.update(level - merged)
        level = next_level
    return sorted(
        (Cube(n, care, value) for care, value in primes),
        key=lambda c: c.to_string(),
    )


def _petrick_products(
    prime_masks: list[int],
    uncovered: int,
    deadline: float,
) -> list[int]:
    """Petrick's method: all minimal prime subsets covering ``uncovered``.

    Products are bitmasks over prime indices, kept as an antichain under
    set inclusion by absorption after every minterm round.
    """
    # Process sparsest minterms first to keep the product set small.
    rows = []
    m = uncovered
    while m:
        low = m & -m
        m ^= low
        covering = [i for i, pm in enumerate(prime_masks) if pm & low]
        rows.append(covering)
    rows.sort(key=lambda cov: (len(cov), cov))

    products = [0]
    for covering in rows:
        if time.monotonic() > deadline:
            raise GuardTimeoutError("SOP minimization exceeded its time guard")
        expanded = {p | (1 << i) for p in products for i in covering}
        # Absorption: drop any product that contains another.
        best_by_size = sorted(expanded, key=lambda p: bin(p).count("1"))
        kept: list[int] = []
        for cand in best_by_size:
            if not any(k & cand == k for k in kept):
                kept.append(cand)
        products = kept
    return products


def minimize_sop(tt: TruthTable, guard_s: float | None = None) -> SopForm:
    """Exact minimum SOP cover of ``tt``.

    Objective order: term count, then literal count, then lexicographic
    cube list.  Raises GuardTimeoutError if the cover search exceeds the
    time budget (see :mod:`bfforms.guard`); a wrong or approximate answer
    is never returned.
    """
    n = tt.n
    deadline = time.monotonic() + resolve_guard(guard_s)
    on = tt.index
    if on == 0:
        return SopForm(n, ())
    if on == (1 << (1 << n)) - 1:
        return SopForm(n, (Cube(n, 0, 0),))

    primes = prime_implicants(tt)
    prime_masks = [c.cover_mask() for c in primes]

    # Essential primes sit in every prime cover; select them up front.
    selected = 0
    uncovered = on
    while uncovered:
        if time.monotonic() > deadline:
            raise GuardTimeoutError("SOP minimization exceeded its time guard")
        essential = 0
        m = uncovered
        while m:
            low = m & -m
            m ^= low
            hits = [i for i, pm in enumerate(prime_masks) if pm & low]
            if len(hits) == 1:
                essential |= 1 << hits[0]
        essential &= ~selected
        if not essential:
            break
        selected |= essential
        e = essential
        while e:
            i = (e & -e).bit_length() - 1
            e &= e - 1
            uncovered &= ~prime_masks[i]

    if uncovered:
        products = _petrick_products(prime_masks, uncovered, deadline)
    else:
        products = [0]

    def cover_key(product: int) -> tuple[int, int, tuple[str, ...]]:
        chosen = product | selected
        cubes = []
        p = chosen
        while p:
            i = (p & -p).bit_length() - 1
            p &= p - 1
            cubes.append(primes[i])
        strings = tuple(sorted(c.to_string() for c in cubes))
        literals = sum(c.literal_count for c in cubes)
        return (len(cubes), literals, strings)

    best = min(products, key=cover_key)
    _, _, strings = cover_key(best)
    return SopForm(n, tuple(Cube.from_string(n, s) for s in strings))
