"""Shared fixtures and test-local oracles.

The oracles here deliberately reimplement functionality by brute force and
stay independent of the library's algorithms: primes come from scanning
the full ternary cube lattice, covers from exhaustive subset enumeration,
and cube evaluation from direct character matching.
"""

from __future__ import annotations

import itertools

import pytest

from bfforms.truthtable import TruthTable


def cube_covers_row(cube: str, row: int, n: int) -> bool:
    """Direct character-by-character cube match; leftmost char is x_1."""
    for i, ch in enumerate(cube):
        bit = (row >> (n - 1 - i)) & 1
        if ch == "0" and bit != 0:
            return False
        if ch == "1" and bit != 1:
            return False
    return True


def cube_mask(cube: str, n: int) -> int:
    mask = 0
    for row in range(1 << n):
        if cube_covers_row(cube, row, n):
            mask |= 1 << row
    return mask


def oracle_primes(n: int, on_mask: int) -> list[str]:
    """Prime implicants by brute force over all 3**n cubes."""
    implicants = []
    for pattern in itertools.product("-01", repeat=n):
        s = "".join(pattern)
        m = cube_mask(s, n)
        if m & ~on_mask == 0:
            implicants.append((m, s))
    primes = []
    for m, s in implicants:
        if not any(m2 != m and (m | m2) == m2 for m2, _ in implicants):
            primes.append(s)
    return sorted(primes)


def oracle_min_cover(n: int, on_mask: int) -> tuple[int, int]:
    """Exhaustive exact cover over prime implicants.

    Returns (minimum term count, minimum literal total among covers of
    that size).  Subsets are enumerated by increasing size, so the first
    covering size is minimal.
    """
    if on_mask == 0:
        return (0, 0)
    primes = oracle_primes(n, on_mask)
    masks = [cube_mask(s, n) for s in primes]
    lits = [sum(1 for ch in s if ch != "-") for s in primes]
    for r in range(1, len(primes) + 1):
        best_lits = None
        for combo in itertools.combinations(range(len(primes)), r):
            union = 0
            for i in combo:
                union |= masks[i]
            if union & on_mask == on_mask:
                total = sum(lits[i] for i in combo)
                if best_lits is None or total < best_lits:
                    best_lits = total
        if best_lits is not None:
            return (r, best_lits)
    raise AssertionError("primes failed to cover the on-set")


MAJ3_BITS = (0, 0, 0, 1, 0, 1, 1, 1)
XOR3_BITS = (0, 1, 1, 0, 1, 0, 0, 1)


@pytest.fixture(scope="session")
def maj3() -> TruthTable:
    return TruthTable(3, MAJ3_BITS)


@pytest.fixture(scope="session")
def xor3() -> TruthTable:
    return TruthTable(3, XOR3_BITS)


@pytest.fixture(scope="session")
def or2() -> TruthTable:
    return TruthTable(2, (0, 1, 1, 1))


@pytest.fixture(scope="session")
def xor2() -> TruthTable:
    return TruthTable(2, (0, 1, 1, 0))


@pytest.fixture(scope="session")
def l2_tables() -> list[TruthTable]:
    return [TruthTable.from_index(2, i) for i in range(16)]


@pytest.fixture(scope="session")
def l3_tables() -> list[TruthTable]:
    return [TruthTable.from_index(3, i) for i in range(256)]
