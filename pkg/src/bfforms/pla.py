"""Berkeley-PLA subset: parser, emitter, and cube expansion to truth tables.

Supported directives: ``.i``, ``.o``, ``.p`` (optional, validated), ``.e``
(required terminator).  ``#`` starts a comment.  ``.ilb``/``.ob`` label
lines are accepted and ignored with a warning; any other directive is an
error.  Cube rows use ``{0,1,-}`` over the inputs (leftmost character is
x_1) and ``{0,1}`` over the outputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import PlaFormatError
from .truthtable import TruthTable


@dataclass(frozen=True)
class PlaDocument:
    num_inputs: int
    num_outputs: int
    rows: tuple[tuple[str, str], ...]
    declared_products: int | None = field(default=None, compare=False)
    warnings: tuple[str, ...] = field(default=(), compare=False)


def parse_pla(text: str) -> PlaDocument:
    num_inputs: int | None = None
    num_outputs: int | None = None
    declared: int | None = None
    rows: list[tuple[str, str]] = []
    warnings: list[str] = []
    terminated = False

    def intarg(parts: list[str], lineno: int, directive: str) -> int:
        if len(parts) != 2 or not parts[1].isdigit():
            raise PlaFormatError(lineno, f"{directive} needs one integer argument")
        return int(parts[1])

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if terminated:
            raise PlaFormatError(lineno, "content after .e terminator")
        parts = line.split()
        if line.startswith("."):
            directive = parts[0]
            if directive == ".i":
                num_inputs = intarg(parts, lineno, ".i")
            elif directive == ".o":
                num_outputs = intarg(parts, lineno, ".o")
            elif directive == ".p":
                declared = intarg(parts, lineno, ".p")
            elif directive == ".e":
                terminated = True
            elif directive in (".ilb", ".ob"):
                warnings.append(f"line {lineno}: {directive} labels ignored")
            else:
                raise PlaFormatError(lineno, f"unknown directive {directive}")
            continue
        if num_inputs is None or num_outputs is None:
            raise PlaFormatError(lineno, "cube row before .i/.o header")
        if len(parts) != 2:
            raise PlaFormatError(lineno, "cube row needs input and output fields")
        cube, outs = parts
        if len(cube) != num_inputs:
            raise PlaFormatError(
                lineno, f"cube width {len(cube)} does not match .i {num_inputs}"
            )
        if any(ch not in "01-" for ch in cube):
            raise PlaFormatError(lineno, f"invalid cube character in {cube!r}")
        if len(outs) != num_outputs:
            raise PlaFormatError(
                lineno, f"output width {len(outs)} does not match .o {num_outputs}"
            )
        if any(ch not in "01" for ch in outs):
            raise PlaFormatError(lineno, f"invalid output character in {outs!r}")
        rows.append((cube, outs))

    last = text.count("\n") + 1
    if num_inputs is None or num_outputs is None:
        raise PlaFormatError(last, "missing .i/.o header")
    if not terminated:
        raise PlaFormatError(last, "missing .e terminator")
    if declared is not None and declared != len(rows):
        raise PlaFormatError(last, f".p {declared} does not match {len(rows)} rows")
    return PlaDocument(
        num_inputs=num_inputs,
        num_outputs=num_outputs,
        rows=tuple(rows),
        declared_products=declared,
        warnings=tuple(warnings),
    )


def emit_pla(doc: PlaDocument) -> str:
    lines = [f".i {doc.num_inputs}", f".o {doc.num_outputs}", f".p {len(doc.rows)}"]
    lines.extend(f"{cube} {outs}" for cube, outs in doc.rows)
    lines.append(".e")
    return "\n".join(lines) + "\n"


def truth_tables(doc: PlaDocument) -> list[TruthTable]:
    """Expand the cube rows into one truth table per output (OR semantics)."""
    n = doc.num_inputs
    masks = [0] * doc.num_outputs
    for cube, outs in doc.rows:
        care = value = 0
        for i, ch in enumerate(cube):
            p = n - 1 - i
            if ch != "-":
                care |= 1 << p
                if ch == "1":
                    value |= 1 << p
        cover = 0
        free = ((1 << n) - 1) ^ care
        sub = 0
        while True:
            cover |= 1 << (value | sub)
            if sub == free:
                break
            sub = (sub - free) & free
        for o, ch in enumerate(outs):
            if ch == "1":
                masks[o] |= cover
    return [TruthTable.from_index(n, m) for m in masks]


def sop_to_pla(sop) -> PlaDocument:
    """Single-output PLA document for a SOP cover."""
    rows = tuple((cube.to_string(), "1") for cube in sop.terms)
    return PlaDocument(num_inputs=sop.n, num_outputs=1, rows=rows)
