"""Command-line surface: analyze, sweep, sample, convert.

Exit codes: 0 success, 1 usage error, 2 input format error, 3 resource
guard abort.  Diagnostics go to stderr; data goes to stdout or to the
files under ``--out``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .analysis import analyze_function, sampled_sweep, sweep
from .arith import arithmetic_transform, best_arith_polarity
from .costs import CRITERIA, cost_of_arith, cost_of_rm, cost_of_sop
from .errors import GuardTimeoutError, PlaFormatError
from .pla import emit_pla, parse_pla, sop_to_pla, truth_tables
from .reedmuller import PolarityVector, best_polarity, fprm_transform
from .reports import SCHEMA_ANALYZE, write_sweep_reports
from .sop import minimize_sop
from .truthtable import TruthTable

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FORMAT = 2
EXIT_GUARD = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the documented contract is 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit_usage(message)


class SystemExit_usage(Exception):
    def __init__(self, message: str):
        super().__init__(message)


class InputFormatError(ValueError):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bfforms", description=__doc__)
    parser.add_argument("--version", action="version", version=f"bfforms {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser(
        "analyze", help="minimize one function in all three forms"
    )
    analyze.add_argument("--n", type=int, required=True, help="variable count (1..6)")
    source = analyze.add_mutually_exclusive_group(required=True)
    source.add_argument("--tt", help="truth table as hex (bit j = value on row j)")
    source.add_argument("--pla", help="PLA file to read the function from")
    analyze.add_argument("--output", type=int, default=0, help="PLA output column")
    analyze.add_argument("--criterion", choices=CRITERIA, default="s_ad")
    analyze.add_argument("--format", choices=("text", "json", "csv"), default="text")

    swp = sub.add_parser("sweep", help="exhaustive sweep with report files")
    swp.add_argument("--n", type=int, required=True, choices=(1, 2, 3, 4))
    swp.add_argument("--out", required=True, help="report directory")
    swp.add_argument("--jobs", type=int, default=1)

    smp = sub.add_parser("sample", help="seeded sampled sweep with report files")
    smp.add_argument("--n", type=int, required=True, choices=(1, 2, 3, 4, 5))
    smp.add_argument("--count", type=int, default=65536)
    smp.add_argument("--seed", type=int, required=True)
    smp.add_argument("--out", required=True, help="report directory")
    smp.add_argument("--jobs", type=int, default=1)

    cnv = sub.add_parser("convert", help="convert a PLA file into a chosen form")
    cnv.add_argument("--pla", required=True)
    cnv.add_argument("--form", choices=("cfr", "rm", "afr"), required=True)
    cnv.add_argument("--polarity", default="best", help="polarity integer or 'best'")
    cnv.add_argument("--criterion", choices=CRITERIA, default="s_ad")
    return parser


def _load_table(args) -> TruthTable:
    if args.tt is not None:
        text = args.tt.lower().removeprefix("0x")
        try:
            index = int(text, 16)
        except ValueError:
            raise InputFormatError(f"invalid hex truth table {args.tt!r}")
        try:
            return TruthTable.from_index(args.n, index)
        except ValueError as exc:
            raise InputFormatError(str(exc))
    doc = parse_pla(Path(args.pla).read_text())
    for w in doc.warnings:
        print(f"warning: {w}", file=sys.stderr)
    if doc.num_inputs != args.n:
        raise InputFormatError(
            f"PLA has {doc.num_inputs} inputs, --n says {args.n}"
        )
    tables = truth_tables(doc)
    if not 0 <= args.output < len(tables):
        raise InputFormatError(
            f"--output {args.output} out of range for {len(tables)} outputs"
        )
    return tables[args.output]


def _cmd_analyze(args) -> int:
    if not 1 <= args.n <= 6:
        raise ValueError(f"--n must be in 1..6, got {args.n}")
    tt = _load_table(args)
    fa = analyze_function(tt, args.criterion)
    cost_sop = cost_of_sop(fa.sop)
    cost_rm = cost_of_rm(fa.rm)
    cost_af = cost_of_arith(fa.afr)
    labels = fa.labels()

    if args.format == "text":
        print(f"n={tt.n} index={tt.index:#x} criterion={args.criterion}")
        print(f"cfr: {fa.sop}  {cost_sop.as_dict()}")
        print(f"rm (polarity={fa.rm_polarity.k}): {fa.rm}  {cost_rm.as_dict()}")
        print(f"afr (polarity={fa.afr_polarity.k}): {fa.afr}  {cost_af.as_dict()}")
        print("labels: " + " ".join(f"{c}={labels[c]}" for c in CRITERIA))
    elif args.format == "json":
        payload = {
            "schema": SCHEMA_ANALYZE,
            "n": tt.n,
            "index": tt.index,
            "criterion": args.criterion,
            "forms": {
                "cfr": {
                    "cover": [c.to_string() for c in fa.sop.terms],
                    "text": str(fa.sop),
                    "cost": cost_sop.as_dict(),
                },
                "rm": {
                    "polarity": fa.rm_polarity.k,
                    "coeffs": list(fa.rm.coeffs),
                    "text": str(fa.rm),
                    "cost": cost_rm.as_dict(),
                },
                "afr": {
                    "polarity": fa.afr_polarity.k,
                    "coeffs": [
                        c if isinstance(c, int) else str(Fraction(c))
                        for c in fa.afr.coeffs
                    ],
                    "text": str(fa.afr),
                    "cost": cost_af.as_dict(),
                },
            },
            "labels": labels,
            "minima": {
                "cfr": fa.record.cost_cfr.as_dict(),
                "rm": fa.record.cost_rm.as_dict(),
                "afr": fa.record.cost_afr.as_dict(),
            },
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        lines = ["record,field,value"]
        for name, cv in (("cfr", cost_sop), ("rm", cost_rm), ("afr", cost_af)):
            for criterion, value in cv.as_dict().items():
                lines.append(f"cost,{name}.{criterion},{value}")
        for criterion in CRITERIA:
            lines.append(f"label,{criterion},{labels[criterion]}")
        lines.append(f'repr,cfr,"{fa.sop}"')
        lines.append(f'repr,rm,"{fa.rm}"')
        lines.append(f'repr,afr,"{fa.afr}"')
        print("\n".join(lines))
    return EXIT_OK


def _cmd_sweep(args) -> int:
    records = sweep(args.n, jobs=args.jobs)
    written = write_sweep_reports(records, args.n, args.out)
    print(f"wrote {len(written)} report files to {args.out}", file=sys.stderr)
    return EXIT_OK


def _cmd_sample(args) -> int:
    if args.count < 1:
        raise InputFormatError(f"--count must be >= 1, got {args.count}")
    records = sampled_sweep(args.n, args.count, args.seed, jobs=args.jobs)
    sampled = {"count": args.count, "seed": args.seed}
    written = write_sweep_reports(records, args.n, args.out, sampled=sampled)
    print(f"wrote {len(written)} report files to {args.out}", file=sys.stderr)
    return EXIT_OK


def _cmd_convert(args) -> int:
    doc = parse_pla(Path(args.pla).read_text())
    for w in doc.warnings:
        print(f"warning: {w}", file=sys.stderr)
    tables = truth_tables(doc)
    n = doc.num_inputs
    fixed_polarity: PolarityVector | None = None
    if args.form in ("rm", "afr") and args.polarity != "best":
        try:
            k = int(args.polarity)
        except ValueError:
            raise InputFormatError(f"--polarity must be an integer or 'best'")
        if not 0 <= k < (1 << n):
            raise InputFormatError(f"--polarity {k} out of range for n={n}")
        fixed_polarity = PolarityVector.from_int(n, k)

    for o, tt in enumerate(tables):
        prefix = f"output {o}: " if len(tables) > 1 else ""
        if args.form == "cfr":
            sop = minimize_sop(tt)
            print(f"{prefix}cfr: {sop}")
            print(emit_pla(sop_to_pla(sop)), end="")
        elif args.form == "rm":
            if fixed_polarity is None:
                p, poly = best_polarity(tt, args.criterion)
            else:
                p, poly = fixed_polarity, fprm_transform(tt, fixed_polarity)
            print(f"{prefix}rm (polarity={p.k}): {poly}")
        else:
            if fixed_polarity is None:
                p, poly = best_arith_polarity(tt, args.criterion)
            else:
                p, poly = fixed_polarity, arithmetic_transform(tt, fixed_polarity)
            print(f"{prefix}afr (polarity={p.k}): {poly}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit_usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "sweep":
            return _cmd_sweep(args)
        if args.command == "sample":
            return _cmd_sample(args)
        if args.command == "convert":
            return _cmd_convert(args)
        raise AssertionError(f"unhandled command {args.command}")
    except (PlaFormatError, InputFormatError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except GuardTimeoutError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
