"""Report tables and the sweep/sample output bundle (CSV + JSON).

CSV conventions: '.' decimal separator, ',' field separator, LF line
endings.  Rationals render at a configurable precision (default 3
decimals, round-half-even), and the JSON report keeps every rational as an
exact numerator/denominator pair next to its decimal rendering.  Output
bytes depend only on the records, so reruns and different worker counts
produce identical files.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import reference
from .analysis import (
    SCENARIOS,
    SUBSET_LABELS,
    SweepRecord,
    classify,
    q_aggregate,
    rei,
    specific_weights,
)
from .costs import CRITERIA

SCHEMA_SWEEP = "bfforms.sweep-report/1"
SCHEMA_ANALYZE = "bfforms.analyze/1"

REI_VARIANTS = ("literal", "normalized")


def format_rational(value: int | Fraction, places: int = 3) -> str:
    """Decimal rendering with round-half-even at ``places`` digits."""
    f = Fraction(value)
    sign = "-" if f < 0 else ""
    f = abs(f)
    scale = 10**places
    q, r = divmod(f.numerator * scale, f.denominator)
    doubled = 2 * r
    if doubled > f.denominator or (doubled == f.denominator and q % 2 == 1):
        q += 1
    whole, frac = divmod(q, scale)
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{places}d}"


def _cell(value, places: int) -> str:
    if isinstance(value, bool):
        raise TypeError("boolean report cells are not supported")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return format_rational(value, places)
    text = str(value)
    if "," in text or '"' in text or "\n" in text:
        text = '"' + text.replace('"', '""') + '"'
    return text


@dataclass(frozen=True)
class ReportTable:
    """A titled table of exact rationals/integers/strings."""

    title: str
    headers: tuple[str, ...]
    rows: tuple[tuple, ...]

    def render_csv(self, places: int = 3) -> str:
        lines = [",".join(self.headers)]
        for row in self.rows:
            if len(row) != len(self.headers):
                raise ValueError("row width does not match headers")
            lines.append(",".join(_cell(v, places) for v in row))
        return "\n".join(lines) + "\n"


def _rational_json(value: Fraction) -> dict:
    f = Fraction(value)
    return {
        "num": f.numerator,
        "den": f.denominator,
        "decimal": format_rational(f),
    }


def rei_table(records: list[SweepRecord]) -> ReportTable:
    rows = []
    for variant in REI_VARIANTS:
        for form in ("cfr", "afr", "rm", "ofr"):
            cells: list = [variant, form]
            for criterion in CRITERIA:
                cells.append(rei(records, form, criterion, variant).eta)
            rows.append(tuple(cells))
    return ReportTable(
        title="relative efficiency index",
        headers=("variant", "form") + CRITERIA,
        rows=tuple(rows),
    )


def weight_stderr(weight: Fraction, n_max: int) -> float:
    """Binomial standard error of a specific-weight estimate."""
    p = float(weight)
    return math.sqrt(p * (1.0 - p) / n_max)


def weights_table(records: list[SweepRecord], sampled: bool) -> ReportTable:
    n_max = len(records)
    headers = ("criterion", "label", "weight") + (("stderr",) if sampled else ())
    rows = []
    for criterion in CRITERIA:
        weights = specific_weights(records, criterion)
        for label in SUBSET_LABELS:
            row: list = [criterion, label, weights[label]]
            if sampled:
                row.append(f"{weight_stderr(weights[label], n_max):.6f}")
            rows.append(tuple(row))
    return ReportTable(
        title="specific weights of priority subsets",
        headers=headers,
        rows=tuple(rows),
    )


def losses_table(records: list[SweepRecord]) -> ReportTable:
    rows = []
    for criterion in ("s_ad", "s_s"):
        for scenario in SCENARIOS:
            loss = q_aggregate(records, scenario, criterion)
            rows.append(
                (
                    criterion,
                    scenario,
                    loss.q,
                    loss.absolute_benefit,
                    loss.percent_of_cfr,
                    loss.percent_of_scenario,
                )
            )
    return ReportTable(
        title="aggregate losses and benefits",
        headers=(
            "criterion",
            "scenario",
            "q",
            "absolute_benefit",
            "benefit_pct_of_cfr",
            "benefit_pct_of_scenario",
        ),
        rows=tuple(rows),
    )


def records_table(records: list[SweepRecord]) -> ReportTable:
    headers = ["index"]
    for form in ("cfr", "rm", "afr"):
        headers.extend(f"{form}_{c}" for c in CRITERIA)
    rows = []
    for rec in records:
        row = [rec.index]
        for cv in (rec.cost_cfr, rec.cost_rm, rec.cost_afr):
            row.extend(getattr(cv, c) for c in CRITERIA)
        rows.append(tuple(row))
    return ReportTable(
        title="per-function records", headers=tuple(headers), rows=tuple(rows)
    )


def summary_json(
    records: list[SweepRecord],
    n: int,
    sampled: dict | None = None,
) -> dict:
    """Everything the CSV tables carry, as exact rationals, plus metadata."""
    rei_block: dict = {}
    for variant in REI_VARIANTS:
        rei_block[variant] = {}
        for form in ("cfr", "afr", "rm", "ofr"):
            per_form = {}
            for criterion in CRITERIA:
                result = rei(records, form, criterion, variant)
                per_form[criterion] = dict(
                    _rational_json(result.eta), s_mm=result.s_mm
                )
            rei_block[variant][form] = per_form

    weights_block: dict = {}
    for criterion in CRITERIA:
        weights = specific_weights(records, criterion)
        weights_block[criterion] = {
            label: dict(
                _rational_json(weights[label]),
                **(
                    {"stderr": round(weight_stderr(weights[label], len(records)), 8)}
                    if sampled
                    else {}
                ),
            )
            for label in SUBSET_LABELS
        }

    losses_block: dict = {}
    computed_losses: dict = {}
    for criterion in ("s_ad", "s_s"):
        losses_block[criterion] = {}
        computed_losses[criterion] = {}
        for scenario in SCENARIOS:
            loss = q_aggregate(records, scenario, criterion)
            losses_block[criterion][scenario] = {
                "q": loss.q,
                "absolute_benefit": loss.absolute_benefit,
                "percent_of_cfr": _rational_json(loss.percent_of_cfr),
                "percent_of_scenario": _rational_json(loss.percent_of_scenario),
            }
            computed_losses[criterion][scenario] = (loss.q, loss.absolute_benefit)

    computed_rei = {
        form: {
            criterion: rei(records, form, criterion, "literal").eta
            for criterion in CRITERIA
        }
        for form in ("cfr", "afr", "rm", "ofr")
    }

    meta: dict = {"n": n, "record_count": len(records), "sampled": bool(sampled)}
    if sampled:
        meta.update(sampled)
        max_se = max(
            weight_stderr(specific_weights(records, c)[label], len(records))
            for c in CRITERIA
            for label in SUBSET_LABELS
        )
        meta["max_weight_stderr"] = round(max_se, 8)
        meta["max_weight_ci95_halfwidth"] = round(1.96 * max_se, 8)
    meta["max_min_afr_summands"] = max(r.cost_afr.s_ad for r in records)
    meta["max_min_rm_summands"] = max(r.cost_rm.s_ad for r in records)

    out = {
        "schema": SCHEMA_SWEEP,
        "meta": meta,
        "rei": rei_block,
        "weights": weights_block,
        "losses": losses_block,
    }
    ref_rei = reference.compare_rei(n, computed_rei)
    ref_losses = reference.compare_losses(n, computed_losses)
    if ref_rei or ref_losses:
        out["reference_comparison"] = {
            "notes": list(reference.REFERENCE_NOTES),
            "rei": ref_rei,
            "losses": ref_losses,
        }
    return out


def write_sweep_reports(
    records: list[SweepRecord],
    n: int,
    out_dir: str | Path,
    sampled: dict | None = None,
) -> list[Path]:
    """Write records/rei/weights/losses CSVs and summary.json; return paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    tables = {
        "records.csv": records_table(records),
        "rei.csv": rei_table(records),
        "weights.csv": weights_table(records, sampled is not None),
        "losses.csv": losses_table(records),
    }
    for name, table in tables.items():
        path = out / name
        path.write_text(table.render_csv(), encoding="ascii", newline="\n")
        written.append(path)
    summary = summary_json(records, n, sampled)
    path = out / "summary.json"
    path.write_text(
        json.dumps(summary, indent=2, sort_keys=True) + "\n",
        encoding="ascii",
        newline="\n",
    )
    written.append(path)
    return written
