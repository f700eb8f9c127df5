"""JSON, CSV and plain-table renderings of spectrum reports.

Rationals are always written as ``"p/q"`` in lowest terms; the decimal
column is for reading only.
"""

from __future__ import annotations

import csv
import io
import json
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

from .spectrum import SpectrumReport, ToledoValue, WitnessRecord

__all__ = ["frac", "decimal_str", "spectrum_dict", "spectrum_json", "spectrum_csv",
           "spectrum_table", "parse_table_values", "dumps"]

CSV_COLUMNS = ["tau", "family", "a", "b", "star_y", "star_yres", "star_s"]


def frac(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def decimal_str(x, places: int = 6) -> str:
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = 50
        d = Decimal(x.numerator) / Decimal(x.denominator)
        out = d.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN)
    if out == 0:
        out = abs(out)  # no "-0.000000"
    return str(out)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _witness_dict(rec: WitnessRecord) -> dict:
    w = rec.witness
    return {
        "family": w.family.value,
        "a": w.a.literal(),
        "b": w.b.literal(),
        "star": None if rec.star is None else rec.star.as_dict(),
    }


def _value_dict(v: ToledoValue) -> dict:
    return {
        "tau": frac(v.value),
        "tau_decimal": decimal_str(v.value),
        "witnesses": [_witness_dict(r) for r in v.witnesses],
        "direct_sign": v.direct_sign,
        "witness_count": v.witness_count,
    }


def spectrum_dict(report: SpectrumReport) -> dict:
    return {
        "signature": list(report.sig.m),
        "group": report.group_variant.value,
        "values": [_value_dict(v) for v in report.values],
        "component_lower_bound": report.component_lower_bound,
        "margin_check": report.margin_check_passed,
        "margin_delta": report.margin_delta,
        "search_bounds_used": {b.family.value: b.as_dict() for b in report.search_bounds_used},
        "family_counts": dict(report.family_counts),
    }


def spectrum_json(report: SpectrumReport) -> str:
    return dumps(spectrum_dict(report))


def spectrum_csv(report: SpectrumReport) -> str:
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(CSV_COLUMNS)
    for v in report.values:
        for rec in v.witnesses:
            w, st = rec.witness, rec.star
            wr.writerow([
                frac(v.value), w.family.value, w.a.literal(), w.b.literal(),
                "" if st is None else st.y,
                "" if st is None else ",".join(map(str, st.y_res)),
                "" if st is None else ",".join(map(str, st.s)),
            ])
    return buf.getvalue()


def spectrum_table(report: SpectrumReport) -> str:
    margin = report.margin_check_passed
    mtxt = "skipped" if margin is None else ("pass" if margin else "FAIL")
    lines = [
        f"signature {report.sig}  group {report.group_variant.value}",
        f"component_lower_bound {report.component_lower_bound}  "
        f"margin_check {mtxt} (delta {report.margin_delta})",
        "",
        f"{'tau':>14}  {'decimal':>12}  {'sign':>4}  {'count':>8}  first witness",
    ]
    for v in report.values:
        first = ""
        if v.witnesses:
            w = v.witnesses[0].witness
            first = f"{w.family.value} a={w.a.literal()} b={w.b.literal()}"
        lines.append(f"{frac(v.value):>14}  {decimal_str(v.value):>12}  {v.direct_sign:>4}  "
                     f"{v.witness_count:>8}  {first}")
    return "\n".join(lines) + "\n"


def parse_table_values(text: str) -> list[Fraction]:
    """Read the ``tau`` column back out of :func:`spectrum_table` output."""
    out = []
    rows = text.splitlines()
    start = next(i for i, line in enumerate(rows) if line.split()[:1] == ["tau"]) + 1
    for line in rows[start:]:
        if line.strip():
            out.append(Fraction(line.split()[0]))
    return out
