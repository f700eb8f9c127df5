"""Enumeration of the orbifold Toledo spectrum.

The spectrum is assembled from four sources: stable ternary and stable
binary pairs whose summed class is divisible by three, reducible ternary
classes, and the trivial bundle.  Values are closed under negation (dual
bundles) and reported as exact fractions with denominators dividing ``M``.
"""

from __future__ import annotations

import enum
import logging
import os
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .divisors import StarCertificate, star_certificate
from .families import Family, FamilyWitness, toledo_of_witness
from .lattice import BinaryScan, ReducibleScan, ResidueTable, TernaryScan, Window
from .seifert import SeifertSignature

log = logging.getLogger(__name__)

__all__ = [
    "GroupVariant",
    "Bounds",
    "WitnessRecord",
    "ToledoValue",
    "SpectrumReport",
    "enumeration_bounds",
    "enumerate_family",
    "count_family",
    "toledo_spectrum",
    "completeness_margin_check",
    "default_jobs",
]

DEFAULT_WITNESS_CAP = 100
SCANNED = (Family.STABLE_TERNARY, Family.STABLE_BINARY, Family.REDUCIBLE_TERNARY)


class GroupVariant(str, enum.Enum):
    U21 = "U(2,1)"
    PU21 = "PU(2,1)"

    @classmethod
    def parse(cls, text: str) -> GroupVariant:
        key = text.strip().lower().replace("(", "").replace(")", "").replace(",", "")
        if key == "u21":
            return cls.U21
        if key == "pu21":
            return cls.PU21
        raise ValueError(f"unknown group variant {text!r} (use u21 or pu21)")


@dataclass(frozen=True)
class Bounds:
    """Search windows for the F-coefficients; residues always range fully."""

    family: Family
    a: Window | None
    b: Window

    def widen(self, delta: int) -> Bounds:
        return Bounds(self.family, None if self.a is None else self.a.widen(delta),
                      self.b.widen(delta))

    def as_dict(self) -> dict:
        out = {"b": self.b.as_list()}
        if self.a is not None:
            out["a"] = self.a.as_list()
        return out


@dataclass(frozen=True)
class WitnessRecord:
    witness: FamilyWitness
    star: StarCertificate | None = None


class ToledoValue:
    """One spectrum value with its (capped) witnesses.

    Witness records are built on first access from the stored lattice
    coordinates; for large signatures most callers only need the values.
    """

    def __init__(self, value: Fraction, witness_count: int, direct_sign: str,
                 witnesses=None, *, table: ResidueTable | None = None, raw=()):
        self.value = value
        self.witness_count = witness_count
        self.direct_sign = direct_sign  # "+", "-" or "both"
        self._witnesses = None if witnesses is None else tuple(witnesses)
        self._table = table
        self._raw = raw

    @property
    def witnesses(self) -> tuple[WitnessRecord, ...]:
        if self._witnesses is None:
            self._witnesses = tuple(_build(self._table, fam, x, y) for fam, x, y in self._raw)
            self._table = None
        return self._witnesses

    def __repr__(self) -> str:
        return (f"ToledoValue({self.value}, count={self.witness_count}, "
                f"sign={self.direct_sign!r})")


@dataclass(frozen=True)
class SpectrumReport:
    sig: SeifertSignature
    group_variant: GroupVariant
    values: tuple[ToledoValue, ...]
    search_bounds_used: tuple[Bounds, ...]
    margin_check_passed: bool | None
    margin_delta: int | None = None
    family_counts: dict = field(default_factory=dict)

    @property
    def component_lower_bound(self) -> int:
        return len(self.values)

    def value_set(self) -> list[Fraction]:
        return [v.value for v in self.values]


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("TOLEDO_JOBS", "1")))
    except ValueError:
        return 1


def enumeration_bounds(sig: SeifertSignature, family: Family) -> Bounds:
    """Windows on ``a`` and ``b`` outside which no tuple can pass.

    Stable ternary: ``a >= 2 - n`` from the nonzero-count condition, so
    ``A >= 2 - n``; ``B > 2A`` and ``B < b + n`` give ``b > 4 - 3n``;
    ``A < 2B < 2(n - 2)`` bounds ``a``.  Stable binary: ``B > 0`` forces
    ``b > -n`` and ``A`` lies in ``(2 - n, (n - 2)/2)``.  Reducible:
    ``B > 0`` and the halves condition give ``-n < b <= -1``.
    """
    n = sig.n
    if family is Family.STABLE_TERNARY:
        return Bounds(family, Window(2 - n, 2 * n - 5), Window(4 - 3 * n, -2))
    if family is Family.STABLE_BINARY:
        return Bounds(family, Window(3 - 2 * n, -(-n // 2)), Window(1 - n, -2))
    if family is Family.REDUCIBLE_TERNARY:
        return Bounds(family, None, Window(1 - n, -1))
    raise ValueError(f"{family} is not enumerated")


def _scan(table: ResidueTable, bounds: Bounds, jobs: int):
    fam = bounds.family
    if fam is Family.STABLE_TERNARY:
        return TernaryScan(table, bounds.a, bounds.b)
    if fam is Family.STABLE_BINARY:
        return BinaryScan(table, bounds.a, bounds.b, jobs=jobs)
    return ReducibleScan(table, bounds.b)


def _lex_order(table: ResidueTable, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return np.lexsort(table.lex_keys(y) + table.lex_keys(x))


def enumerate_family(sig: SeifertSignature, family: Family, *, delta: int = 0,
                     jobs: int = 1, table: ResidueTable | None = None) -> list[FamilyWitness]:
    """Every accepted tuple inside the (optionally widened) windows.

    Witnesses come back in lexicographic order of ``(a; a_k; b; b_k)``.
    """
    table = table or ResidueTable(sig)
    bounds = enumeration_bounds(sig, family).widen(delta)
    scan = _scan(table, bounds, jobs)
    if family is Family.REDUCIBLE_TERNARY:
        ys = scan.ys[np.lexsort(table.lex_keys(scan.ys))]
        return [FamilyWitness.reducible(table.divisor(y)) for y in ys]
    x, y = scan.pairs()
    order = _lex_order(table, x, y)
    return [FamilyWitness(family, table.divisor(x[i]), table.divisor(y[i])) for i in order]


def count_family(sig: SeifertSignature, family: Family, *, delta: int = 0, jobs: int = 1,
                 table: ResidueTable | None = None) -> int:
    table = table or ResidueTable(sig)
    return _scan(table, enumeration_bounds(sig, family).widen(delta), jobs).count()


def completeness_margin_check(sig: SeifertSignature, delta: int, *, jobs: int = 1,
                              table: ResidueTable | None = None) -> bool:
    """True iff widening every window by ``delta`` admits no new tuple."""
    if delta < 1:
        raise ValueError("delta must be a positive integer")
    table = table or ResidueTable(sig)
    ok = True
    for fam in SCANNED:
        base = count_family(sig, fam, jobs=jobs, table=table)
        wide = count_family(sig, fam, delta=delta, jobs=jobs, table=table)
        if wide != base:
            log.warning("%s %s: %d tuples in base windows, %d after widening by %d",
                        sig, fam, base, wide, delta)
            ok = False
    return ok


def _build(table: ResidueTable, family: Family, x, y) -> WitnessRecord:
    if family is Family.TRIVIAL:
        return WitnessRecord(FamilyWitness.trivial(table.sig))
    if family is Family.REDUCIBLE_TERNARY:
        return WitnessRecord(FamilyWitness.reducible(table.divisor(y)))
    a, b = table.divisor(x), table.divisor(y)
    sums = tuple(p + q for p, q in zip(a.residues, b.residues))
    star = star_certificate(a.sig, a.f_coeff + b.f_coeff, sums)
    assert star is not None, f"value divisible by 3 but no certificate for {a}, {b}"
    return WitnessRecord(FamilyWitness(family, a, b), star)


def _collect_pairs(table, family, x, y, cap, found):
    """Group star-passing pairs by total and keep the first ``cap`` per total."""
    T = x + y
    keep = T % 3 == 0
    x, y, T = x[keep], y[keep], T[keep]
    if not len(T):
        return
    order = np.lexsort(table.lex_keys(y) + table.lex_keys(x) + [T])
    x, y, T = x[order], y[order], T[order]
    uniq, start, counts = np.unique(T, return_index=True, return_counts=True)
    for t, s, c in zip(uniq.tolist(), start.tolist(), counts.tolist()):
        e = s + min(c, cap)
        raw = [(family, xi, yi) for xi, yi in zip(x[s:e].tolist(), y[s:e].tolist())]
        found.setdefault(t, []).append((c, raw))


def toledo_spectrum(sig: SeifertSignature, group_variant: GroupVariant = GroupVariant.U21, *,
                    witness_cap: int = DEFAULT_WITNESS_CAP, margin_delta: int | None = 3,
                    jobs: int = 1) -> SpectrumReport:
    """Exact Toledo spectrum with witnesses and the component lower bound.

    ``U21`` uses all four families; ``PU21`` keeps only the stable ones.
    ``margin_delta=None`` skips the completeness margin check.
    """
    table = ResidueTable(sig)
    M = sig.M
    found: dict[int, list[tuple[int, list[WitnessRecord]]]] = {}
    bounds = []
    counts = {}

    tb = enumeration_bounds(sig, Family.STABLE_TERNARY)
    x, y = TernaryScan(table, tb.a, tb.b).pairs()
    counts[Family.STABLE_TERNARY.value] = len(x)
    _collect_pairs(table, Family.STABLE_TERNARY, x, y, witness_cap, found)
    bounds.append(tb)

    bb = enumeration_bounds(sig, Family.STABLE_BINARY)
    x, y = BinaryScan(table, bb.a, bb.b, jobs=jobs).pairs()
    counts[Family.STABLE_BINARY.value] = len(x)
    _collect_pairs(table, Family.STABLE_BINARY, x, y, witness_cap, found)
    bounds.append(bb)
    del x, y

    if group_variant is GroupVariant.U21:
        rb = enumeration_bounds(sig, Family.REDUCIBLE_TERNARY)
        red = ReducibleScan(table, rb.b)
        counts[Family.REDUCIBLE_TERNARY.value] = red.count()
        bounds.append(rb)
        for yv in red.ys[np.lexsort(table.lex_keys(red.ys))].tolist():
            # reducible value is B itself, whose coordinate is y
            found.setdefault(yv, []).append((1, [(Family.REDUCIBLE_TERNARY, None, yv)]))
        found.setdefault(0, []).append((1, [(Family.TRIVIAL, None, None)]))

    direct = {}
    for t, groups in found.items():
        raw = [r for _, rs in groups for r in rs][:witness_cap]
        direct[t] = (sum(c for c, _ in groups), raw)

    values = []
    for t in sorted(set(direct) | {-t for t in direct}):
        if t in direct:
            count, raw = direct[t]
            sign = "both" if -t in direct else "+"
        else:
            count, raw = direct[-t]
            sign = "-"
        values.append(ToledoValue(Fraction(t, M), count, sign, table=table, raw=tuple(raw)))

    # spot check: the first witness of each value reproduces it
    for v in values:
        if v._raw:
            tv = toledo_of_witness(_build(table, *v._raw[0]).witness)
            assert tv == v.value or tv == -v.value, (v.value, v._raw[0])

    margin = None
    if margin_delta is not None:
        margin = completeness_margin_check(sig, margin_delta, jobs=jobs, table=table)
    return SpectrumReport(sig, group_variant, tuple(values), tuple(bounds), margin,
                          margin_delta, counts)
