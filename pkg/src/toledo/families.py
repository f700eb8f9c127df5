"""Numerical membership tests for the four polystable Higgs bundle families.

Every check works on normalized vertical divisors and compares exact
rationals.  A :class:`Verdict` always lists *all* violated conditions, so
callers can report why a tuple was rejected.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .divisors import (
    SignatureMismatch,
    VerticalDivisor,
    a_value,
    has_twisted_one_form,
    zero,
)
from .seifert import SeifertSignature

__all__ = [
    "Family",
    "CONDITIONS",
    "DerivedQuantities",
    "Verdict",
    "FamilyWitness",
    "derived_quantities",
    "d_value",
    "check_stable_ternary",
    "admissible_c_tuples",
    "check_stable_binary",
    "check_reducible_ternary",
    "check_witness",
    "toledo_of_witness",
]


class Family(str, enum.Enum):
    STABLE_TERNARY = "stable-ternary"
    STABLE_BINARY = "stable-binary"
    REDUCIBLE_TERNARY = "reducible-ternary"
    TRIVIAL = "trivial"

    def __str__(self) -> str:
        return self.value


# stable condition labels used in JSON/CLI output
CONDITIONS = {
    "tern.i": "b <= -2",
    "tern.ii": "a + #{a_k != 0} >= 2",
    "tern.iii": "2A < B",
    "tern.iv": "A < 2B",
    "bin.i": "-B < A < B/2",
    "bin.ii": "d2 <= -2",
    "bin.iii": "b <= -2",
    "bin.iv": "d1 + 1 <= min(-d2 - 1, -d3 - 1) for every admissible c",
    "redtern.i": "B > 0",
    "redtern.ii": "2b + #{b_k >= m_k/2} <= -2",
    "trivial": "a = b = 0",
}


@dataclass(frozen=True)
class DerivedQuantities:
    A: Fraction
    B: Fraction
    C: Fraction | None
    d1: int | None
    d2: int
    d3: int | None


@dataclass(frozen=True)
class Verdict:
    failed_conditions: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failed_conditions

    def describe(self) -> list[str]:
        return [f"{label}: {CONDITIONS[label]}" for label in self.failed_conditions]

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class FamilyWitness:
    """A parameter tuple that passed its family's check.

    ``a`` is the kernel/last summand divisor and ``b`` the first summand
    for the stable families; reducible ternary witnesses only use ``b``
    (``a`` is the zero class) and the trivial witness has both zero.
    """

    family: Family
    a: VerticalDivisor
    b: VerticalDivisor

    @classmethod
    def trivial(cls, sig: SeifertSignature) -> FamilyWitness:
        return cls(Family.TRIVIAL, zero(sig), zero(sig))

    @classmethod
    def reducible(cls, b: VerticalDivisor) -> FamilyWitness:
        return cls(Family.REDUCIBLE_TERNARY, zero(b.sig), b)

    def sort_key(self) -> tuple:
        return (self.a.sort_key(), self.b.sort_key())


def _same(*divs: VerticalDivisor) -> None:
    for d in divs[1:]:
        if d.sig.m != divs[0].sig.m:
            raise SignatureMismatch(f"{divs[0].sig} vs {d.sig}")


def d_value(x: VerticalDivisor, y: VerticalDivisor) -> int:
    """F-coefficient of the normalized class ``x - y``: ``x - y - #{x_k < y_k}``."""
    return x.f_coeff - y.f_coeff - sum(1 for p, q in zip(x.residues, y.residues) if p < q)


def derived_quantities(a: VerticalDivisor, b: VerticalDivisor,
                       c: VerticalDivisor | None = None) -> DerivedQuantities:
    if c is None:
        _same(a, b)
        return DerivedQuantities(a_value(a), a_value(b), None, None, d_value(a, b), None)
    _same(a, b, c)
    return DerivedQuantities(a_value(a), a_value(b), a_value(c),
                             d_value(b, c), d_value(a, b), d_value(a, c))


def check_stable_ternary(a: VerticalDivisor, b: VerticalDivisor) -> Verdict:
    _same(a, b)
    A, B = a_value(a), a_value(b)
    failed = []
    if not has_twisted_one_form(b):
        failed.append("tern.i")
    if a.f_coeff + sum(1 for r in a.residues if r != 0) < 2:
        failed.append("tern.ii")
    if not 2 * A < B:
        failed.append("tern.iii")
    if not A < 2 * B:
        failed.append("tern.iv")
    return Verdict(tuple(failed))


def admissible_c_tuples(a: VerticalDivisor, b: VerticalDivisor) -> list[VerticalDivisor]:
    """All normalized ``c`` with ``d1 >= 0`` and ``C >= (2/3)(A+B)``.

    ``d1 >= 0`` forces ``c <= b`` and ``C < c + n`` forces
    ``c >= ceil((2/3)(A+B)) - n``, so the scan is finite.
    """
    _same(a, b)
    sig = a.sig
    bound = Fraction(2, 3) * (a_value(a) + a_value(b))
    lo = math.ceil(bound) - sig.n
    out = []
    for c in range(lo, b.f_coeff + 1):
        for res in _residue_tuples(sig):
            cd = VerticalDivisor(sig, c, res)
            if d_value(b, cd) >= 0 and a_value(cd) >= bound:
                out.append(cd)
    return out


def _residue_tuples(sig: SeifertSignature):
    return itertools.product(*(range(mk) for mk in sig.m))


def check_stable_binary(a: VerticalDivisor, b: VerticalDivisor) -> Verdict:
    _same(a, b)
    A, B = a_value(a), a_value(b)
    d2 = d_value(a, b)
    failed = []
    if not -B < A < B / 2:
        failed.append("bin.i")
    if not d2 <= -2:
        failed.append("bin.ii")
    if not has_twisted_one_form(b):
        failed.append("bin.iii")
    for c in admissible_c_tuples(a, b):
        d1, d3 = d_value(b, c), d_value(a, c)
        if not d1 + 1 <= min(-d2 - 1, -d3 - 1):
            failed.append("bin.iv")
            break
    verdict = Verdict(tuple(failed))
    if verdict.ok:
        assert B > 0
    return verdict


def check_reducible_ternary(b: VerticalDivisor) -> Verdict:
    failed = []
    if not a_value(b) > 0:
        failed.append("redtern.i")
    halves = sum(1 for r, mk in zip(b.residues, b.sig.m) if 2 * r >= mk)
    if not 2 * b.f_coeff + halves <= -2:
        failed.append("redtern.ii")
    return Verdict(tuple(failed))


def check_witness(w: FamilyWitness) -> Verdict:
    if w.family is Family.STABLE_TERNARY:
        return check_stable_ternary(w.a, w.b)
    if w.family is Family.STABLE_BINARY:
        return check_stable_binary(w.a, w.b)
    if w.family is Family.REDUCIBLE_TERNARY:
        return check_reducible_ternary(w.b)
    z = zero(w.a.sig)
    return Verdict(() if (w.a, w.b) == (z, z) else ("trivial",))


def toledo_of_witness(w: FamilyWitness) -> Fraction:
    """Toledo value of the direct witness (before closing under sign)."""
    if w.family in (Family.STABLE_TERNARY, Family.STABLE_BINARY):
        return a_value(w.a) + a_value(w.b)
    if w.family is Family.REDUCIBLE_TERNARY:
        return a_value(w.b)
    return Fraction(0)
