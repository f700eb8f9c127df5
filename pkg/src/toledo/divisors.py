"""Vertical divisor classes ``aF + sum a_k F_k`` on the Dolgachev surface.

Classes are stored in normal form ``0 <= a_k < m_k`` using the relation
``m_k F_k ~ F``.  The value map ``D -> a + sum a_k/m_k`` is an injective
group homomorphism onto ``(1/M) Z``, so ``M * a_value(D)`` is a convenient
integer coordinate for a class (see :func:`lattice_coordinate`).
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .seifert import SeifertSignature

__all__ = [
    "LengthMismatch",
    "SignatureMismatch",
    "VerticalDivisor",
    "StarCertificate",
    "normalize",
    "add",
    "negate",
    "scale",
    "zero",
    "a_value",
    "lattice_coordinate",
    "from_lattice",
    "cohomology_dims",
    "canonical_divisor",
    "twisted_one_form_h0",
    "has_twisted_one_form",
    "pair_sum",
    "star_certificate",
    "star_certificate_floorform",
    "divisible_by_three",
    "parse_divisor",
]


class LengthMismatch(ValueError):
    pass


class SignatureMismatch(ValueError):
    pass


@dataclass(frozen=True)
class VerticalDivisor:
    sig: SeifertSignature
    f_coeff: int
    residues: tuple[int, ...]

    def literal(self) -> str:
        return f"{self.f_coeff}:" + ",".join(str(r) for r in self.residues)

    def __str__(self) -> str:
        return self.literal()

    def __add__(self, other: VerticalDivisor) -> VerticalDivisor:
        return add(self, other)

    def __neg__(self) -> VerticalDivisor:
        return negate(self)

    def __sub__(self, other: VerticalDivisor) -> VerticalDivisor:
        return add(self, negate(other))

    def sort_key(self) -> tuple[int, ...]:
        return (self.f_coeff, *self.residues)


@dataclass(frozen=True)
class StarCertificate:
    """Integers with ``3y + sum s_k = total`` and ``3y_k - m_k s_k = t_k``."""

    y: int
    y_res: tuple[int, ...]
    s: tuple[int, ...]

    def verify(self, sig: SeifertSignature, total: int, sums: Sequence[int]) -> bool:
        if len(self.y_res) != sig.n or len(self.s) != sig.n or len(sums) != sig.n:
            return False
        if 3 * self.y + sum(self.s) != total:
            return False
        return all(3 * yk - mk * sk == tk
                   for yk, sk, mk, tk in zip(self.y_res, self.s, sig.m, sums))

    def as_dict(self) -> dict:
        return {"y": self.y, "y_res": list(self.y_res), "s": list(self.s)}


def _check_length(sig: SeifertSignature, coeffs: Sequence[int]) -> None:
    if len(coeffs) != sig.n:
        raise LengthMismatch(f"expected {sig.n} residues, got {len(coeffs)}")


def _same_sig(*divs: VerticalDivisor) -> SeifertSignature:
    sig = divs[0].sig
    for d in divs[1:]:
        if d.sig.m != sig.m:
            raise SignatureMismatch(f"{sig} vs {d.sig}")
    return sig


def normalize(sig: SeifertSignature, f_coeff: int, raw_residues: Sequence[int]) -> VerticalDivisor:
    """Reduce each residue mod ``m_k`` and carry the quotient into ``f_coeff``."""
    _check_length(sig, raw_residues)
    a = int(f_coeff)
    res = []
    for r, mk in zip(raw_residues, sig.m):
        q, rk = divmod(int(r), mk)
        a += q
        res.append(rk)
    return VerticalDivisor(sig, a, tuple(res))


def zero(sig: SeifertSignature) -> VerticalDivisor:
    return VerticalDivisor(sig, 0, (0,) * sig.n)


def add(d1: VerticalDivisor, d2: VerticalDivisor) -> VerticalDivisor:
    sig = _same_sig(d1, d2)
    return normalize(sig, d1.f_coeff + d2.f_coeff,
                     [x + y for x, y in zip(d1.residues, d2.residues)])


def negate(d: VerticalDivisor) -> VerticalDivisor:
    return normalize(d.sig, -d.f_coeff, [-r for r in d.residues])


def scale(k: int, d: VerticalDivisor) -> VerticalDivisor:
    return normalize(d.sig, k * d.f_coeff, [k * r for r in d.residues])


def a_value(d: VerticalDivisor) -> Fraction:
    """Exact value ``a + sum a_k/m_k``; its denominator divides ``M``."""
    return Fraction(lattice_coordinate(d), d.sig.M)


def lattice_coordinate(d: VerticalDivisor) -> int:
    """``M * a_value(d)`` as an integer."""
    M = d.sig.M
    return d.f_coeff * M + sum(r * (M // mk) for r, mk in zip(d.residues, d.sig.m))


def from_lattice(sig: SeifertSignature, z: int) -> VerticalDivisor:
    """Inverse of :func:`lattice_coordinate` (Chinese remainder theorem)."""
    M = sig.M
    res = []
    rest = z
    for mk in sig.m:
        w = M // mk
        rk = (z * pow(w, -1, mk)) % mk
        res.append(rk)
        rest -= rk * w
    assert rest % M == 0
    return VerticalDivisor(sig, rest // M, tuple(res))


def cohomology_dims(d: VerticalDivisor) -> tuple[int, int]:
    """``(h^0, h^1)`` of the line bundle; depends only on the F-coefficient."""
    a = d.f_coeff
    return max(a + 1, 0), max(a, -a - 1)


def canonical_divisor(sig: SeifertSignature) -> VerticalDivisor:
    return VerticalDivisor(sig, -1, tuple(mk - 1 for mk in sig.m))


def twisted_one_form_h0(b: VerticalDivisor) -> int:
    """Dimension of holomorphic one-forms twisted by ``O(-B)``: ``max(0, -2-b)``."""
    return max(0, -2 - b.f_coeff)


def has_twisted_one_form(b: VerticalDivisor) -> bool:
    """Nonvanishing criterion used by the family checks: ``b <= -2``."""
    return b.f_coeff <= -2


def pair_sum(a: VerticalDivisor, b: VerticalDivisor) -> tuple[int, tuple[int, ...]]:
    """Raw (unnormalized) coefficient sum ``(a+b; a_k+b_k)``."""
    _same_sig(a, b)
    return a.f_coeff + b.f_coeff, tuple(x + y for x, y in zip(a.residues, b.residues))


def divisible_by_three(sig: SeifertSignature, total: int, sums: Sequence[int]) -> bool:
    """Whether ``3`` divides ``M`` times the value of the raw class."""
    _check_length(sig, sums)
    M = sig.M
    return (total * M + sum(t * (M // mk) for t, mk in zip(sums, sig.m))) % 3 == 0


def star_certificate(sig: SeifertSignature, total: int,
                     sums: Sequence[int]) -> StarCertificate | None:
    """Certificate that the raw class ``total F + sum t_k F_k`` is divisible by 3.

    Solves ``3 y_k = t_k (mod m_k)`` per fibre, then picks among the (at most
    three) solutions for a fibre with ``3 | m_k`` so that ``total - sum s_k``
    is a multiple of 3.  The first such choice in lexicographic order of
    ``y_k`` is returned.
    """
    _check_length(sig, sums)
    sol = _star_residues(sig.m, int(total) % 3, tuple(int(t) for t in sums))
    if sol is None:
        return None
    y_res, s = sol
    return StarCertificate((total - sum(s)) // 3, y_res, s)


@functools.lru_cache(maxsize=1 << 16)
def _star_residues(m: tuple[int, ...], total_mod3: int, sums: tuple[int, ...]):
    # y only depends on total through its residue mod 3
    choices: list[list[tuple[int, int]]] = []
    for tk, mk in zip(sums, m):
        opts = [(yk, (3 * yk - tk) // mk) for yk in range(mk) if (3 * yk - tk) % mk == 0] \
            if mk % 3 == 0 else [_solve_unit(tk, mk)]
        if not opts:
            return None
        choices.append(opts)
    for combo in itertools.product(*choices):
        s = tuple(sk for _, sk in combo)
        if (total_mod3 - sum(s)) % 3 == 0:
            return tuple(yk for yk, _ in combo), s
    return None


@functools.lru_cache(maxsize=None)
def _inv3(mk: int) -> int:
    return pow(3, -1, mk)


def _solve_unit(tk: int, mk: int) -> tuple[int, int]:
    yk = (tk * _inv3(mk)) % mk
    return yk, (3 * yk - tk) // mk


def star_certificate_floorform(sig: SeifertSignature, total: int,
                               sums: Sequence[int]) -> tuple[int, tuple[int, ...]] | None:
    """Exhaustive search for ``(y; y_k)`` with ``0 <= y_k < m_k`` and

        3y + sum floor(3 y_k / m_k) = a + b,   3 y_k - floor(3 y_k / m_k) m_k = a_k + b_k

    evaluated on the normalized class, whose residues lie in ``[0, m_k)``.
    Since each floor term lies in ``[0, 2]``, ``y`` is confined to
    ``[floor((a+b-2n)/3), ceil((a+b)/3)]``.
    """
    d = normalize(sig, total, sums)
    t, ts = d.f_coeff, d.residues
    per_fibre = []
    for tk, mk in zip(ts, sig.m):
        hits = [yk for yk in range(mk) if 3 * yk - (3 * yk // mk) * mk == tk]
        if not hits:
            return None
        per_fibre.append(hits)
    lo = (t - 2 * sig.n) // 3
    hi = -((-t) // 3)
    for y in range(lo, hi + 1):
        for ys in itertools.product(*per_fibre):
            if 3 * y + sum(3 * yk // mk for yk, mk in zip(ys, sig.m)) == t:
                return y, tuple(ys)
    return None


def parse_divisor(sig: SeifertSignature, text: str) -> VerticalDivisor:
    """Parse ``"a:a1,...,an"`` (unnormalized input is accepted)."""
    head, sep, tail = text.strip().partition(":")
    if not sep:
        raise ValueError(f"divisor literal {text!r} must look like 'a:a1,...,an'")
    try:
        a = int(head)
        res = [int(tok) for tok in tail.split(",") if tok.strip()]
    except ValueError as exc:
        raise ValueError(f"bad divisor literal {text!r}") from exc
    return normalize(sig, a, res)
