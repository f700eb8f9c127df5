"""Seifert invariants of the base orbifold and their validation.

A Seifert fibered homology sphere is described here only through the
orders ``m_1, ..., m_n`` of its multiple fibres (equivalently, the cone
points of the base orbifold).  Twisting integers may be carried along but
never enter a computation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "SignatureError",
    "BadMultiplicity",
    "NotCoprime",
    "TooFewConePoints",
    "ExcludedTriple",
    "SeifertSignature",
    "validate_signature",
    "parse_signature",
    "orbifold_presentation",
]


class SignatureError(ValueError):
    """Base class for rejected multiplicity data."""


class BadMultiplicity(SignatureError):
    pass


class NotCoprime(SignatureError):
    pass


class TooFewConePoints(SignatureError):
    pass


class ExcludedTriple(SignatureError):
    pass


@dataclass(frozen=True)
class SeifertSignature:
    """Validated multiplicities ``m`` plus optional, inert twisting data.

    Construct through :func:`validate_signature`; the dataclass itself does
    not re-check its invariants.
    """

    m: tuple[int, ...]
    twists: tuple[int, ...] | None = None

    @property
    def n(self) -> int:
        return len(self.m)

    @property
    def M(self) -> int:
        return math.prod(self.m)

    def literal(self) -> str:
        text = ",".join(str(mk) for mk in self.m)
        if self.twists is not None:
            c0, *rest = self.twists
            text += f";{c0}:" + ",".join(str(c) for c in rest)
        return text

    def __str__(self) -> str:
        return "(" + ",".join(str(mk) for mk in self.m) + ")"


def validate_signature(raw_m: Iterable[int],
                       raw_twists: Sequence[int] | None = None) -> SeifertSignature:
    """Check the standing restrictions on the multiplicities.

    Raises one of the :class:`SignatureError` subclasses when a multiplicity
    is below 2, two multiplicities share a factor, there are fewer than
    three cone points, or the multiplicities are exactly {2, 3, 5}.
    """
    m = tuple(int(mk) for mk in raw_m)
    if not m:
        raise TooFewConePoints("no multiplicities given")
    for mk in m:
        if mk < 2:
            raise BadMultiplicity(f"multiplicity {mk} is < 2")
    for j in range(len(m)):
        for k in range(j + 1, len(m)):
            g = math.gcd(m[j], m[k])
            if g != 1:
                raise NotCoprime(f"gcd({m[j]}, {m[k]}) = {g}")
    if len(m) < 3:
        raise TooFewConePoints(f"need at least 3 cone points, got {len(m)}")
    if len(m) == 3 and sorted(m) == [2, 3, 5]:
        raise ExcludedTriple("multiplicities {2,3,5} give a finite orbifold group")

    # negative orbifold Euler characteristic; implied by the checks above
    euler = 2 - sum(1 - Fraction(1, mk) for mk in m)
    assert euler < 0, f"non-hyperbolic multiplicities {m}"

    twists = None if raw_twists is None else tuple(int(c) for c in raw_twists)
    return SeifertSignature(m, twists)


def parse_signature(text: str) -> SeifertSignature:
    """Parse ``"2,3,11"`` or ``"2,3,11;c0:c1,c2,c3"``."""
    text = text.strip()
    twists = None
    if ";" in text:
        text, _, tw = text.partition(";")
        c0, sep, rest = tw.partition(":")
        if not sep:
            raise SignatureError(f"twist suffix {tw!r} must look like 'c0:c1,...,cn'")
        try:
            twists = [int(c0)] + [int(c) for c in rest.split(",") if c.strip()]
        except ValueError as exc:
            raise SignatureError(f"bad twist literal {tw!r}") from exc
    try:
        m = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise SignatureError(f"bad multiplicity literal {text!r}") from exc
    return validate_signature(m, twists)


def orbifold_presentation(sig: SeifertSignature) -> str:
    """Human-readable presentation of the orbifold fundamental group."""
    gens = [f"u{k}" for k in range(1, sig.n + 1)]
    powers = [f"{g}^{mk}" for g, mk in zip(gens, sig.m)]
    product = "·".join(gens)
    return "⟨" + ",".join(gens) + " | " + " = ".join(powers + [product]) + " = 1⟩"
