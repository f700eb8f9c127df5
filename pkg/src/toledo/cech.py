"""Coefficient-model check of the injectivity criterion for the coboundary map.

A section of the twisted quotient bundle is a coefficient vector
``(s_0, ..., s_{d1})``; the extension class is ``sum sigma_j w^j`` over
``d2 < j < 0``, and a class ``w^j`` survives in the twisted sub-bundle's
``H^1`` exactly for ``d3 < j < 0``.  The coboundary is then the Toeplitz
matrix ``Theta[j, i] = sigma_{j-i}`` and injectivity is a rank question,
answered here in exact integer arithmetic.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

__all__ = [
    "BadShape",
    "SearchExhausted",
    "SigmaVector",
    "ThetaMatrix",
    "ScanCell",
    "ScanReport",
    "theta_matrix",
    "delta_injective",
    "h0_extension_twist",
    "construct_generic_sigma",
    "verify_generic",
    "random_sigma",
    "lemma_equivalence_scan",
    "exact_rank",
    "predicate",
]


class BadShape(ValueError):
    pass


class SearchExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class SigmaVector:
    """Coefficients ``sigma_{-1}, sigma_{-2}, ..., sigma_{d2+1}``."""

    d2: int
    coeffs: tuple[Fraction, ...]
    certified: bool = False

    def __post_init__(self):
        if self.d2 > -2:
            raise BadShape(f"d2 = {self.d2} must be <= -2")
        if len(self.coeffs) != -self.d2 - 1:
            raise BadShape(f"expected {-self.d2 - 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def of(cls, coeffs: Sequence, certified: bool = False) -> SigmaVector:
        c = tuple(Fraction(x) for x in coeffs)
        return cls(-len(c) - 1, c, certified)

    def at(self, j: int) -> Fraction:
        """``sigma_j``; zero outside ``d2 < j < 0``."""
        if self.d2 < j < 0:
            return self.coeffs[-j - 1]
        return Fraction(0)

    def scaled(self, lam) -> SigmaVector:
        lam = Fraction(lam)
        if lam == 0:
            raise ValueError("scaling by zero destroys the extension class")
        return SigmaVector(self.d2, tuple(lam * c for c in self.coeffs), self.certified)

    def as_strings(self) -> list[str]:
        return [_frac(c) for c in self.coeffs]


@dataclass(frozen=True)
class ThetaMatrix:
    d1: int
    d3: int
    rows: tuple[int, ...]  # output exponents j, top to bottom
    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.d1 + 1

    def entry(self, j: int, i: int) -> Fraction:
        return self.entries[j - self.d3 - 1][i]

    def column(self, i: int) -> list[Fraction]:
        return [row[i] for row in self.entries]


def _frac(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _check_shape(d1: int, d3: int) -> None:
    if d1 < 0:
        raise BadShape(f"d1 = {d1} must be >= 0")
    if d3 > -2:
        raise BadShape(f"d3 = {d3} must be <= -2")


def theta_matrix(sigma: SigmaVector, d1: int, d3: int) -> ThetaMatrix:
    """Rows ``j = d3+1, ..., -1``; columns ``i = 0, ..., d1``; entry ``sigma_{j-i}``."""
    _check_shape(d1, d3)
    rows = tuple(range(d3 + 1, 0))
    entries = tuple(tuple(sigma.at(j - i) for i in range(d1 + 1)) for j in rows)
    return ThetaMatrix(d1, d3, rows, entries)


def exact_rank(rows: Sequence[Sequence]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination.

    Rows are first scaled to integers, so every intermediate quantity is an
    exact integer and the division step is always exact.
    """
    mat = []
    for row in rows:
        row = [Fraction(x) for x in row]
        den = math.lcm(*(x.denominator for x in row)) if row else 1
        mat.append([int(x * den) for x in row])
    if not mat or not mat[0]:
        return 0
    n_rows, n_cols = len(mat), len(mat[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        piv = next((r for r in range(rank, n_rows) if mat[r][col] != 0), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        p = mat[rank][col]
        for r in range(rank + 1, n_rows):
            q = mat[r][col]
            mat[r] = [(p * mat[r][c] - q * mat[rank][c]) // prev for c in range(n_cols)]
        prev = p
        rank += 1
        if rank == n_rows:
            break
    return rank


def delta_injective(sigma: SigmaVector, d1: int, d3: int) -> bool:
    theta = theta_matrix(sigma, d1, d3)
    return exact_rank(theta.entries) == d1 + 1


def h0_extension_twist(sigma: SigmaVector, d1: int, d3: int) -> int:
    """``dim ker Theta``: sections of the twisted extension bundle (the sub has none)."""
    theta = theta_matrix(sigma, d1, d3)
    return d1 + 1 - exact_rank(theta.entries)


def predicate(d1: int, d2: int, d3: int) -> bool:
    return d1 + 1 <= min(-d2 - 1, -d3 - 1)


def _square(sigma: SigmaVector, k: int) -> tuple[tuple[Fraction, ...], ...]:
    # Theta with d1 = k-1, d3 = -k-1; every admissible Theta contains one
    # of these as its bottom block, so nonsingularity of all of them gives
    # full column rank everywhere the predicate holds
    return theta_matrix(sigma, k - 1, -k - 1).entries


def _squares_ok(sigma: SigmaVector) -> bool:
    return all(exact_rank(_square(sigma, k)) == k for k in range(1, -sigma.d2))


def construct_generic_sigma(d2: int) -> SigmaVector:
    """Deterministic integer sweep for a vector making every square Theta nonsingular.

    ``sigma_{-1} = 1``; each further coefficient is the least positive integer
    keeping all square blocks of the current prefix nonsingular.  With the new
    coefficient set to zero every old block keeps its (nonzero) determinant
    and the new block is triangular, so each determinant is a nonzero
    polynomial in the new coefficient and the sweep terminates.
    """
    if d2 > -2:
        raise BadShape(f"d2 = {d2} must be <= -2")
    length = -d2 - 1
    budget = 10 * d2 * d2
    coeffs = [Fraction(1)]
    for p in range(2, length + 1):
        for cand in range(1, budget + 1):
            trial = SigmaVector.of(coeffs + [Fraction(cand)])
            if _squares_ok(trial):
                coeffs.append(Fraction(cand))
                break
        else:
            raise SearchExhausted(f"no coefficient sigma_{-p} found in 1..{budget}")
    sigma = SigmaVector.of(coeffs)
    if not _squares_ok(sigma):
        raise SearchExhausted(f"final vector for d2 = {d2} failed certification")
    return SigmaVector(sigma.d2, sigma.coeffs, certified=True)


def verify_generic(sigma: SigmaVector) -> bool:
    """Exhaustive check: every admissible Theta has full column rank.

    Rows with ``j <= d2`` are identically zero, so ``d3`` below ``d2 - 1``
    only appends zero rows and need not be visited.
    """
    d2 = sigma.d2
    for d1 in range(0, -d2 - 1):
        for d3 in range(min(-2, d2 - 1), -1):
            if predicate(d1, d2, d3) and not delta_injective(sigma, d1, d3):
                return False
    return _squares_ok(sigma)


def random_sigma(d2: int, rng: random.Random, lo: int = -9, hi: int = 9) -> SigmaVector:
    """Random nonzero rational coefficients (uncertified)."""
    coeffs = []
    for _ in range(-d2 - 1):
        num = 0
        while num == 0:
            num = rng.randint(lo, hi)
        coeffs.append(Fraction(num, rng.randint(1, 5)))
    return SigmaVector.of(coeffs)


@dataclass(frozen=True)
class ScanCell:
    d1: int
    d3: int
    predicate: bool
    injective: bool

    def as_dict(self) -> dict:
        return {"d1": self.d1, "d3": self.d3, "predicate": self.predicate,
                "injective": self.injective}


@dataclass(frozen=True)
class ScanReport:
    d2: int
    sigma: SigmaVector
    cells: tuple[ScanCell, ...]
    mismatches: int
    random_trials: int = 0
    seed: int | None = None
    # (trial, d1, d3) where a random sigma was injective although the predicate fails
    random_violations: tuple[tuple[int, int, int], ...] = field(default=())

    def as_dict(self) -> dict:
        return {
            "d2": self.d2,
            "sigma": self.sigma.as_strings(),
            "cells": [c.as_dict() for c in self.cells],
            "mismatches": self.mismatches,
            "random_trials": self.random_trials,
            "seed": self.seed,
        }


def _cells(d1_max: int):
    return [(d1, d3) for d1 in range(d1_max + 1) for d3 in range(-d1_max - 3, -1)]


def lemma_equivalence_scan(d2: int, d1_max: int, *, random_trials: int = 20,
                           seed: int = 0, jobs: int = 1) -> ScanReport:
    """Compare the combinatorial predicate with exact injectivity on a grid.

    For the certified generic vector every cell must agree.  For each of the
    ``random_trials`` seeded random vectors, injectivity must fail wherever
    the predicate fails (that direction holds for every extension class).
    """
    if d2 > -2:
        raise BadShape(f"d2 = {d2} must be <= -2")
    if d1_max < 0:
        raise BadShape(f"d1_max = {d1_max} must be >= 0")
    sigma = construct_generic_sigma(d2)
    grid = _cells(d1_max)

    def one(cell):
        d1, d3 = cell
        return ScanCell(d1, d3, predicate(d1, d2, d3), delta_injective(sigma, d1, d3))

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            cells = tuple(pool.map(one, grid))
    else:
        cells = tuple(one(c) for c in grid)
    mismatches = sum(1 for c in cells if c.predicate != c.injective)

    rng = random.Random(seed)
    violations = []
    failing = [(d1, d3) for d1, d3 in grid if not predicate(d1, d2, d3)]
    for trial in range(random_trials):
        rs = random_sigma(d2, rng)
        violations.extend((trial, d1, d3) for d1, d3 in failing if delta_injective(rs, d1, d3))
    return ScanReport(d2, sigma, cells, mismatches + len(violations), random_trials, seed,
                      tuple(violations))
