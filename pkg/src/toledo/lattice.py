"""Vectorized scans of the family conditions in integer coordinates.

A normalized vertical class is identified with ``z = M * (a + sum a_k/m_k)``.
Writing ``z = qM + t`` with ``0 <= t < M``, the residues ``a_k`` depend
only on ``t`` and the F-coefficient is ``q - J(t)`` where
``J(t) = (sum a_k M/m_k - t) / M`` lies in ``[0, n-1]``.  All family
conditions become array expressions over these tables.

For the stable binary family the quantified condition over ``c`` is
rewritten with ``W = M(B - C)`` and ``D = M(A - B)``: the admissible ``c``
are exactly the ``W`` with ``f(W) >= 0`` and ``3W <= M(B - 2A)``, and
the condition fails at ``W`` iff ``f(W) + f(D) + 2 > 0`` or
``f(W) + f(D + W) + 2 > 0``.  The first failing ``W`` depends on ``D``
alone, so it is tabulated once per scan.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .divisors import VerticalDivisor
from .seifert import SeifertSignature

log = logging.getLogger(__name__)

MAX_MODULUS = 2_000_000


class EnumerationTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Window:
    lo: int
    hi: int

    def widen(self, delta: int) -> Window:
        return Window(self.lo - delta, self.hi + delta)

    def as_list(self) -> list[int]:
        return [self.lo, self.hi]


def _chunks(n: int, size: int):
    return [(i, min(i + size, n)) for i in range(0, n, size)]


class ResidueTable:
    """Per-signature lookup tables indexed by ``t = z mod M``."""

    def __init__(self, sig: SeifertSignature):
        M = sig.M
        if M > MAX_MODULUS:
            raise EnumerationTooLarge(
                f"M = {M} residue classes exceed the enumeration limit {MAX_MODULUS}")
        self.sig = sig
        self.M = M
        self.m = np.array(sig.m, dtype=np.int64)
        w = np.array([M // mk for mk in sig.m], dtype=np.int64)
        inv = np.array([pow(M // mk, -1, mk) for mk in sig.m], dtype=np.int64)
        t = np.arange(M, dtype=np.int64)
        self.R = (t[:, None] * inv[None, :]) % self.m[None, :]
        self.base = self.R @ w
        self.J = (self.base - t) // M
        self.nz = (self.R != 0).sum(axis=1)
        self.half = (2 * self.R >= self.m[None, :]).sum(axis=1)
        self._sorted_base = np.sort(self.base)
        self._rows = [tuple(row) for row in self.R.tolist()]
        self._J = self.J.tolist()

    def f(self, z):
        """F-coefficient of the class with coordinate ``z`` (vectorized)."""
        return z // self.M - self.J[z % self.M]

    def points(self, window: Window) -> np.ndarray:
        """Sorted coordinates of every class with F-coefficient in ``window``."""
        if window.hi < window.lo:
            return np.empty(0, dtype=np.int64)
        a = np.arange(window.lo, window.hi + 1, dtype=np.int64)
        pts = (a[:, None] * self.M + self._sorted_base[None, :]).ravel()
        return np.sort(pts)

    def divisor(self, z: int) -> VerticalDivisor:
        q, t = divmod(int(z), self.M)
        return VerticalDivisor(self.sig, q - self._J[t], self._rows[t])

    def lex_keys(self, z: np.ndarray) -> list[np.ndarray]:
        """Keys for ``np.lexsort`` ordering by ``(a, a_1, ..., a_n)``; last is primary."""
        t = z % self.M
        keys = [self.R[t, k] for k in range(self.sig.n - 1, -1, -1)]
        keys.append(self.f(z))
        return keys


class TernaryScan:
    """Pairs ``(x, y)``: ``b <= -2``, ``a + #{a_k != 0} >= 2``, ``2x < y``, ``x < 2y``."""

    def __init__(self, table: ResidueTable, a_win: Window, b_win: Window):
        self.table = table
        xs = table.points(a_win)
        self.xs = xs[table.f(xs) + table.nz[xs % table.M] >= 2]
        ys = table.points(b_win)
        self.ys = ys[table.f(ys) <= -2]

    def _x_bound(self, y):
        return np.minimum((y - 1) // 2, 2 * y - 1)

    def count(self) -> int:
        if not len(self.xs) or not len(self.ys):
            return 0
        idx = np.searchsorted(self.xs, self._x_bound(self.ys), side="right")
        return int(idx.sum())

    def pairs(self) -> tuple[np.ndarray, np.ndarray]:
        if not len(self.xs) or not len(self.ys):
            e = np.empty(0, dtype=np.int64)
            return e, e
        idx = np.searchsorted(self.xs, self._x_bound(self.ys), side="right")
        x = np.concatenate([self.xs[:i] for i in idx])
        y = np.repeat(self.ys, idx)
        return x, y


class BinaryScan:
    """Pairs ``(x, y)`` passing all four stable binary conditions."""

    def __init__(self, table: ResidueTable, a_win: Window, b_win: Window, jobs: int = 1):
        self.table = table
        self.jobs = jobs
        self.xs = table.points(a_win)
        ys = table.points(b_win)
        self.ys = ys[(ys > 0) & (table.f(ys) <= -2)]
        self._wstar = None

    def _first_failure(self):
        """Tabulate, per ``D``, the least ``W`` violating the ``c``-condition."""
        if self._wstar is not None:
            return self._wstar
        tab = self.table
        ymax = int(self.ys[-1])
        d_lo = 1 - 2 * ymax
        w_cap = ymax
        W = np.arange(0, w_cap + 1, dtype=np.int64)
        fW = tab.f(W)
        keep = fW >= 0
        W, fW = W[keep], fW[keep]
        D = np.arange(d_lo, 0, dtype=np.int64)
        fD = tab.f(D)
        wstar = np.full(len(D), w_cap + 1, dtype=np.int64)
        live = np.nonzero(fD <= -2)[0]
        if len(W):
            block = max(1, 4_000_000 // len(W))

            def run(bounds):
                lo, hi = bounds
                sel = live[lo:hi]
                d = D[sel][:, None]
                bad = (fW[None, :] + fD[sel][:, None] + 2 > 0)
                bad |= fW[None, :] + tab.f(d + W[None, :]) + 2 > 0
                first = np.where(bad.any(axis=1), W[bad.argmax(axis=1)], w_cap + 1)
                return sel, first

            for sel, first in _map(run, _chunks(len(live), block), self.jobs):
                wstar[sel] = first
        self._wstar = (d_lo, wstar)
        return self._wstar

    def _accept_for(self, y: int) -> np.ndarray:
        tab = self.table
        lo = np.searchsorted(self.xs, -y + 1, side="left")
        hi = np.searchsorted(self.xs, (y - 1) // 2, side="right")
        x = self.xs[lo:hi]
        d = x - y
        d_lo, wstar = self._first_failure()
        ok = tab.f(d) <= -2
        ok &= (y - 2 * x) < 3 * wstar[d - d_lo]
        return x[ok]

    def pairs(self) -> tuple[np.ndarray, np.ndarray]:
        if not len(self.xs) or not len(self.ys):
            e = np.empty(0, dtype=np.int64)
            return e, e
        parts = _map(self._accept_for, [int(y) for y in self.ys], self.jobs)
        x = np.concatenate(parts) if parts else np.empty(0, dtype=np.int64)
        y = np.repeat(self.ys, [len(p) for p in parts])
        return x, y

    def count(self) -> int:
        return len(self.pairs()[0])


class ReducibleScan:
    """Single classes ``y`` with ``B > 0`` and ``2b + #{2 b_k >= m_k} <= -2``."""

    def __init__(self, table: ResidueTable, b_win: Window):
        ys = table.points(b_win)
        ok = (ys > 0) & (2 * table.f(ys) + table.half[ys % table.M] <= -2)
        self.ys = ys[ok]

    def count(self) -> int:
        return len(self.ys)


def _map(fn, items, jobs: int):
    if jobs <= 1 or len(items) < 2:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))
