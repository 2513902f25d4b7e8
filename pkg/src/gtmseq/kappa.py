"""Sequence definitions over a finite description of the digit-weight map.

A ``KappaSpec`` describes a map kappa(s, y) -> Z_L on digit values
s in [1, k-1] and digit positions y >= 0, either as an eventually
periodic table (preperiod y0, period p) or as a finite window that hard
errors beyond its bound.  The sequence it induces is

    a(n) = sum over expansion terms (s, y) of n of kappa(s, y)  (mod L),

which this module evaluates pointwise, in vectorized batches, and by the
equivalent word substitution (prefix doubling by factor k per step).
Letters are residue indices 0..L-1; the corresponding complex roots of
unity are never materialized.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceededError, WindowExceededError

__all__ = [
    "KappaSpec",
    "SequenceWindow",
    "a_of_n",
    "a_values",
    "b_exponent",
    "equally_spaced",
    "generate_prefix_morphic",
    "word_budget",
]

_DEFAULT_BUDGET = 8_000_000


def word_budget() -> int:
    """Maximum in-memory word/array length, from GTMSEQ_BUDGET if set."""
    return int(os.environ.get("GTMSEQ_BUDGET", _DEFAULT_BUDGET))


@dataclass(frozen=True)
class KappaSpec:
    """Finite description of kappa: {1..k-1} x N -> Z_L.

    ``table`` has k-1 rows (s = 1..k-1) and ``preperiod + period``
    columns; column y for y >= preperiod is read from
    ``preperiod + (y - preperiod) % period``.  A finite-window spec has
    ``period=None`` and exactly ``window`` columns; queries at
    y >= window raise WindowExceededError, never extend silently.
    """

    L: int
    k: int
    preperiod: int
    period: int | None
    table: tuple[tuple[int, ...], ...]
    window: int | None = None
    name: str | None = None

    def __post_init__(self):
        if self.L < 2:
            raise ValueError(f"L must be >= 2, got {self.L}")
        if self.k < 2:
            raise ValueError(f"k must be >= 2, got {self.k}")
        if len(self.table) != self.k - 1:
            raise ValueError(
                f"table must have {self.k - 1} rows (s = 1..k-1), got {len(self.table)}"
            )
        if self.period is None:
            if self.window is None or self.window < 1:
                raise ValueError("finite-window spec needs window >= 1")
            cols = self.window
        else:
            if self.window is not None:
                raise ValueError("give either period or window, not both")
            if self.preperiod < 0 or self.period < 1:
                raise ValueError("need preperiod >= 0 and period >= 1")
            cols = self.preperiod + self.period
        for row in self.table:
            if len(row) != cols:
                raise ValueError(f"each table row must have {cols} columns")
            for v in row:
                if not 0 <= v < self.L:
                    raise ValueError(f"table entry {v} outside [0, {self.L - 1}]")

    @property
    def is_finite_window(self) -> bool:
        return self.period is None

    def column_count(self) -> int:
        return self.window if self.is_finite_window else self.preperiod + self.period

    def kappa(self, s: int, y: int) -> int:
        if not 1 <= s <= self.k - 1:
            raise ValueError(f"s must lie in [1, {self.k - 1}], got {s}")
        if y < 0:
            raise ValueError(f"y must be >= 0, got {y}")
        if self.is_finite_window:
            if y >= self.window:
                raise WindowExceededError(
                    f"kappa queried at y={y} but window bound is {self.window}"
                )
            return self.table[s - 1][y]
        if y >= self.preperiod:
            y = self.preperiod + (y - self.preperiod) % self.period
        return self.table[s - 1][y]

    def column(self, y: int) -> tuple[int, ...]:
        """kappa(., y) as a tuple over s = 1..k-1."""
        return tuple(self.kappa(s, y) for s in range(1, self.k))

    def _max_queryable_index(self) -> int | None:
        """Largest n admissible for a finite-window spec (exclusive), else None."""
        if self.is_finite_window:
            return self.k**self.window
        return None


@dataclass(frozen=True)
class SequenceWindow:
    """Equally spaced slice values[n] = a(start + n*stride)."""

    spec: KappaSpec
    start: int
    stride: int
    values: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.values)


def a_of_n(spec: KappaSpec, n: int) -> int:
    """Digit-counting value: sum of kappa over the expansion terms of n, mod L."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    k = spec.k
    total = 0
    y = 0
    while n:
        n, d = divmod(n, k)
        if d:
            total += spec.kappa(d, y)
        y += 1
    return total % spec.L


def b_exponent(spec: KappaSpec, n: int) -> int:
    """Exponent c of the multiplicative value exp(2*pi*i*c/L).

    Identical to a_of_n; exists as a named view because the analytic side
    works with roots of unity.
    """
    return a_of_n(spec, n)


def a_values(spec: KappaSpec, indices) -> np.ndarray:
    """Vectorized a_of_n over an array of non-negative indices."""
    idx = np.asarray(indices, dtype=np.int64)
    if idx.size == 0:
        return np.zeros(0, dtype=np.int64)
    if idx.min() < 0:
        raise ValueError("indices must be >= 0")
    bound = spec._max_queryable_index()
    if bound is not None and idx.max() >= bound:
        raise WindowExceededError(
            f"index {int(idx.max())} needs digits beyond window {spec.window}"
        )
    k, L = spec.k, spec.L
    rem = idx.copy()
    acc = np.zeros(idx.shape, dtype=np.int64)
    y = 0
    while rem.any():
        col = np.zeros(k, dtype=np.int64)
        for s in range(1, k):
            col[s] = spec.kappa(s, y)
        acc += col[rem % k]
        rem //= k
        y += 1
    return acc % L


def generate_prefix_morphic(spec: KappaSpec, m: int) -> list[int]:
    """Prefix of length k**m by word substitution.

    Starts from [0]; each step appends, for s = 1..k-1, the current word
    with kappa(s, step) added to every letter mod L.  Iterative, not
    recursive, so memory is a single word of the final length.
    """
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if spec.is_finite_window and m > spec.window:
        raise WindowExceededError(
            f"morphic prefix needs kappa columns up to {m - 1}, window is {spec.window}"
        )
    if spec.k**m > word_budget():
        raise BudgetExceededError(
            f"word of length {spec.k**m} exceeds budget {word_budget()}"
        )
    L = spec.L
    word = [0]
    for step in range(m):
        base = word
        word = list(base)
        for s in range(1, spec.k):
            shift = spec.kappa(s, step)
            if shift == 0:
                word.extend(base)
            else:
                word.extend((c + shift) % L for c in base)
    return word


def equally_spaced(spec: KappaSpec, start: int, stride: int, count: int) -> SequenceWindow:
    """Window of a(start + n*stride) for n = 0..count-1."""
    if start < 0 or stride < 1 or count < 0:
        raise ValueError("need start >= 0, stride >= 1, count >= 0")
    idx = start + stride * np.arange(count, dtype=np.int64)
    vals = a_values(spec, idx)
    return SequenceWindow(spec=spec, start=start, stride=stride, values=tuple(int(v) for v in vals))
