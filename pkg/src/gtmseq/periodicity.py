"""Deciding ultimate periodicity.

The sequence of a ``KappaSpec`` is ultimately periodic iff there is a
shift A with

    kappa(s, A + y) == kappa(1, A) * s * k**y  (mod L)

for every digit s and every y >= 0, in which case L * k**A is a period.
Both sides of the congruence are eventually periodic in y, so each
candidate A is decided by comparing finitely many columns, and A itself
only needs to range over [0, y0 + p): for A >= y0 the left side depends
on A through (A - y0) mod p alone, and so does kappa(1, A).

The module also carries the window-scan oracles: a literal least-period
search on a finite word and the grid scan over equally spaced
subsequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

import numpy as np

from .kappa import KappaSpec, a_values

__all__ = [
    "PeriodicityVerdict",
    "classify",
    "classify_constant",
    "brute_force_period",
    "aenp_scan",
    "power_residue_cycle",
]

PERIODIC = "Periodic"
NON_PERIODIC = "NonPeriodic"
UNKNOWN = "UnknownUpToBound"


@dataclass(frozen=True)
class PeriodicityVerdict:
    """Outcome of the periodicity criterion.

    Periodic carries the shift A and the (not necessarily minimal)
    period L * k**A, plus the y-window over which the congruence was
    verified.  NonPeriodic carries, per candidate shift A, the first
    (s, y) refuting it.  UnknownUpToBound is the honest answer for
    finite-window specs.
    """

    status: str
    shift: int | None = None
    period: int | None = None
    checked_window: int | None = None
    refutations: tuple[tuple[int, int, int], ...] = ()
    bound: int | None = None

    @property
    def is_periodic(self) -> bool:
        return self.status == PERIODIC

    @property
    def is_non_periodic(self) -> bool:
        return self.status == NON_PERIODIC

    def to_record(self) -> dict:
        """JSON-ready record for the CLI."""
        rec: dict = {"status": self.status}
        if self.status == PERIODIC:
            rec["A"] = self.shift
            rec["period"] = self.period
            rec["checked_window"] = self.checked_window
        elif self.status == NON_PERIODIC:
            rec["refutations"] = [list(r) for r in self.refutations]
        else:
            rec["bound"] = self.bound
        return rec


def power_residue_cycle(k: int, L: int) -> tuple[int, int]:
    """(preperiod, cycle length) of the sequence k**y mod L."""
    seen: dict[int, int] = {}
    v = 1 % L
    y = 0
    while v not in seen:
        seen[v] = y
        v = (v * k) % L
        y += 1
    return seen[v], y - seen[v]


def _shift_condition_fails(spec: KappaSpec, A: int) -> tuple[int, int] | None:
    """First (s, y) with kappa(s, A+y) != kappa(1, A)*s*k**y mod L, or None.

    Comparing up to max(preperiods) + lcm(periods) decides equality of
    the two eventually periodic column streams for all y.
    """
    L, k = spec.L, spec.k
    c = spec.kappa(1, A)
    lhs_pre = max(0, spec.preperiod - A)
    rhs_pre, rhs_cyc = power_residue_cycle(k, L)
    horizon = max(lhs_pre, rhs_pre) + lcm(spec.period, rhs_cyc)
    for y in range(horizon):
        ky = pow(k, y, L)
        for s in range(1, k):
            if spec.kappa(s, A + y) != (c * s * ky) % L:
                return s, y
    return None


def classify(spec: KappaSpec) -> PeriodicityVerdict:
    """Decide ultimate periodicity of the spec's sequence.

    Finite-window specs cannot be decided (the criterion quantifies over
    all y); they yield UnknownUpToBound after scanning what the window
    allows.
    """
    if spec.is_finite_window:
        return PeriodicityVerdict(status=UNKNOWN, bound=spec.window)
    refutations = []
    for A in range(spec.preperiod + spec.period):
        failure = _shift_condition_fails(spec, A)
        if failure is None:
            return PeriodicityVerdict(
                status=PERIODIC,
                shift=A,
                period=spec.L * spec.k**A,
                checked_window=A + _condition_horizon(spec, A),
            )
        refutations.append((A, failure[0], failure[1]))
    return PeriodicityVerdict(status=NON_PERIODIC, refutations=tuple(refutations))


def _condition_horizon(spec: KappaSpec, A: int) -> int:
    rhs_pre, rhs_cyc = power_residue_cycle(spec.k, spec.L)
    return max(max(0, spec.preperiod - A), rhs_pre) + lcm(spec.period, rhs_cyc)


def classify_constant(L: int, k: int, kvec) -> PeriodicityVerdict:
    """Periodicity of the y-independent sequence given by kvec = kappa(1..k-1).

    Independent route: periodic iff s*kappa(1) == kappa(s) mod L for all
    s and kappa(k-1) == 0 mod L.
    """
    kvec = tuple(kvec)
    if len(kvec) != k - 1:
        raise ValueError(f"kvec must have {k - 1} entries, got {len(kvec)}")
    for v in kvec:
        if not 0 <= v < L:
            raise ValueError(f"kvec entry {v} outside [0, {L - 1}]")
    for s in range(1, k):
        if (s * kvec[0]) % L != kvec[s - 1]:
            return PeriodicityVerdict(status=NON_PERIODIC, refutations=((0, s, 0),))
    if kvec[k - 2] % L != 0:
        # kappa(k-1) != 0: the y=1 congruence for s=1 fails at every shift.
        return PeriodicityVerdict(status=NON_PERIODIC, refutations=((0, 1, 1),))
    return PeriodicityVerdict(status=PERIODIC, shift=0, period=L, checked_window=1)


def brute_force_period(values, max_preperiod: int, max_period: int):
    """Least (l, then N) with values[n] == values[n+l] for all N <= n < len-l.

    A window verdict only: ``None`` means no period up to the bounds, not
    a proof of aperiodicity.
    """
    arr = np.asarray(values, dtype=np.int64)
    n = len(arr)
    if n < max_preperiod + 2 * max_period:
        raise ValueError(
            f"need at least max_preperiod + 2*max_period = "
            f"{max_preperiod + 2 * max_period} values, got {n}"
        )
    for l in range(1, max_period + 1):
        diff = arr[l:] != arr[:-l]
        mismatches = np.nonzero(diff)[0]
        if mismatches.size == 0:
            return 0, l
        start = int(mismatches[-1]) + 1
        if start <= max_preperiod:
            return start, l
    return None


def aenp_scan(
    spec: KappaSpec,
    max_start: int,
    max_stride: int,
    horizon: int,
    max_preperiod: int | None = None,
    max_period: int | None = None,
) -> list[dict]:
    """Scan equally spaced subsequences for window periodicity.

    Runs brute_force_period on the length-``horizon`` window of
    a(N + n*l) for every N <= max_start, 1 <= l <= max_stride.  Returns
    the (l, N)-ordered list of windows found periodic; empty means no
    equally spaced subsequence looked periodic at this scale.
    """
    if max_preperiod is None:
        max_preperiod = horizon // 4
    if max_period is None:
        max_period = horizon // 4
    hits = []
    for stride in range(1, max_stride + 1):
        for start in range(max_start + 1):
            idx = start + stride * np.arange(horizon, dtype=np.int64)
            window = a_values(spec, idx)
            found = brute_force_period(window, max_preperiod, max_period)
            if found is not None:
                hits.append(
                    {"N": start, "l": stride, "preperiod": found[0], "period": found[1]}
                )
    return hits
