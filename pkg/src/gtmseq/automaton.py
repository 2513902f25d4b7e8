"""k-kernel computation as a DFAO closure.

Every kernel subsequence a(k**e * n + j) decomposes, by disjoint digit
support, into a column shift plus a constant:

    a(k**e * n + j) = a_shift_e(n) + a(j)  (mod L),

where a_shift_e sums kappa(s, w + e) over the expansion terms (s, w) of
n.  States are therefore (shift, offset) pairs; reading a low-order
digit j refines (e, c) to (e + 1, c + kappa(j, e)) with kappa(0, .) = 0.
For an eventually periodic spec the shift canonicalizes into
[0, y0 + p), so the closure is finite with at most (y0 + p) * L states.
The literal subsequence materialization stays available as an
independent lower-bound oracle.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceededError, WindowExceededError
from .kappa import KappaSpec, a_values, word_budget

__all__ = [
    "KernelState",
    "KernelResult",
    "kernel_explore",
    "is_n_periodic",
    "kernel_brute_force",
]


@dataclass(frozen=True)
class KernelState:
    """Denotes the function n -> a_shift(n) + offset mod L."""

    shift: int
    offset: int


@dataclass(frozen=True)
class KernelResult:
    """Kernel closure: states, per-digit transitions, and the output map.

    ``outputs[i]`` is the state's value at remaining index 0, which is
    just its offset.  ``complete`` is False when exploration stopped at
    max_states or at a finite window; that is evidence, never proof, of
    non-automaticity.
    """

    states: tuple[KernelState, ...]
    transitions: tuple[tuple[int, ...], ...]
    outputs: tuple[int, ...]
    complete: bool

    def __len__(self) -> int:
        return len(self.states)

    def to_record(self) -> dict:
        return {
            "states": [{"shift": s.shift, "offset": s.offset} for s in self.states],
            "transitions": [list(row) for row in self.transitions],
            "outputs": list(self.outputs),
            "complete": self.complete,
        }


def _canonical_shift(spec: KappaSpec, e: int) -> int:
    if spec.is_finite_window or e < spec.preperiod:
        return e
    return spec.preperiod + (e - spec.preperiod) % spec.period


def _shifts_equal(spec: KappaSpec, e1: int, e2: int) -> bool:
    """Column streams kappa(., y + e1) and kappa(., y + e2) agree for all y.

    Both streams are eventually periodic with period p, so comparing up
    to max(preperiods) + p decides equality everywhere.
    """
    if e1 == e2:
        return True
    if spec.is_finite_window:
        return False  # only exact shifts identified; no period to lean on
    pre = max(max(0, spec.preperiod - e1), max(0, spec.preperiod - e2))
    horizon = pre + spec.period
    return all(
        spec.column(y + e1) == spec.column(y + e2) for y in range(horizon)
    )


def kernel_explore(spec: KappaSpec, max_states: int = 4096) -> KernelResult:
    """Close the kernel under the k digit-refinement maps from (0, 0)."""
    states: list[KernelState] = [KernelState(shift=_canonical_shift(spec, 0), offset=0)]
    transitions: list[list[int]] = []
    queue = deque([0])

    def find_or_add(candidate: KernelState) -> int | None:
        for i, st in enumerate(states):
            if st.offset == candidate.offset and _shifts_equal(
                spec, st.shift, candidate.shift
            ):
                return i
        if len(states) >= max_states:
            return None
        states.append(candidate)
        queue.append(len(states) - 1)
        return len(states) - 1

    def incomplete() -> KernelResult:
        return KernelResult(
            states=tuple(states),
            transitions=tuple(tuple(r) for r in transitions),
            outputs=tuple(s.offset for s in states),
            complete=False,
        )

    while queue:
        idx = queue.popleft()
        st = states[idx]
        row = []
        for j in range(spec.k):
            try:
                step = spec.kappa(j, st.shift) if j else 0
            except WindowExceededError:
                # Finite-window spec ran out of columns: inconclusive.
                return incomplete()
            child = KernelState(
                shift=_canonical_shift(spec, st.shift + 1),
                offset=(st.offset + step) % spec.L,
            )
            child_idx = find_or_add(child)
            if child_idx is None:
                return incomplete()
            row.append(child_idx)
        transitions.append(row)

    return KernelResult(
        states=tuple(states),
        transitions=tuple(tuple(r) for r in transitions),
        outputs=tuple(s.offset for s in states),
        complete=True,
    )


def is_n_periodic(spec: KappaSpec):
    """(preperiod, minimal period) of the kappa column stream, or None.

    Finite-window specs claim no eventual period, hence None.  The
    declared period is reduced to the minimal period of the repeating
    column block.
    """
    if spec.is_finite_window:
        return None
    cols = [spec.column(spec.preperiod + i) for i in range(spec.period)]
    for d in range(1, spec.period + 1):
        if spec.period % d == 0 and all(cols[i] == cols[i % d] for i in range(spec.period)):
            return spec.preperiod, d
    raise AssertionError("unreachable: period always divides itself")


def kernel_brute_force(spec: KappaSpec, e_max: int, horizon: int) -> dict:
    """Materialize all kernel subsequences a(k**e * n + j) to length horizon.

    Groups them by exact prefix equality; the group count is a lower
    bound on the kernel size.  Returns {prefix: [(e, j), ...]}.
    """
    if e_max < 0 or horizon < 1:
        raise ValueError("need e_max >= 0 and horizon >= 1")
    if spec.k**e_max * horizon > word_budget():
        raise BudgetExceededError(
            f"{spec.k**e_max * horizon} values exceed budget {word_budget()}"
        )
    groups: dict[tuple[int, ...], list[tuple[int, int]]] = {}
    base = np.arange(horizon, dtype=np.int64)
    for e in range(e_max + 1):
        scale = spec.k**e
        for j in range(scale):
            prefix = tuple(int(v) for v in a_values(spec, scale * base + j))
            groups.setdefault(prefix, []).append((e, j))
    return groups
