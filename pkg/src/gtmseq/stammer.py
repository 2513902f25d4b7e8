"""Stammering witnesses for equally spaced subsequences.

For a non-periodic spec, the prefix of the underlying sequence splits
into length-k**m blocks that are all residue shifts of the first one:
a(j*k**m + n) = a(j*k**m) + a(n) mod L for n < k**m, because the two
summands occupy disjoint digit positions.  Among the L+1 block shifts
a(t*l*k**m) for t = 0..L two must collide; the colliding super-blocks
give a repeated factor in the subsequence a(N + n*l), which yields a
prefix of the shape U V^w with fixed exponent w = 1 + 1/(2Ll+3) > 1.
All size bounds are asserted in exact rational arithmetic before a
witness is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

import numpy as np

from .errors import MTooSmallError, PeriodicSpecError
from .kappa import KappaSpec, SequenceWindow, a_of_n, a_values
from .periodicity import classify

__all__ = [
    "StammerWitness",
    "build_witness",
    "verify_witness",
    "witness_family",
    "min_legal_m",
]


@dataclass(frozen=True)
class StammerWitness:
    """Certificate that U * V**w prefixes the subsequence a(N + n*l).

    V splits as the repeated block of length ``w2_len`` followed by the
    spacer of length ``w3_len``; ``t`` and ``t_prime`` are the colliding
    super-block indices the construction used.
    """

    U: tuple[int, ...]
    V: tuple[int, ...]
    w: Fraction
    m: int
    N: int
    l: int
    L: int
    w2_len: int
    w3_len: int
    t: int
    t_prime: int

    @property
    def ratio_bound(self) -> int:
        return 2 * self.L * self.l + 3

    def fractional_tail_length(self) -> int:
        """Length of the partial repetition of V demanded by the exponent w."""
        frac = self.w - floor(self.w)
        return ceil(frac * len(self.V))

    def prefix_word(self) -> tuple[int, ...]:
        """The word U V^w with the floor/ceil fractional-power convention."""
        whole = floor(self.w)
        return self.U + self.V * whole + self.V[: self.fractional_tail_length()]


def min_legal_m(N: int, l: int, k: int) -> int:
    """Smallest admissible construction index: M+1 where k**M > 2(N+l)."""
    M = 0
    while k**M <= 2 * (N + l):
        M += 1
    return M + 1


def build_witness(spec: KappaSpec, N: int, l: int, m: int) -> StammerWitness:
    """Construct a stammering witness for the subsequence a(N + n*l)."""
    if N < 0 or l < 1:
        raise ValueError("need N >= 0 and l >= 1")
    verdict = classify(spec)
    if not verdict.is_non_periodic:
        raise PeriodicSpecError(
            f"stammering witnesses need a NonPeriodic spec, classify said {verdict.status}"
        )
    k, L = spec.k, spec.L
    legal = min_legal_m(N, l, k)
    if m < legal:
        raise MTooSmallError(f"m={m} below minimum {legal} for N={N}, l={l}, k={k}")

    block = k**m
    shifts = [a_of_n(spec, t * l * block) for t in range(L + 1)]
    # Deterministic pigeonhole: among collisions take smallest t'-t, then t.
    best = None
    for t in range(L + 1):
        for tp in range(t + 1, L + 1):
            if shifts[t] == shifts[tp]:
                key = (tp - t, t)
                if best is None or key < best[0]:
                    best = (key, t, tp)
    assert best is not None, "L+1 residues mod L must collide"
    _, t, tp = best

    # Subsequence entries n = t*k**m + j read offsets N + j*l inside the
    # t-th super-block; they stay inside while N + j*l < k**m.
    repeat_len = (block - 1 - N) // l + 1
    n1 = t * block
    n2 = tp * block
    total = n2 + repeat_len
    vals = a_values(spec, N + l * np.arange(total, dtype=np.int64))
    vals = tuple(int(v) for v in vals)

    U = vals[:n1]
    V = vals[n1:n2]
    w = Fraction(2 * L * l + 4, 2 * L * l + 3)
    witness = StammerWitness(
        U=U,
        V=V,
        w=w,
        m=m,
        N=N,
        l=l,
        L=L,
        w2_len=repeat_len,
        w3_len=len(V) - repeat_len,
        t=t,
        t_prime=tp,
    )

    # Size conditions, exactly, before handing the witness out.
    outer = Fraction((L * l + 1) * block - N, l) + 1
    assert len(U) <= outer
    assert witness.w2_len >= Fraction(block - N, l) - 1
    assert witness.w2_len + witness.w3_len <= outer
    assert witness.fractional_tail_length() <= Fraction(block, 2 * l)
    assert witness.fractional_tail_length() < witness.w2_len
    assert Fraction(len(U), len(V)) <= witness.ratio_bound
    # The repeated block really repeats.
    assert vals[n1 : n1 + repeat_len] == vals[n2 : n2 + repeat_len]
    return witness


def verify_witness(window: SequenceWindow, witness: StammerWitness):
    """Check the prefix-power property of a witness against real values.

    Returns (ok, diagnostics); on failure diagnostics carry the first
    mismatching index or the reason the witness is malformed.
    """
    diag: dict = {}
    if witness.w <= 1:
        return False, {"reason": "exponent w must exceed 1"}
    if not witness.V:
        return False, {"reason": "V must be nonempty"}
    if window.start != witness.N or window.stride != witness.l:
        return False, {"reason": "window does not match witness (N, l)"}
    if len(witness.U) > witness.ratio_bound * len(witness.V):
        return False, {"reason": "|U|/|V| exceeds recorded bound"}
    pattern = witness.prefix_word()
    if len(window.values) < len(pattern):
        raise ValueError(
            f"window of length {len(window.values)} too short for prefix of "
            f"length {len(pattern)}"
        )
    for i, expected in enumerate(pattern):
        if window.values[i] != expected:
            diag["mismatch_index"] = i
            diag["expected"] = expected
            diag["actual"] = window.values[i]
            return False, diag
    diag["prefix_length"] = len(pattern)
    return True, diag


def witness_family(spec: KappaSpec, N: int, l: int, m_range) -> list[StammerWitness]:
    """Witnesses for each m in m_range; |V_m| must strictly increase."""
    witnesses = [build_witness(spec, N, l, m) for m in m_range]
    for prev, cur in zip(witnesses, witnesses[1:]):
        assert len(cur.V) > len(prev.V), "repetition blocks must grow with m"
    return witnesses
