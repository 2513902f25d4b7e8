import random

import pytest

from gtmseq import KappaSpec
from gtmseq.periodicity import power_residue_cycle


def make_spec(L, k, preperiod, period, columns, name=None):
    """Spec from a column-major description: columns[y] = kappa(., y)."""
    table = tuple(
        tuple(columns[y][s - 1] for y in range(preperiod + period))
        for s in range(1, k)
    )
    return KappaSpec(L=L, k=k, preperiod=preperiod, period=period, table=table, name=name)


def constant_spec(L, k, kvec, name=None):
    return KappaSpec(
        L=L, k=k, preperiod=0, period=1,
        table=tuple((v,) for v in kvec), name=name,
    )


def tm_spec():
    return constant_spec(2, 2, (1,), name="thue-morse")


def zero_spec(L=2, k=2):
    return constant_spec(L, k, (0,) * (k - 1), name="zero")


def alternating_spec():
    # kappa(1, y) = 0, 1, 0, 1, ...
    return KappaSpec(L=2, k=2, preperiod=0, period=2, table=((0, 1),), name="alternating")


def random_spec(rng: random.Random, L_max=6, k_max=5, y0_max=3, p_max=4):
    L = rng.randint(2, L_max)
    k = rng.randint(2, k_max)
    y0 = rng.randint(0, y0_max)
    p = rng.randint(1, p_max)
    table = tuple(
        tuple(rng.randrange(L) for _ in range(y0 + p)) for _ in range(k - 1)
    )
    return KappaSpec(L=L, k=k, preperiod=y0, period=p, table=table)


def periodic_constructed_spec(rng: random.Random, L_max=6, k_max=5, A_max=2):
    """Random spec built to satisfy the periodicity criterion at shift A.

    Columns below A are arbitrary; from A on they follow
    kappa(s, A + y) = c * s * k**y mod L, laid out over the natural
    preperiod/period of the power residues of k mod L.
    """
    L = rng.randint(2, L_max)
    k = rng.randint(2, k_max)
    A = rng.randint(0, A_max)
    c = rng.randrange(L)
    pre, cyc = power_residue_cycle(k, L)
    y0 = A + pre
    p = cyc
    columns = []
    for y in range(y0 + p):
        if y < A:
            columns.append(tuple(rng.randrange(L) for _ in range(1, k)))
        else:
            ky = pow(k, y - A, L)
            columns.append(tuple((c * s * ky) % L for s in range(1, k)))
    return make_spec(L, k, y0, p, columns), A


@pytest.fixture
def tm():
    return tm_spec()


@pytest.fixture
def rng():
    return random.Random(20240817)
