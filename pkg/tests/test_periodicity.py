import itertools

import numpy as np
import pytest

from gtmseq import KappaSpec, a_values
from gtmseq.periodicity import (
    NON_PERIODIC,
    PERIODIC,
    UNKNOWN,
    aenp_scan,
    brute_force_period,
    classify,
    classify_constant,
    power_residue_cycle,
)
from conftest import (
    alternating_spec,
    constant_spec,
    periodic_constructed_spec,
    random_spec,
    zero_spec,
)


class TestPowerResidueCycle:
    def test_examples(self):
        # 2**y mod 4: 1, 2, 0, 0, ...
        assert power_residue_cycle(2, 4) == (2, 1)
        # 2**y mod 3: 1, 2, 1, 2, ...
        assert power_residue_cycle(2, 3) == (0, 2)
        # 3**y mod 2: 1, 1, ...
        assert power_residue_cycle(3, 2) == (0, 1)

    def test_matches_direct_iteration(self):
        for k in range(2, 8):
            for L in range(2, 13):
                pre, cyc = power_residue_cycle(k, L)
                stream = [pow(k, y, L) for y in range(pre + 3 * cyc)]
                for y in range(pre, pre + 2 * cyc):
                    assert stream[y] == stream[y + cyc]
                if pre > 0:
                    assert stream[pre - 1] not in stream[pre:pre + cyc] or cyc == 1


class TestClassify:
    def test_thue_morse_non_periodic(self, tm):
        verdict = classify(tm)
        assert verdict.status == NON_PERIODIC
        assert verdict.refutations  # refutation data recorded per shift

    def test_zero_map_periodic(self):
        for L, k in [(2, 2), (3, 4), (5, 3)]:
            verdict = classify(zero_spec(L, k))
            assert verdict.status == PERIODIC
            assert verdict.shift == 0
            assert verdict.period == L

    def test_base3_constant_periodic(self):
        spec = constant_spec(2, 3, (1, 0))
        verdict = classify(spec)
        assert verdict.status == PERIODIC
        assert verdict.shift == 0
        assert verdict.period == 2
        # generated sequence alternates 0, 1
        assert list(a_values(spec, np.arange(12))) == [n % 2 for n in range(12)]

    def test_alternating_non_periodic(self):
        assert classify(alternating_spec()).status == NON_PERIODIC

    def test_finite_window_unknown(self):
        spec = KappaSpec(L=2, k=2, preperiod=0, period=None, table=((1, 1, 1),), window=3)
        verdict = classify(spec)
        assert verdict.status == UNKNOWN
        assert verdict.bound == 3

    def test_constructed_periodic_cases(self, rng):
        for _ in range(25):
            spec, built_A = periodic_constructed_spec(rng)
            verdict = classify(spec)
            assert verdict.status == PERIODIC
            assert verdict.shift <= built_A

    def test_unrolling_invariance(self, rng):
        for _ in range(15):
            spec = random_spec(rng, k_max=4)
            unrolled = KappaSpec(
                L=spec.L,
                k=spec.k,
                preperiod=spec.preperiod,
                period=2 * spec.period,
                table=tuple(row + row[spec.preperiod:] for row in spec.table),
            )
            v1, v2 = classify(spec), classify(unrolled)
            assert v1.status == v2.status
            if v1.status == PERIODIC:
                assert v1.shift == v2.shift


class TestClassifyConstant:
    def test_thue_morse_vector(self):
        assert classify_constant(2, 2, (1,)).status == NON_PERIODIC

    def test_periodic_vector(self):
        verdict = classify_constant(2, 3, (1, 0))
        assert verdict.status == PERIODIC
        assert verdict.period == 2

    def test_zero_vector(self):
        for L, k in [(2, 2), (4, 4), (6, 3)]:
            assert classify_constant(L, k, (0,) * (k - 1)).status == PERIODIC

    def test_validation(self):
        with pytest.raises(ValueError):
            classify_constant(2, 3, (1,))
        with pytest.raises(ValueError):
            classify_constant(2, 2, (2,))

    def test_agrees_with_classify_small(self):
        for L, k in itertools.product((2, 3), (2, 3)):
            for kvec in itertools.product(range(L), repeat=k - 1):
                expected = classify(constant_spec(L, k, kvec)).status
                assert classify_constant(L, k, kvec).status == expected


class TestBruteForcePeriod:
    def test_alternating_word(self):
        assert brute_force_period([0, 1] * 20, 4, 8) == (0, 2)

    def test_constant_word(self):
        assert brute_force_period([3] * 30, 4, 8) == (0, 1)

    def test_preperiod(self):
        word = [9, 9, 7] + [1, 2] * 20
        assert brute_force_period(word, 4, 8) == (3, 2)

    def test_thue_morse_has_no_short_period(self, tm):
        word = a_values(tm, np.arange(2**14))
        assert brute_force_period(word, 2**12, 2**12) is None

    def test_insufficient_length(self):
        with pytest.raises(ValueError):
            brute_force_period([0, 1, 0], 2, 4)


class TestAenpScan:
    def test_thue_morse_empty_report(self, tm):
        assert aenp_scan(tm, 4, 4, 1024) == []

    def test_periodic_spec_all_flagged(self):
        spec = constant_spec(2, 3, (1, 0))
        report = aenp_scan(spec, 2, 3, 256)
        assert len(report) == 3 * 3  # every (N, l) window flagged
        assert [(r["l"], r["N"]) for r in report] == sorted(
            (r["l"], r["N"]) for r in report
        )

    def test_zero_spec_constant_windows(self):
        report = aenp_scan(zero_spec(2, 2), 2, 2, 128)
        assert all(r["period"] == 1 for r in report)
        assert len(report) == 3 * 2


def test_verdict_record_shapes(tm):
    rec = classify(tm).to_record()
    assert rec["status"] == NON_PERIODIC
    assert all(len(r) == 3 for r in rec["refutations"])
    rec = classify(zero_spec()).to_record()
    assert set(rec) == {"status", "A", "period", "checked_window"}
