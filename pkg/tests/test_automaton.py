import numpy as np
import pytest

from gtmseq import (
    KappaSpec,
    a_of_n,
    a_values,
    is_n_periodic,
    kernel_brute_force,
    kernel_explore,
)
from conftest import alternating_spec, random_spec, zero_spec


def state_denotation(spec, state, count):
    """Evaluate n -> a_shift(n) + offset mod L for n < count."""
    out = []
    for n in range(count):
        total = state.offset
        y = 0
        v = n
        while v:
            v, d = divmod(v, spec.k)
            if d:
                total += spec.kappa(d, y + state.shift)
            y += 1
        out.append(total % spec.L)
    return tuple(out)


class TestKernelExplore:
    def test_thue_morse_two_states(self, tm):
        result = kernel_explore(tm)
        assert result.complete
        assert len(result) == 2
        assert sorted(s.offset for s in result.states) == [0, 1]

    def test_zero_map_single_state(self):
        result = kernel_explore(zero_spec(3, 3))
        assert result.complete
        assert len(result) == 1

    def test_alternating_state_bound(self):
        spec = alternating_spec()
        result = kernel_explore(spec)
        assert result.complete
        assert len(result) <= (spec.preperiod + spec.period) * spec.L

    def test_state_bound_random(self, rng):
        for _ in range(15):
            spec = random_spec(rng, L_max=5, k_max=4, y0_max=2, p_max=3)
            result = kernel_explore(spec)
            assert result.complete
            assert len(result) <= (spec.preperiod + spec.period) * spec.L

    def test_transitions_consistent(self, rng):
        # following digits of n through the table reproduces a(n)
        for _ in range(8):
            spec = random_spec(rng, k_max=3)
            result = kernel_explore(spec)
            for n in range(200):
                state = 0
                v = n
                while v:
                    v, d = divmod(v, spec.k)
                    state = result.transitions[state][d]
                assert result.outputs[state] == a_of_n(spec, n)

    def test_max_states_inconclusive(self, tm):
        result = kernel_explore(tm, max_states=1)
        assert not result.complete

    def test_finite_window_inconclusive(self):
        spec = KappaSpec(L=2, k=2, preperiod=0, period=None,
                         table=((1, 0, 1),), window=3)
        result = kernel_explore(spec)
        assert not result.complete


class TestIsNPeriodic:
    def test_thue_morse(self, tm):
        assert is_n_periodic(tm) == (0, 1)

    def test_reduces_declared_period(self):
        spec = KappaSpec(L=2, k=2, preperiod=0, period=4, table=((0, 1, 0, 1),))
        assert is_n_periodic(spec) == (0, 2)

    def test_finite_window_absent(self):
        spec = KappaSpec(L=2, k=2, preperiod=0, period=None, table=((1,),), window=1)
        assert is_n_periodic(spec) is None

    def test_nontrivial_preperiod(self):
        spec = KappaSpec(L=3, k=2, preperiod=2, period=2, table=((2, 0, 1, 1),))
        assert is_n_periodic(spec) == (2, 1)


class TestKernelBruteForce:
    def test_thue_morse_two_groups(self, tm):
        groups = kernel_brute_force(tm, 6, 2**12)
        assert len(groups) == 2

    def test_zero_map_one_group(self):
        groups = kernel_brute_force(zero_spec(2, 2), 4, 256)
        assert len(groups) == 1

    def test_group_count_lower_bounds_states(self, rng):
        for _ in range(6):
            spec = random_spec(rng, L_max=4, k_max=3, y0_max=1, p_max=2)
            groups = kernel_brute_force(spec, 4, 512)
            explored = kernel_explore(spec)
            assert len(groups) <= len(explored)

    def test_groups_match_state_denotations(self):
        spec = alternating_spec()
        horizon = 512
        groups = kernel_brute_force(spec, 5, horizon)
        explored = kernel_explore(spec)
        denotations = {
            state_denotation(spec, state, horizon) for state in explored.states
        }
        for prefix in groups:
            assert prefix in denotations

    def test_decomposition_identity(self, rng):
        # a(k**e * n + j) == a_shift_e(n) + a(j) mod L
        for _ in range(5):
            spec = random_spec(rng, k_max=3, y0_max=1, p_max=2)
            for e in range(4):
                scale = spec.k**e
                for j in {0, scale // 2, scale - 1}:
                    lhs = a_values(spec, scale * np.arange(64) + j)
                    shift_vals = []
                    for n in range(64):
                        total = 0
                        v, y = n, 0
                        while v:
                            v, d = divmod(v, spec.k)
                            if d:
                                total += spec.kappa(d, y + e)
                            y += 1
                        shift_vals.append(total)
                    rhs = [(sv + a_of_n(spec, j)) % spec.L for sv in shift_vals]
                    assert list(lhs) == rhs

    def test_budget(self, tm, monkeypatch):
        monkeypatch.setenv("GTMSEQ_BUDGET", "100")
        from gtmseq.errors import BudgetExceededError

        with pytest.raises(BudgetExceededError):
            kernel_brute_force(tm, 10, 1024)
