import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose

from spincat import (
    CatState,
    ConvergenceWarning,
    MeasurementSetting,
    discord_bruteforce,
    enumerate_tripartitions,
    mixed_two_qubit_closed,
)
from spincat.discord import conditional_entropy, minimize_conditional_entropy
from spincat.measures import discord_koashi_winter

import oracles

BELL = np.array([1, 0, 0, 1]) / np.sqrt(2)


def random_rank2(seed):
    rng = np.random.default_rng(seed)
    out = np.zeros((4, 4), dtype=complex)
    for w in rng.dirichlet([1, 1]):
        v = rng.normal(size=4) + 1j * rng.normal(size=4)
        v /= np.linalg.norm(v)
        out += w * np.outer(v, v.conj())
    return out


class TestMeasurementSetting:
    @given(st.floats(0, np.pi), st.floats(0, 2 * np.pi))
    def test_orthonormal_complete(self, theta, phi):
        v0, v1 = MeasurementSetting(theta, phi).vectors()
        assert_allclose(abs(np.vdot(v0, v1)), 0, atol=1e-14)
        p0, p1 = MeasurementSetting(theta, phi).projectors()
        assert_allclose(p0 + p1, np.eye(2), atol=1e-14)


class TestConditionalEntropy:
    def test_vectorized_matches_scalar(self):
        rho = random_rank2(4)
        thetas = np.array([0.1, 1.0, 2.5])
        phis = np.array([0.0, 3.0, 5.0])
        grid = conditional_entropy(rho, thetas, phis, "A")
        for k in range(3):
            assert_allclose(grid[k], conditional_entropy(rho, thetas[k], phis[k], "A"), atol=1e-14)

    def test_bell_is_zero(self):
        rho = np.outer(BELL, BELL)
        assert_allclose(conditional_entropy(rho, 0.7, 1.3, "B"), 0.0, atol=1e-12)

    def test_grid_too_coarse(self):
        with pytest.raises(ValueError):
            minimize_conditional_entropy(np.eye(4) / 4, grid_n=8)


class TestBruteforce:
    def test_bell(self):
        assert_allclose(discord_bruteforce(np.outer(BELL, BELL)), 1.0, atol=1e-8)

    def test_classical_state(self):
        rho = np.diag([0.5, 0, 0, 0.5])
        assert discord_bruteforce(rho) == pytest.approx(0.0, abs=1e-8)

    def test_werner(self):
        # Werner state: optimal measurement is any axis, so S(B|A) is the binary entropy of (1+f)/2
        f = 0.6
        rho = f * np.outer(BELL, BELL) + (1 - f) * np.eye(4) / 4
        a, b = (1 - f) / 4, (1 + 3 * f) / 4
        s_ab = -(3 * a * np.log2(a) + b * np.log2(b))
        x0, x1 = (1 + f) / 2, (1 - f) / 2
        s_cond = -(x0 * np.log2(x0) + x1 * np.log2(x1))
        assert_allclose(discord_bruteforce(rho), 1 - s_ab + s_cond, atol=1e-8)

    @pytest.mark.parametrize("seed", range(6))
    @pytest.mark.parametrize("measured", ["A", "B"])
    def test_random_rank2_matches_koashi_winter(self, seed, measured):
        rho = random_rank2(seed)
        assert_allclose(discord_bruteforce(rho, measured), discord_koashi_winter(rho, measured), atol=1e-7)

    @pytest.mark.parametrize("seed", range(3))
    def test_matches_scipy(self, seed):
        rho = random_rank2(100 + seed)
        assert_allclose(discord_bruteforce(rho, "B"), oracles.discord_scipy(rho, 1), atol=1e-7)

    def test_cat_pair(self):
        rho = mixed_two_qubit_closed(CatState("3/2", 0, 0.5), "1/2", "1/2")
        assert_allclose(discord_bruteforce(rho), 0.187298598568772, atol=1e-8)

    def test_asymmetric_directions(self):
        scheme = enumerate_tripartitions(3)[1]
        state = CatState(3, 1, 0.6)
        rho = mixed_two_qubit_closed(state, scheme[0], scheme[2])
        assert abs(discord_bruteforce(rho, "A") - discord_bruteforce(rho, "B")) > 1e-4

    def test_warns_when_not_converged(self):
        rho = random_rank2(7)
        with pytest.warns(ConvergenceWarning):
            discord_bruteforce(rho, refine_iters=1)

    def test_silent_when_converged(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error", ConvergenceWarning)
            discord_bruteforce(random_rank2(7))
