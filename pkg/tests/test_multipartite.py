import math
from itertools import permutations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose

from spincat import (
    CatState,
    SchemeError,
    SplitScheme,
    delta_minus,
    delta_plus,
    enumerate_tripartitions,
    limit_values,
    monogamy_delta_discord,
    monogamy_delta_eof,
    total_discord,
    total_eof,
)
from spincat.multipartite import (
    CYCLIC_PAIRS,
    BipartiteRecord,
    TripartiteRecord,
    conservation_residuals,
    directed_discord,
    pair_eof,
)

import oracles

TRIPARTITIONS = [s for j in ("3/2", "2", "5/2", "3") for s in enumerate_tripartitions(j)]
ps = st.floats(0.0, 0.99)
parities = st.sampled_from([0, 1])


def _floats(scheme):
    return tuple(float(x) for x in scheme)


def _eof_from_c(c):
    if c <= 0:
        return 0.0
    x = 0.5 + 0.5 * math.sqrt(max(0.0, 1 - c * c))
    return oracles.entropy_bits(np.diag([x, 1 - x]))


def oracle_total_eof(parts, m, p):
    psi = oracles.logical_cat(parts, m, p)
    pairs = sum(
        _eof_from_c(oracles.concurrence_x_state(oracles.reduced(psi, [a, b], 3)))
        for a, b in ((0, 1), (0, 2), (1, 2))
    )
    pure = sum(oracles.entropy_bits(oracles.reduced(psi, [k], 3)) for k in range(3))
    return (pairs + pure) / 6


class TestTotals:
    def test_value(self):
        state = CatState(3, 0, 0.5)
        assert_allclose(total_eof(state, SplitScheme.parse("1,1,1")), 0.516875605044585, rtol=1e-11)

    @pytest.mark.parametrize("parts,m,p", [((1, 1, 1), 0, 0.5), ((0.5, 1, 1.5), 1, 0.3), ((0.5, 0.5, 2), 0, 0.8)])
    def test_against_oracle(self, parts, m, p):
        scheme = SplitScheme.parse(",".join(str(x) for x in parts))
        assert_allclose(total_eof(CatState(scheme.j, m, p), scheme), oracle_total_eof(parts, m, p), atol=1e-10)

    @given(st.sampled_from(TRIPARTITIONS), parities, ps)
    @settings(max_examples=40, deadline=None)
    def test_permutation_invariance(self, scheme, m, p):
        state = CatState(scheme.j, m, p)
        base = total_eof(state, scheme)
        for perm in permutations(scheme):
            assert_allclose(total_eof(state, SplitScheme(perm)), base, atol=1e-13)

    @given(st.sampled_from(TRIPARTITIONS), parities, ps)
    @settings(max_examples=60, deadline=None)
    def test_total_discord_equals_total_eof(self, scheme, m, p):
        state = CatState(scheme.j, m, p)
        assert_allclose(total_discord(state, scheme), total_eof(state, scheme), atol=1e-12)

    def test_ghz_point(self):
        # p = 0: pairs are classically correlated, every one-vs-rest split carries one bit
        for scheme in TRIPARTITIONS:
            assert_allclose(total_eof(CatState(scheme.j, 0, 0.0), scheme), 0.5, atol=1e-14)

    def test_wrong_arity(self):
        with pytest.raises(SchemeError):
            total_eof(CatState(1, 0, 0.5), SplitScheme.parse("1/2,1/2"))


class TestConservation:
    @given(st.sampled_from(TRIPARTITIONS), parities, ps)
    @settings(max_examples=80, deadline=None)
    def test_residuals_vanish(self, scheme, m, p):
        res = conservation_residuals(CatState(scheme.j, m, p), scheme)
        assert set(res) == {"sum_discord", "delta_plus", "delta_minus", "total"}
        assert max(res.values()) < 1e-12

    def test_sum_rule_with_matrix_discords(self):
        # independent route: directed discords by direct minimization on oracle pair states
        scheme, m, p = SplitScheme.parse("1/2,1,1"), 1, 0.55
        psi = oracles.logical_cat(_floats(scheme), m, p)
        d, e = {}, {}
        for a, b in ((0, 1), (0, 2), (1, 2)):
            rho = oracles.reduced(psi, [a, b], 3)
            d[a, b] = oracles.discord_scipy(rho, 0)
            d[b, a] = oracles.discord_scipy(rho, 1)
            e[a, b] = e[b, a] = _eof_from_c(oracles.concurrence_x_state(rho))
        for b in range(3):
            lhs = sum(d[a, b] for a in range(3) if a != b)
            rhs = sum(e[a, b] for a in range(3) if a != b)
            assert_allclose(lhs, rhs, atol=1e-6)
        assert_allclose(sum(0.5 * (d[a, b] - d[b, a]) for a, b in CYCLIC_PAIRS), 0.0, atol=1e-6)

    def test_delta_plus_minus(self):
        scheme = SplitScheme.parse("1/2,1,3/2")
        state = CatState(3, 1, 0.6)
        l1, l2 = scheme[0], scheme[2]
        d12 = directed_discord(state, scheme, 0, 2)
        d21 = directed_discord(state, scheme, 2, 0)
        assert_allclose(delta_plus(state, l1, l2), 0.5 * (d12 + d21))
        assert_allclose(delta_minus(state, l1, l2), 0.5 * (d12 - d21))
        assert_allclose(delta_minus(state, l1, l2), -delta_minus(state, l2, l1))

    def test_lexicographic_balance_is_not_conserved(self):
        # only the cyclic orientation 01, 12, 20 cancels
        scheme = SplitScheme.parse("1/2,1,3/2")
        state = CatState(3, 1, 0.6)
        lex = sum(delta_minus(state, scheme[a], scheme[b]) for a, b in ((0, 1), (0, 2), (1, 2)))
        cyc = sum(delta_minus(state, scheme[a], scheme[b]) for a, b in CYCLIC_PAIRS)
        assert abs(lex) > 1e-3
        assert abs(cyc) < 1e-12


class TestMonogamy:
    def test_eof_deficit_definition(self):
        scheme = SplitScheme.parse("1/2,1/2,1/2")
        state = CatState("3/2", 1, 0.9)
        psi = oracles.logical_cat(_floats(scheme), 1, 0.9)
        ref = oracles.entropy_bits(oracles.reduced(psi, [0], 3)) - sum(
            _eof_from_c(oracles.concurrence_x_state(oracles.reduced(psi, pair, 3))) for pair in ([0, 1], [0, 2])
        )
        assert_allclose(monogamy_delta_eof(state, scheme, 0), ref, atol=1e-10)

    @pytest.mark.parametrize("p", [0.1, 0.5, 0.7])
    def test_odd_monogamous_below_crossing(self, p):
        state = CatState("3/2", 1, p)
        scheme = SplitScheme.parse("1/2,1/2,1/2")
        assert monogamy_delta_eof(state, scheme) > 0
        assert monogamy_delta_discord(state, scheme) > 0

    @pytest.mark.parametrize("p", [0.85, 0.95, 0.999])
    def test_odd_polygamous_above_crossing(self, p):
        state = CatState("3/2", 1, p)
        scheme = SplitScheme.parse("1/2,1/2,1/2")
        assert monogamy_delta_eof(state, scheme) < 0
        assert monogamy_delta_discord(state, scheme) < 0

    def test_even_deficit_dips_below_zero_near_p_093(self):
        # matrix route on the physical-state oracle reproduces the small negative dip
        scheme = SplitScheme.parse("1/2,1/2,1/2")
        p = 0.9265
        psi = oracles.logical_cat(_floats(scheme), 0, p)
        ref = oracles.entropy_bits(oracles.reduced(psi, [0], 3)) - sum(
            _eof_from_c(oracles.concurrence_x_state(oracles.reduced(psi, pair, 3))) for pair in ([0, 1], [0, 2])
        )
        assert ref < -7e-4
        assert_allclose(monogamy_delta_eof(CatState("3/2", 0, p), scheme), ref, atol=1e-10)

    def test_discord_deficit_definition(self):
        scheme = SplitScheme.parse("1,1/2,1/2")
        state = CatState(2, 0, 0.4)
        psi = oracles.logical_cat(_floats(scheme), 0, 0.4)
        expected = oracles.entropy_bits(oracles.reduced(psi, [0], 3)) - sum(
            oracles.discord_scipy(oracles.reduced(psi, pair, 3), 0) for pair in ([0, 1], [0, 2])
        )
        assert_allclose(monogamy_delta_discord(state, scheme, 0), expected, atol=1e-6)

    def test_bad_head(self):
        with pytest.raises(SchemeError):
            monogamy_delta_eof(CatState("3/2", 0, 0.5), SplitScheme.parse("1/2,1/2,1/2"), head=3)


class TestLimitValues:
    def test_ghz_point(self):
        rec = limit_values(("1/2", "1/2", "1/2"), 0, "p0")
        assert isinstance(rec, TripartiteRecord)
        assert_allclose(rec.one_vs_rest, (1, 1, 1), atol=1e-14)
        assert_allclose(list(rec.pair_concurrence.values()), 0, atol=1e-14)
        assert not rec.limit

    def test_w_point(self):
        rec = limit_values(("1/2", "1", "3/2"), 1, "p1")
        assert rec.limit
        psi = oracles.w_limit_vector((0.5, 1.0, 1.5))
        for (a, b), c in rec.pair_concurrence.items():
            assert_allclose(c, oracles.concurrence_x_state(oracles.reduced(psi, [a, b], 3)), atol=1e-14)
        for k in range(3):
            assert_allclose(rec.one_vs_rest[k], oracles.entropy_bits(oracles.reduced(psi, [k], 3)), atol=1e-12)

    def test_even_product_point(self):
        rec = limit_values(("1", "1", "1"), 0, "p1")
        assert_allclose(rec.total_eof, 0.0, atol=1e-14)
        assert_allclose(rec.total_discord, 0.0, atol=1e-14)

    def test_bipartite(self):
        rec = limit_values(("1", "1"), 1, "p1")
        assert isinstance(rec, BipartiteRecord)
        assert_allclose((rec.concurrence, rec.eof, rec.discord), (1, 1, 1), atol=1e-14)

    def test_bad_key(self):
        with pytest.raises(ValueError):
            limit_values(("1", "1"), 0, "p2")
