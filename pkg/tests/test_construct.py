# -*- coding: utf-8 -*-
"""Construção dentro do limite da dicotomia"""
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from core.construct import (
    Claim1Pattern,
    claim1_pattern,
    construct_with_trace,
    lemma7_construct,
    theorem1_construct,
)
from core.errors import IsExceptional, OrderTooSmall, ParameterOutOfRange, WrongOrder
from core.exact import gamma_k_exact, is_kcds
from core.hkstruct import MarkedPair, build_hk, detect_hk
from core.lemmas import ceil_bound, floor_bound
from core.mop import MopGraph
from families.extremal import fig5_graph, fig6_graph
from families.population import enum_mops, random_mop
from families.strips import fan

G4 = MopGraph(5, ((0, 2), (2, 4)))


def _bound(g, k):
    return ceil_bound(k, g.n) if detect_hk(g, k) is not None else floor_bound(k, g.n)


def _check(g, k):
    chosen = theorem1_construct(g, k)
    assert chosen.k == k
    assert is_kcds(g, k, chosen.vertices)
    assert chosen.size <= _bound(g, k)
    return chosen


class TestClaim1:
    def test_distance2_on_fan(self):
        pattern = claim1_pattern(fan(8))
        assert isinstance(pattern, Claim1Pattern)
        assert pattern.tag == "distance2"
        assert (pattern.u, pattern.v, pattern.x, pattern.y, pattern.z) == (1, 7, 0, 2, 6)
        assert pattern.to_dict()["z"] == 6

    def test_adjacent23(self):
        # orelhas 1 e 4 sem vizinho comum; 0 tem grau 3
        g = MopGraph(7, ((0, 2), (2, 5), (2, 6), (3, 5)))
        pattern = claim1_pattern(g)
        assert pattern.tag == "adjacent23"
        assert (pattern.u, pattern.v, pattern.x, pattern.y) == (1, 0, 2, 6)
        assert pattern.z is None

    def test_too_small(self):
        with pytest.raises(WrongOrder):
            claim1_pattern(fan(6))

    @pytest.mark.parametrize("n", range(7, 11))
    def test_every_mop_has_pattern(self, n):
        for g in enum_mops(n, dedup=True):
            pattern = claim1_pattern(g)
            assert g.degree(pattern.u) == 2
            assert pattern.tag in ("distance2", "adjacent23")


class TestLemma7:
    @pytest.mark.parametrize("k, n", [(2, 12), (3, 16), (3, 18)])
    def test_random_inputs(self, k, n):
        for seed in range(25):
            g = random_mop(n, seed)
            if detect_hk(g, k) is not None:
                continue
            chosen = lemma7_construct(g, k)
            assert chosen.size <= floor_bound(k, n)
            assert is_kcds(g, k, chosen.vertices)

    def test_all_order_12_non_members(self):
        for g in enum_mops(12, dedup=True):
            if detect_hk(g, 2) is not None:
                with pytest.raises(IsExceptional):
                    lemma7_construct(g, 2)
                continue
            assert lemma7_construct(g, 2).size <= 4

    def test_wrong_order(self):
        with pytest.raises(WrongOrder):
            lemma7_construct(fan(11), 2)
        with pytest.raises(WrongOrder):
            lemma7_construct(fan(10), 2)


class TestTheorem1:
    @pytest.mark.parametrize("n", range(3, 12))
    def test_k1_within_floor(self, n):
        for g in enum_mops(n, dedup=True):
            assert _check(g, 1).size <= n // 3

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [12, 13])
    def test_k1_within_floor_exhaustive(self, n):
        for g in enum_mops(n, dedup=True):
            assert _check(g, 1).size <= n // 3

    @pytest.mark.parametrize("n", range(5, 13))
    def test_k2_exhaustive(self, n):
        for g in enum_mops(n, dedup=True):
            chosen = _check(g, 2)
            assert gamma_k_exact(g, 2) <= chosen.size

    @pytest.mark.parametrize("k", [3, 4])
    def test_k3_k4_exhaustive(self, k):
        for n in range(2 * k + 1, 12):
            for g in enum_mops(n, dedup=True):
                _check(g, k)

    def test_exceptional_members(self):
        pieces = [MarkedPair(G4, 0, 1)] * 3
        graph, _ = build_hk(2, pieces)
        chosen, trace = construct_with_trace(graph, 2)
        assert chosen.size == 5
        assert trace == ["hk:p=1"]

    def test_families(self):
        assert _check(fig5_graph(2, 4), 2).size <= 8
        assert _check(fig6_graph(3, 2, 2), 3).size <= floor_bound(3, 17)
        assert _check(fan(30), 2).size <= 12

    def test_trace_mentions_cases(self):
        _, trace = construct_with_trace(random_mop(40, 3), 2)
        assert trace
        assert all(isinstance(step, str) for step in trace)

    def test_errors(self):
        with pytest.raises(OrderTooSmall):
            theorem1_construct(fan(4), 2)
        with pytest.raises(ParameterOutOfRange):
            theorem1_construct(fan(5), 0)

    def test_deterministic(self):
        g = random_mop(33, 11)
        assert construct_with_trace(g, 2) == construct_with_trace(g, 2)

    @settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(n=st.integers(min_value=3, max_value=60), seed=st.integers(0, 10**6),
           k=st.integers(min_value=1, max_value=3))
    def test_random_within_dichotomy(self, n, seed, k):
        if n < 2 * k + 1:
            return
        _check(random_mop(n, seed), k)

    @pytest.mark.parametrize("n", [40])
    def test_random_n40_k2(self, n):
        for seed in range(20):
            assert _check(random_mop(n, seed), 2).size <= 16


@pytest.mark.slow
def test_dichotomy_at_scale():
    for i in range(10_000):
        k = 1 + i % 3
        n = 2 * k + 1 + (i * 7919) % (60 - 2 * k)
        _check(random_mop(n, i), k)
