# -*- coding: utf-8 -*-
"""Solver exato, oráculo ingénuo e tabela γ_k(n)"""
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from core.cache import GammaCache
from core.canonical import canonical_key
from core.errors import ParameterOutOfRange, TooLarge
from core.exact import (
    Constraints,
    DomSet,
    component_sizes,
    gamma_k_exact,
    gamma_table,
    is_kcds,
    min_kcds,
    naive_min_kcds,
)
from core.lemmas import floor_bound
from core.mop import MopGraph
from families.population import enum_mops, random_mop
from families.strips import fan, strip


class TestIsKcds:
    def test_docstring_example(self):
        assert is_kcds(MopGraph(3, ()), 1, {0})

    def test_components(self):
        g = strip(3)
        assert component_sizes(g, {1, 2, 3, 6}) == [4]
        assert component_sizes(g, {0, 4}) == [1, 1]

    def test_must_dominate(self):
        assert not is_kcds(fan(6), 1, {1})
        assert is_kcds(fan(6), 1, {0})

    def test_component_order(self):
        g = fan(6)
        assert not is_kcds(g, 2, {0})
        assert is_kcds(g, 2, {0, 1})

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            is_kcds(fan(4), 1, {7})


class TestMinKcds:
    def test_fan(self):
        assert min_kcds(fan(8), 1) == DomSet(frozenset({0}), 1)
        assert min_kcds(fan(8), 3).vertices == frozenset({0, 1, 2})

    def test_zero_is_domination(self):
        assert min_kcds(fan(8), 0).size == 1

    def test_infeasible_is_none(self):
        assert min_kcds(fan(4), 5) is None
        constraints = Constraints(forbidden={0}, max_size=1)
        assert min_kcds(fan(8), 1, constraints) is None

    def test_constraints(self):
        g = fan(8)
        assert min_kcds(g, 1, Constraints(forbidden={0})).size == 3
        found = min_kcds(g, 1, Constraints(must_contain={4}))
        assert 4 in found.vertices
        found = min_kcds(g, 2, Constraints(must_intersect=((3, 4),)))
        assert found.vertices & {3, 4}

    def test_constraint_clash(self):
        with pytest.raises(ParameterOutOfRange):
            Constraints(must_contain={1}, forbidden={1})

    def test_vertices_out_of_range(self):
        with pytest.raises(ParameterOutOfRange):
            min_kcds(fan(5), 1, Constraints(must_contain={9}))

    def test_negative_k(self):
        with pytest.raises(ParameterOutOfRange):
            min_kcds(fan(5), -1)

    def test_guard(self):
        with pytest.raises(TooLarge):
            min_kcds(fan(27), 1)
        assert min_kcds(fan(27), 1, guard_override=True).size == 1

    def test_gamma_k_exact_without_solution(self):
        with pytest.raises(ParameterOutOfRange):
            gamma_k_exact(fan(4), 5)


@pytest.mark.parametrize("n", range(3, 9))
@pytest.mark.parametrize("k", [1, 2, 3])
def test_matches_naive_oracle(n, k):
    for g in enum_mops(n, dedup=True):
        assert min_kcds(g, k) == naive_min_kcds(g, k)


@pytest.mark.slow
@pytest.mark.parametrize("n", [9, 10])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_matches_naive_oracle_exhaustive(n, k):
    for g in enum_mops(n, dedup=True):
        assert min_kcds(g, k) == naive_min_kcds(g, k)


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(n=st.integers(min_value=5, max_value=14), seed=st.integers(0, 10**6),
       k=st.integers(min_value=1, max_value=3), forbidden=st.sets(st.integers(0, 4), max_size=2))
def test_constrained_solver_matches_oracle(n, seed, k, forbidden):
    g = random_mop(n, seed)
    constraints = Constraints(forbidden=forbidden, must_intersect=((n - 1, n - 2),))
    fast = min_kcds(g, k, constraints)
    slow = naive_min_kcds(g, k, constraints)
    assert fast == slow
    if fast is not None:
        assert constraints.accepts(fast.vertices)
        assert is_kcds(g, k, fast.vertices)


class TestGammaTable:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_small_range_is_floor(self, k):
        orders = range(2 * k + 1, min(4 * k + 3, 11) + 1)
        table = gamma_table(k, orders)
        for n in orders:
            assert table[(k, n)] == floor_bound(k, n)
        assert table.monotonicity_violations() == []

    def test_k2_n12_has_two_extremal_classes(self):
        table = gamma_table(2, [12])
        entry = table.entries[(2, 12)]
        assert entry.gamma == 5
        assert entry.extremal_count == 2
        assert entry.graphs_checked == 733

    def test_rows(self):
        entry = gamma_table(1, [6]).entries[(1, 6)]
        assert entry.to_row("x.jsonl") == {
            "k": 1, "n": 6, "gamma": 2, "extremal_count": entry.extremal_count,
            "extremal_files": "x.jsonl"}

    def test_skips_orders_below_k(self):
        assert len(gamma_table(5, [3, 4])) == 0

    def test_enumeration_guard(self):
        with pytest.raises(TooLarge):
            gamma_table(1, [14])

    def test_uses_cache(self, cache_dir):
        cache = GammaCache(2, cache_dir)
        gamma_table(2, [7], cache=cache)
        assert len(cache) == 4
        assert cache.cache_file.exists()

        again = GammaCache(2, cache_dir)
        table = gamma_table(2, [7], cache=again)
        assert table[(2, 7)] == 2
        assert again.hits == 4 and again.misses == 0

    def test_monotonicity_across_k(self):
        table = gamma_table(1, range(3, 10))
        table.merge(gamma_table(2, range(5, 10)))
        table.merge(gamma_table(3, range(7, 10)))
        assert table.monotonicity_violations() == []

    def test_cache_key_is_canonical(self, cache_dir):
        cache = GammaCache(1, cache_dir)
        gamma_table(1, [6], cache=cache)
        for g in enum_mops(6):
            assert cache.get(canonical_key(g)) == gamma_k_exact(g, 1)
