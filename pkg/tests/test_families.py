# -*- coding: utf-8 -*-
"""Famílias de grafos, gerador uniforme e builders"""
from collections import Counter

import pytest
from scipy.stats import chisquare

from core.errors import ParameterOutOfRange
from core.exact import gamma_k_exact, is_kcds
from core.graphio import load_graph
from core.lemmas import floor_bound
from core.mop import validate
from families import AVAILABLE_FAMILIES
from families.base import FamilySpec
from families.extremal import arm_witness, fig5_graph, fig6_graph, fig6_graph_even
from families.population import catalan, enum_mops, random_mop
from families.strips import fan, strip, strip_encircled, strip_minus


class TestStrips:
    @pytest.mark.parametrize("m", range(1, 6))
    def test_strip_shape(self, m):
        g = strip(m)
        assert g.n == 2 * m + 3
        assert validate(g.n, g.chords) == g
        assert [v for v in range(g.n) if g.degree(v) == 2] == [0, m + 1]

    @pytest.mark.parametrize("m", range(1, 5))
    def test_strip_is_extremal(self, m):
        g = strip(m)
        assert is_kcds(g, m, strip_encircled(m))
        assert gamma_k_exact(g, m) == m == floor_bound(m, g.n)

    @pytest.mark.parametrize("m", range(1, 5))
    def test_strip_minus(self, m):
        g = strip_minus(m)
        assert g.n == 2 * m + 2
        assert gamma_k_exact(g, m) == floor_bound(m, g.n)

    def test_fan(self):
        assert fan(7).degree(0) == 6
        with pytest.raises(ParameterOutOfRange):
            fan(2)


class TestExtremal:
    def test_fig5_k2_s2(self):
        g = fig5_graph(2, 2)
        assert g.n == 10
        assert gamma_k_exact(g, 2) == 4
        assert is_kcds(g, 2, arm_witness(2, 2))

    def test_fig6_k2(self):
        g = fig6_graph(2, 1, 2)
        assert g.n == 8
        assert gamma_k_exact(g, 2) == 3
        assert is_kcds(g, 2, arm_witness(2, 1, 2))

    @pytest.mark.parametrize("k, s, t", [(1, 2, 1), (2, 2, 1), (2, 2, 2), (3, 1, 2)])
    def test_fig6_attains_floor(self, k, s, t):
        g = fig6_graph(k, s, t)
        assert g.n == s * (2 * k + 1) + 2 * t - 1
        assert gamma_k_exact(g, k) == floor_bound(k, g.n)

    @pytest.mark.parametrize("k, s, t", [(1, 2, 1), (2, 2, 1), (2, 2, 2)])
    def test_fig6_even_attains_floor(self, k, s, t):
        g = fig6_graph_even(k, s, t)
        assert g.n == s * (2 * k + 1) + 2 * t
        assert gamma_k_exact(g, k) == floor_bound(k, g.n)

    @pytest.mark.parametrize("k, s", [(1, 3), (2, 1), (2, 2), (3, 2)])
    def test_fig5_attains_floor(self, k, s):
        g = fig5_graph(k, s)
        assert gamma_k_exact(g, k) == k * s

    def test_large_k_orders(self):
        g = fig5_graph(5, 1)
        assert g.n == 11
        assert gamma_k_exact(g, 5) == 5
        assert fig6_graph(5, 2, 4).n == 29

    def test_parameter_checks(self):
        with pytest.raises(ParameterOutOfRange):
            fig6_graph(2, 1, 3)
        with pytest.raises(ParameterOutOfRange):
            fig5_graph(0, 1)


class TestPopulation:
    def test_catalan(self):
        assert [catalan(p) for p in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]

    def test_random_is_deterministic(self):
        assert random_mop(30, 7) == random_mop(30, 7)
        g = random_mop(30, 7)
        assert validate(g.n, g.chords) == g

    def test_random_covers_hexagon(self):
        # 14 triangulações rotuladas do hexágono
        samples = {random_mop(6, seed).chords for seed in range(500)}
        assert samples == {g.chords for g in enum_mops(6)}

    @pytest.mark.slow
    def test_random_is_uniform(self):
        samples = Counter(random_mop(6, seed).chords for seed in range(100_000))
        labelled = {g.chords for g in enum_mops(6)}
        assert set(samples) == labelled
        _, p_value = chisquare([samples[c] for c in sorted(labelled)])
        assert p_value > 0.001


class TestBuilders:
    def test_registry(self):
        assert set(AVAILABLE_FAMILIES) == {
            "fan", "strip", "strip_minus", "fig5", "fig6", "fig6_even", "random", "enum"}

    def test_strip_builder(self):
        builder = AVAILABLE_FAMILIES["strip"]()
        (g,) = builder.generate(FamilySpec(family="strip", m=3))
        assert g == strip(3)
        assert builder.stats["built"] == 1

    def test_missing_parameter(self):
        builder = AVAILABLE_FAMILIES["fig6"]()
        with pytest.raises(ParameterOutOfRange, match="--t"):
            list(builder.generate(FamilySpec(family="fig6", k=2, s=1)))

    def test_random_builder_count(self):
        builder = AVAILABLE_FAMILIES["random"]()
        graphs = list(builder.generate(FamilySpec(family="random", n=12, seed=5, count=3)))
        assert graphs == [random_mop(12, 5), random_mop(12, 6), random_mop(12, 7)]

    def test_enum_builder(self):
        graphs = list(AVAILABLE_FAMILIES["enum"]().generate(FamilySpec(family="enum", n=8)))
        assert len(graphs) == 12

    def test_spec_label(self):
        assert FamilySpec(family="fig6", k=2, s=1, t=2).label() == "fig6_k2_s1_t2"


@pytest.mark.parametrize("name, builder_args", [
    ("fig5_k2_s2", dict(k=2, s=2)),
    ("fig6_k2_s1_t2", dict(k=2, s=1, t=2)),
    ("fig6_even_k2_s2_t1", dict(k=2, s=2, t=1)),
])
def test_golden_files(golden_dir, name, builder_args):
    family = name.rsplit("_k", 1)[0]
    (g,) = AVAILABLE_FAMILIES[family]().generate(FamilySpec(family=family, **builder_args))
    assert load_graph(golden_dir / f"{name}.json") == g
