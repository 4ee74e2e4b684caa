# -*- coding: utf-8 -*-
"""Validação e cirurgia estrutural de MOPs"""
import networkx as nx
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from core.canonical import canonical_form
from core.errors import (
    CrossingChords,
    DegenerateChord,
    DuplicateChord,
    NoTriangleOnSide,
    NotAChord,
    NotAnEdge,
    NotOuterEdge,
    ResultNotMop,
    TooSmall,
    WrongChordCount,
)
from core.mop import (
    LabeledMop,
    MopGraph,
    apex,
    contract_outer_edge,
    delete_vertices,
    outer_neighbors,
    relabel_dihedral,
    split_by_chord,
    validate,
)
from families.population import random_mop
from families.strips import fan

PROPERTY_SETTINGS = settings(
    max_examples=80,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)


@st.composite
def mops(draw, min_n=4, max_n=18):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    seed = draw(st.integers(min_value=0, max_value=10**6))
    return random_mop(n, seed)


def _is_outerplanar(graph: MopGraph) -> bool:
    # G é outerplanar sse G + vértice universal é planar
    nxg = graph.to_networkx()
    nxg.add_edges_from(("hub", v) for v in range(graph.n))
    planar, _ = nx.check_planarity(nxg)
    return planar


# ============================================================================
# VALIDAÇÃO
# ============================================================================

class TestValidate:
    def test_accepts_and_normalizes(self):
        g = validate(5, [(3, 0), (2, 0)])
        assert g == MopGraph(5, ((0, 2), (0, 3)))
        assert len(g.edges) == 2 * 5 - 3

    def test_triangle(self):
        assert validate(3, []).edges == [(0, 1), (0, 2), (1, 2)]

    @pytest.mark.parametrize("n, chords, error", [
        (2, [], TooSmall),
        (5, [(0, 2)], WrongChordCount),
        (5, [(0, 2), (0, 3), (1, 3)], WrongChordCount),
        (6, [(0, 2), (0, 3), (1, 4)], CrossingChords),
        (5, [(0, 2), (2, 0)], DuplicateChord),
        (5, [(0, 1), (0, 2)], DegenerateChord),
        (5, [(0, 4), (0, 2)], DegenerateChord),
        (5, [(2, 2), (0, 2)], DegenerateChord),
        (5, [(0, 7), (0, 2)], DegenerateChord),
    ])
    def test_rejects(self, n, chords, error):
        with pytest.raises(error):
            validate(n, chords)

    @PROPERTY_SETTINGS
    @given(graph=mops())
    def test_random_mops_are_outerplanar_and_maximal(self, graph):
        assert len(graph.edges) == 2 * graph.n - 3
        assert _is_outerplanar(graph)
        assert validate(graph.n, graph.chords) == graph

    def test_to_dict_roundtrip_is_canonical(self):
        g = fan(6)
        assert g.to_json() == '{"n": 6, "chords": [[0, 2], [0, 3], [0, 4]]}'
        assert MopGraph.from_dict(g.to_dict()) == g


# ============================================================================
# OPERAÇÕES
# ============================================================================

class TestSplit:
    def test_fan_split(self):
        split = split_by_chord(fan(6), (3, 0))
        assert split.chord == (0, 3)
        assert split.side_a == MopGraph(4, ((0, 2),))
        assert split.side_b == MopGraph(4, ((1, 3),))
        assert split.map_a == (0, 1, 2, 3)
        assert split.map_b == (3, 4, 5, 0)
        assert (split.m_a, split.m_b) == (3, 3)

    def test_containing_and_avoiding(self):
        split = split_by_chord(fan(6), (0, 3))
        assert 1 in split.containing(1)
        assert 1 not in split.avoiding(1)
        with pytest.raises(ValueError):
            split.containing(3)

    def test_not_a_chord(self):
        with pytest.raises(NotAChord):
            split_by_chord(fan(6), (1, 3))
        with pytest.raises(NotAChord):
            split_by_chord(fan(6), (0, 1))

    @PROPERTY_SETTINGS
    @given(graph=mops(min_n=5))
    def test_sides_partition_edges(self, graph):
        a, b = graph.chords[0]
        split = split_by_chord(graph, (a, b))
        edges = set()
        for part in (split.part("a"), split.part("b")):
            for p, q in part.graph.edges:
                u, v = part.labels[p], part.labels[q]
                edges.add((min(u, v), max(u, v)))
        assert edges == set(graph.edges)
        assert split.side_a.n + split.side_b.n == graph.n + 2


class TestContract:
    def test_fan_contraction(self):
        contraction = contract_outer_edge(fan(6), (3, 2))
        assert contraction.graph == MopGraph(5, ((0, 2), (0, 3)))
        assert contraction.merged == 2
        assert contraction.merged_from == frozenset({2, 3})
        assert contraction.image == (0, 1, 2, 2, 3, 4)

    def test_lift_replaces_merged(self):
        contraction = contract_outer_edge(fan(6), (2, 3))
        assert contraction.lift({0, 2}, merged_as=(2, 3)) == frozenset({0, 2, 3})
        assert contraction.lift({0, 4}) == frozenset({0, 5})

    def test_errors(self):
        with pytest.raises(TooSmall):
            contract_outer_edge(validate(3, []), (0, 1))
        with pytest.raises(NotOuterEdge):
            contract_outer_edge(fan(6), (0, 3))

    @PROPERTY_SETTINGS
    @given(graph=mops(min_n=5), data=st.data())
    def test_result_is_mop(self, graph, data):
        v = data.draw(st.integers(min_value=0, max_value=graph.n - 1))
        contraction = contract_outer_edge(graph, (v, (v + 1) % graph.n))
        assert contraction.graph.n == graph.n - 1
        assert validate(contraction.graph.n, contraction.graph.chords) == contraction.graph


class TestDelete:
    def test_delete_ear(self):
        rest = delete_vertices(fan(6), {1})
        assert rest.labels == (0, 2, 3, 4, 5)
        assert rest.graph == MopGraph(5, ((0, 2), (0, 3)))
        assert rest.lift({0, 1}) == frozenset({0, 2})

    def test_delete_hub_is_not_mop(self):
        with pytest.raises(ResultNotMop):
            delete_vertices(fan(6), {0})

    def test_too_few_left(self):
        with pytest.raises(ResultNotMop):
            delete_vertices(fan(4), {0, 1})

    def test_labeled_without(self):
        whole = LabeledMop.whole(fan(7))
        rest = whole.without({1, 6})
        assert rest.labels == (0, 2, 3, 4, 5)
        assert rest.degree(0) == 4


class TestApex:
    def test_inner(self):
        assert apex(fan(6), (1, 2)) == 0
        assert apex(fan(6), (2, 1), "inner") == 0
        assert apex(validate(3, []), (0, 1)) == 2

    def test_chord_both_sides(self):
        g = fan(6)
        assert apex(g, (0, 3), 1) == 2
        assert apex(g, (0, 3), 5) == 4

    def test_errors(self):
        g = fan(6)
        with pytest.raises(NoTriangleOnSide):
            apex(g, (0, 1), "outer")
        with pytest.raises(NotAnEdge):
            apex(g, (1, 3))


class TestDihedral:
    @PROPERTY_SETTINGS
    @given(graph=mops(), data=st.data())
    def test_relabel_keeps_class(self, graph, data):
        rotation = data.draw(st.integers(min_value=0, max_value=graph.n - 1))
        reflect = data.draw(st.booleans())
        image = relabel_dihedral(graph, rotation, reflect)
        assert canonical_form(image) == canonical_form(graph)
        assert nx.is_isomorphic(image.to_networkx(), graph.to_networkx())

    def test_outer_neighbors(self):
        assert outer_neighbors(fan(6), 0) == (5, 1)
