# -*- coding: utf-8 -*-
"""𝒢_ℓ, ℋ_k: construção, deteção e conjuntos"""
import itertools
import json

import networkx as nx
import pytest

from core.canonical import canonical_form
from core.errors import (
    BadPieceCount,
    BadTriangulation,
    NotAMarkedPair,
    ParameterOutOfRange,
    PieceOutOfRange,
    SumTooSmall,
    TooLarge,
    UOnCycle,
)
from core.exact import component_sizes, gamma_k_exact, gamma_table, is_kcds
from core.graphio import load_graph
from core.hkstruct import (
    MarkedPair,
    build_hk,
    detect_hk,
    dichotomy_bound,
    enum_gcal,
    hk_kcds,
    hk_semi,
    in_hk,
    is_in_gcal,
)
from core.lemmas import ceil_bound, floor_bound
from core.mop import MopGraph
from families.population import enum_mops, random_mop
from families.strips import fan, strip

# único membro de 𝒢_4, com x = 0 (grau 3) e y = 1 (grau 2)
G4 = MopGraph(5, ((0, 2), (2, 4)))


def h1():
    return build_hk(2, [MarkedPair(G4, 0, 1)] * 3)


def h2():
    return build_hk(2, [MarkedPair(G4, 0, 1)] * 2 + [MarkedPair(G4, 1, 0)])


class TestMarkedPair:
    def test_valid(self):
        mp = MarkedPair(G4, 0, 1)
        assert mp.ell == 4
        assert mp.x_prime == 4
        assert mp.y_prime == 2

    @pytest.mark.parametrize("graph, x, y", [
        (fan(6), 1, 2),   # ℓ ímpar
        (fan(5), 0, 2),   # corda
        (fan(5), 0, 1),   # graus {4, 2}
    ])
    def test_invalid(self, graph, x, y):
        with pytest.raises(NotAMarkedPair):
            MarkedPair(graph, x, y)

    def test_ell4_always_in_gcal(self):
        assert is_in_gcal(MarkedPair(G4, 0, 1))
        assert is_in_gcal(MarkedPair(G4, 1, 0))


class TestEnumGcal:
    def test_g4(self):
        members = enum_gcal(4)
        assert len(members) == 1
        assert members[0].g == G4
        assert (members[0].x, members[0].y) == (0, 1)

    @pytest.mark.parametrize("ell", [6, 8])
    def test_members_satisfy_definition(self, ell):
        members = enum_gcal(ell)
        assert members
        for mp in members:
            assert mp.g.n == ell + 1
            assert sorted((mp.g.degree(0), mp.g.degree(1))) == [2, 3]
            assert is_in_gcal(mp)
        # sem repetições de pares marcados
        keys = [(mp.g.chords, mp.x, mp.y) for mp in members]
        assert len(set(keys)) == len(keys)

    @pytest.mark.parametrize("ell, count", [(4, 1), (6, 3), (8, 10)])
    def test_counts(self, ell, count):
        assert len(enum_gcal(ell)) == count

    def test_g6_members(self, golden_dir):
        expected = json.loads((golden_dir / "gcal_6.json").read_text(encoding="utf-8"))
        members = enum_gcal(6)
        assert [[list(c) for c in mp.g.chords] for mp in members] == expected
        # G - {x, y}: pentágono 2..6 fechado pela corda 26, leque com ápice fora de {x', y'} = {6, 2}
        for mp in members:
            inner = [c for c in mp.g.chords if 0 not in c and 1 not in c and c != (2, 6)]
            apex = [v for v in range(2, 7) if sum(v in c for c in inner) == 2]
            assert len(apex) == 1 and apex[0] not in (2, 6)

    def test_parameters(self):
        with pytest.raises(ParameterOutOfRange):
            enum_gcal(5)
        with pytest.raises(ParameterOutOfRange):
            enum_gcal(2)
        with pytest.raises(TooLarge):
            enum_gcal(14)


class TestBuildHk:
    def test_h1_shape(self, golden_dir):
        graph, dec = h1()
        assert graph.n == 12
        assert dec.p == 1
        assert dec.cycle == (0, 4, 8)
        assert dec.ells == [4, 4, 4]
        assert graph == load_graph(golden_dir / "h1_k2.json")

    def test_h1_h2_are_distinct_classes(self):
        (g1, _), (g2, _) = h1(), h2()
        assert canonical_form(g1) != canonical_form(g2)
        assert not nx.is_isomorphic(g1.to_networkx(), g2.to_networkx())

    def test_extremal_classes_of_order_12(self):
        table = gamma_table(2, [12])
        extremal = {canonical_form(g) for g in table.entries[(2, 12)].extremal}
        assert extremal == {canonical_form(h1()[0]), canonical_form(h2()[0])}

    def test_errors(self):
        mp = MarkedPair(G4, 0, 1)
        with pytest.raises(BadPieceCount):
            build_hk(2, [mp] * 2)
        with pytest.raises(BadPieceCount):
            build_hk(2, [mp] * 5)
        with pytest.raises(SumTooSmall):
            build_hk(3, [mp] * 3)
        with pytest.raises(BadTriangulation):
            build_hk(2, [mp] * 3, inner_triangulation=fan(4))

    def test_piece_out_of_range(self):
        big = enum_gcal(6)[0]
        with pytest.raises(PieceOutOfRange):
            build_hk(2, [big, MarkedPair(G4, 0, 1), MarkedPair(G4, 0, 1)])

    def test_piece_not_in_gcal(self):
        # pares de ℓ = 6 fora de 𝒢_6
        n = 7
        outside = None
        for g in enum_mops(n, dedup=True):
            for v in range(n):
                w = (v + 1) % n
                if sorted((g.degree(v), g.degree(w))) == [2, 3]:
                    mp = MarkedPair(g, v, w)
                    if not is_in_gcal(mp):
                        outside = mp
        if outside is None:
            pytest.skip("todos os pares de ℓ = 6 pertencem a 𝒢_6")
        six = enum_gcal(6)[0]
        with pytest.raises(PieceOutOfRange):
            build_hk(3, [outside, six, six])


class TestDetect:
    def test_detects_built_graphs(self):
        for graph, dec in (h1(), h2()):
            found = detect_hk(graph, 2)
            assert found is not None
            assert found.p == 1
            assert sorted(found.ells) == [4, 4, 4]
            assert in_hk(graph, 2)

    def test_k1_is_empty(self):
        for n in range(3, 11):
            for g in enum_mops(n, dedup=True):
                assert detect_hk(g, 1) is None

    def test_order_12_exactly_two(self):
        members = [g for g in enum_mops(12, dedup=True) if in_hk(g, 2)]
        assert len(members) == 2

    def test_non_members(self):
        assert detect_hk(fan(12), 2) is None
        assert detect_hk(strip(4), 2) is None  # ordem ímpar
        assert detect_hk(fan(10), 2) is None   # abaixo de 4k+4

    def test_to_dict(self):
        graph, dec = h1()
        assert dec.to_dict() == {
            "in_hk": True, "k": 2, "p": 1, "cycle": [0, 4, 8],
            "piece_sizes": [4, 4, 4], "inner_chords": []}

    def test_dichotomy_bound(self):
        graph, _ = h1()
        assert dichotomy_bound(graph, 2) == ceil_bound(2, 12) == 5
        assert dichotomy_bound(fan(12), 2) == floor_bound(2, 12) == 4

    def test_random_members_are_rare_and_consistent(self):
        for seed in range(40):
            g = random_mop(16, seed)
            dec = detect_hk(g, 3)
            if dec is not None:
                assert gamma_k_exact(g, 3) == ceil_bound(3, 16)


class TestHkSets:
    @pytest.mark.parametrize("build", [h1, h2])
    def test_hk_kcds(self, build):
        graph, dec = build()
        chosen = hk_kcds(graph, dec)
        assert chosen.size == graph.n // 2 - dec.p == 5
        assert is_kcds(graph, 2, chosen.vertices)
        assert gamma_k_exact(graph, 2) == 5

    @pytest.mark.parametrize("build", [h1, h2])
    def test_semi_for_every_off_cycle_vertex(self, build):
        graph, dec = build()
        for u in range(graph.n):
            if u in dec.cycle:
                with pytest.raises(UOnCycle):
                    hk_semi(graph, dec, u)
                continue
            semi = hk_semi(graph, dec, u)
            assert u in semi.d1
            assert not semi.d1 & semi.d2
            assert semi.size <= graph.n // 2 - (dec.p + 1)
            assert is_kcds(graph, 1, semi.vertices)
            assert all(size >= 2 for size in component_sizes(graph, semi.d2))
            assert not semi.vertices & (graph.neighbors(u) & set(dec.cycle))


def _hk3_members():
    """Membros de ℋ_3^1 com n em {16, 18}: peças de 𝒢_4 e 𝒢_6"""
    pool = {4: enum_gcal(4), 6: enum_gcal(6)}
    for sizes in ((6, 6, 4), (6, 6, 6)):
        choices = [pool[ell] for ell in sizes]
        for pieces in itertools.product(*choices):
            for flips in itertools.product((False, True), repeat=3):
                oriented = [MarkedPair(mp.g, mp.y, mp.x) if flip else mp
                            for mp, flip in zip(pieces, flips)]
                yield build_hk(3, oriented)


@pytest.mark.slow
def test_hk3_lower_bound():
    seen = {}
    for graph, dec in _hk3_members():
        seen.setdefault(canonical_form(graph), (graph, dec))
    assert len(seen) >= 20
    for graph, dec in seen.values():
        assert graph.n in (16, 18)
        assert gamma_k_exact(graph, 3) == graph.n // 2 - 1 == ceil_bound(3, graph.n)
        assert hk_kcds(graph, dec).size == graph.n // 2 - 1
