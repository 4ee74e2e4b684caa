# -*- coding: utf-8 -*-
"""
families/extremal.py
Grafos de ordem arbitrária que atingem γ_k(n) = ⌊kn/(2k+1)⌋.

Cada "braço" com r degraus tem 2r+1 vértices, por esta ordem no ciclo
exterior:
    a_1, ..., a_r, ponta, b_r, ..., b_1
com degraus {a_j, b_j} e diagonais {a_{j+1}, b_j}. Um braço com r = 0 é
um vértice isolado no polígono central.

Os braços são colados pelas bases: o polígono central tem os vértices
(a_1, b_1) de cada braço, por ordem, e é triangulado em leque a partir
do b_1 do último braço completo.

Cada braço completo (r = k) obriga a k vértices no conjunto; as colunas b
juntam-se todas através do vértice do leque.
"""
from typing import List, Sequence, Tuple

from core.errors import ParameterOutOfRange
from core.mop import MopGraph, validate

from .base import FamilyBuilder, FamilySpec


def _arm(offset: int, rungs: int) -> Tuple[List[int], List[Tuple[int, int]], List[int]]:
    """
    Vértices da base no polígono central, cordas internas e coluna b.
    """
    if rungs == 0:
        return [offset], [], []
    a = [offset + j for j in range(rungs)]
    b = [offset + 2 * rungs - j for j in range(rungs)]
    chords = [(a[j], b[j]) for j in range(1, rungs)]
    chords += [(a[j + 1], b[j]) for j in range(rungs - 1)]
    return [a[0], b[0]], chords, b


def _glue(arms: Sequence[int], apex_arm: int) -> MopGraph:
    """Cola braços (número de degraus de cada um) pelo polígono central"""
    offset = 0
    central: List[int] = []
    chords: List[Tuple[int, int]] = []
    apex = None
    for index, rungs in enumerate(arms):
        base, inner, _ = _arm(offset, rungs)
        central.extend(base)
        chords.extend(inner)
        if index == apex_arm:
            apex = base[-1]
        offset += 2 * rungs + 1

    if len(central) > 2:
        # bases dos braços passam a ser cordas
        chords.extend((p, q) for p, q in zip(central, central[1:])
                      if q - p > 1)
        position = central.index(apex)
        size = len(central)
        for i, v in enumerate(central):
            if (i - position) % size not in (0, 1, size - 1):
                chords.append((min(apex, v), max(apex, v)))
    return validate(offset, chords)


def fig5_graph(k: int, s: int) -> MopGraph:
    """s braços de k degraus: ordem s(2k+1), γ_k = ks"""
    if k < 1 or s < 1:
        raise ParameterOutOfRange(f"fig5: k={k}, s={s} (mínimo 1)")
    return _glue([k] * s, s - 1)


def fig6_graph(k: int, s: int, t: int) -> MopGraph:
    """fig5 mais um braço de t-1 degraus: ordem s(2k+1)+2t-1, γ_k = ks+t-1"""
    if k < 1 or s < 1 or not 1 <= t <= k:
        raise ParameterOutOfRange(f"fig6: k={k}, s={s}, t={t} (t em 1..k)")
    return _glue([k] * s + [t - 1], s - 1)


def fig6_graph_even(k: int, s: int, t: int) -> MopGraph:
    """fig6 com mais um vértice no polígono central: ordem s(2k+1)+2t"""
    if k < 1 or s < 1 or not 1 <= t <= k:
        raise ParameterOutOfRange(f"fig6_even: k={k}, s={s}, t={t} (t em 1..k)")
    return _glue([k] * s + [t - 1, 0], s - 1)


def arm_witness(k: int, s: int, t: int = 0) -> frozenset:
    """
    Conjunto dominante conexo dos grafos acima: colunas b dos braços
    completos mais a coluna a do braço extra (t > 0).
    """
    witness = []
    offset = 0
    for _ in range(s):
        witness.extend(_arm(offset, k)[2])
        offset += 2 * k + 1
    if t > 1:
        witness.extend(range(offset, offset + t - 1))
    return frozenset(witness)


class Fig5Builder(FamilyBuilder):
    name = "fig5"
    required = ("k", "s")

    def build(self, spec: FamilySpec) -> MopGraph:
        return fig5_graph(spec.k, spec.s)

    def order(self, spec: FamilySpec) -> int:
        return spec.s * (2 * spec.k + 1)


class Fig6Builder(FamilyBuilder):
    name = "fig6"
    required = ("k", "s", "t")

    def build(self, spec: FamilySpec) -> MopGraph:
        return fig6_graph(spec.k, spec.s, spec.t)

    def order(self, spec: FamilySpec) -> int:
        return spec.s * (2 * spec.k + 1) + 2 * spec.t - 1


class Fig6EvenBuilder(FamilyBuilder):
    name = "fig6_even"
    required = ("k", "s", "t")

    def build(self, spec: FamilySpec) -> MopGraph:
        return fig6_graph_even(spec.k, spec.s, spec.t)

    def order(self, spec: FamilySpec) -> int:
        return spec.s * (2 * spec.k + 1) + 2 * spec.t
