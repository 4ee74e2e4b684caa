# -*- coding: utf-8 -*-
"""
families/strips.py
Leques e faixas (as famílias extremais da gama pequena 2k+1 <= n <= 4k+3).

Rotulagem da faixa strip(m), ordem 2m+3:
    linha de baixo  b_i = i           para i = 0..m+1
    linha de cima   t_j = 2m+2-j      para j = 0..m  (t_0 = 2m+2)
    cordas          {i, 2m+2-i}       para i = 1..m
                    {i+1, 2m+2-i}     para i = 0..m-1

Os vértices de grau 2 são 0 e m+1. O conjunto {1..m} é um conjunto
m-componente dominante mínimo.
"""
from core.errors import ParameterOutOfRange
from core.mop import MopGraph, delete_vertices, normalize_chords

from .base import FamilyBuilder, FamilySpec


def fan(n: int) -> MopGraph:
    """Leque: cordas {0, i} para i = 2..n-2"""
    if n < 3:
        raise ParameterOutOfRange(f"fan: n={n} (mínimo 3)")
    return MopGraph(n, tuple((0, i) for i in range(2, n - 1)))


def strip(m: int) -> MopGraph:
    """Faixa de ordem 2m+3 com exatamente dois vértices de grau 2"""
    if m < 1:
        raise ParameterOutOfRange(f"strip: m={m} (mínimo 1)")
    top = 2 * m + 2
    chords = [(i, top - i) for i in range(1, m + 1)]
    chords += [(i + 1, top - i) for i in range(0, m)]
    return MopGraph(2 * m + 3, normalize_chords(chords))


def strip_encircled(m: int) -> frozenset:
    """Conjunto dominante mínimo da faixa"""
    return frozenset(range(1, m + 1))


def strip_minus(m: int) -> MopGraph:
    """strip(m) sem o vértice de grau 2 m+1 (ordem 2m+2)"""
    return delete_vertices(strip(m), {m + 1}).graph


class FanBuilder(FamilyBuilder):
    name = "fan"
    required = ("n",)

    def build(self, spec: FamilySpec) -> MopGraph:
        return fan(spec.n)

    def order(self, spec: FamilySpec) -> int:
        return spec.n


class StripBuilder(FamilyBuilder):
    name = "strip"
    required = ("m",)

    def build(self, spec: FamilySpec) -> MopGraph:
        return strip(spec.m)

    def order(self, spec: FamilySpec) -> int:
        return 2 * spec.m + 3


class StripMinusBuilder(FamilyBuilder):
    name = "strip_minus"
    required = ("m",)

    def build(self, spec: FamilySpec) -> MopGraph:
        return strip_minus(spec.m)

    def order(self, spec: FamilySpec) -> int:
        return 2 * spec.m + 2
