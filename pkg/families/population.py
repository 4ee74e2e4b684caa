# -*- coding: utf-8 -*-
"""
families/population.py
Populações de MOPs: enumeração exaustiva e amostragem uniforme.

Uma triangulação do polígono 0..L com base {0, L} escolhe o triângulo
da base (ápice m) e triangula recursivamente 0..m e m..L. Há Catalan(L-1)
triangulações; o ápice m tem peso Catalan(m-1)·Catalan(L-m-1), o que dá
amostragem exatamente uniforme (equivalente à bijeção com árvores
binárias de n-2 nós internos).
"""
import random
from functools import lru_cache
from math import comb
from typing import Iterator, List, Tuple

from core.canonical import canonical_form
from core.errors import ParameterOutOfRange
from core.mop import Chord, MopGraph, normalize_chords

from .base import FamilyBuilder, FamilySpec


@lru_cache(maxsize=None)
def catalan(p: int) -> int:
    return comb(2 * p, p) // (p + 1)


@lru_cache(maxsize=16)
def _triangulations(length: int) -> Tuple[Tuple[Chord, ...], ...]:
    """Triangulações do polígono 0..length com base {0, length}"""
    if length <= 1:
        return ((),)
    result: List[Tuple[Chord, ...]] = []
    for m in range(1, length):
        own = []
        if m >= 2:
            own.append((0, m))
        if length - m >= 2:
            own.append((m, length))
        for left in _triangulations(m):
            for right in _triangulations(length - m):
                shifted = tuple((a + m, b + m) for a, b in right)
                result.append(tuple(own) + left + shifted)
    return tuple(result)


def enum_mops(n: int, dedup: bool = False) -> Iterator[MopGraph]:
    """
    Todas as triangulações do n-ágono (Catalan(n-2)).

    Com dedup, uma por classe de isomorfismo (o representante canónico),
    pela ordem em que cada classe aparece pela primeira vez.
    """
    if n < 3:
        raise ParameterOutOfRange(f"enum_mops: n={n} (mínimo 3)")
    seen = set()
    for chords in _triangulations(n - 1):
        graph = MopGraph(n, normalize_chords(chords))
        if not dedup:
            yield graph
            continue
        form = canonical_form(graph)
        if form in seen:
            continue
        seen.add(form)
        yield MopGraph(n, form)


def random_mop(n: int, seed: int) -> MopGraph:
    """
    Triangulação uniforme do n-ágono, determinística dada a seed.

    O triângulo sobre a aresta (i, j) tem o terceiro vértice m sorteado com
    peso Catalan(m-i-1) * Catalan(j-m-1), isto é, proporcional ao número de
    triangulações de cada lado; repete-se nos dois sub-polígonos.
    """
    if n < 3:
        raise ParameterOutOfRange(f"random_mop: n={n} (mínimo 3)")
    rng = random.Random(seed)
    chords: List[Chord] = []
    stack = [(0, n - 1)]
    while stack:
        i, j = stack.pop()
        if j - i < 2:
            continue
        pick = rng.randrange(catalan(j - i - 1))
        for m in range(i + 1, j):
            weight = catalan(m - i - 1) * catalan(j - m - 1)
            if pick < weight:
                break
            pick -= weight
        if m - i >= 2:
            chords.append((i, m))
        if j - m >= 2:
            chords.append((m, j))
        stack.append((i, m))
        stack.append((m, j))
    return MopGraph(n, normalize_chords(chords))


class RandomBuilder(FamilyBuilder):
    """--count grafos com seeds consecutivas a partir de --seed"""
    name = "random"
    required = ("n", "seed")

    def build(self, spec: FamilySpec) -> MopGraph:
        return random_mop(spec.n, spec.seed)

    def order(self, spec: FamilySpec) -> int:
        return spec.n

    def generate(self, spec: FamilySpec) -> Iterator[MopGraph]:
        self.check(spec)
        for i in range(spec.count):
            self.stats["built"] += 1
            yield random_mop(spec.n, spec.seed + i)


class EnumBuilder(FamilyBuilder):
    """Todas as classes de isomorfismo de ordem --n"""
    name = "enum"
    required = ("n",)

    def build(self, spec: FamilySpec) -> MopGraph:
        return next(enum_mops(spec.n, dedup=True))

    def order(self, spec: FamilySpec) -> int:
        return spec.n

    def generate(self, spec: FamilySpec) -> Iterator[MopGraph]:
        self.check(spec)
        for graph in enum_mops(spec.n, dedup=True):
            self.stats["built"] += 1
            yield graph
