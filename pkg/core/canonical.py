# -*- coding: utf-8 -*-
"""
core/canonical.py
Formas canónicas de MOPs (reconhecimento a menos de isomorfismo).

Para n >= 4 o ciclo hamiltoniano de um MOP é único, logo dois MOPs são
isomorfos sse diferem por uma das 2n simetrias diedrais do polígono.
Para n = 3 só há um MOP.
"""
import hashlib
from typing import Iterator, Tuple

from .mop import Chord, MopGraph, normalize_chords


def _dihedral_images(graph: MopGraph) -> Iterator[Tuple[Chord, ...]]:
    """Conjuntos de cordas normalizados sob as 2n simetrias"""
    n = graph.n
    for r in range(n):
        yield normalize_chords(((a + r) % n, (b + r) % n) for a, b in graph.chords)
        yield normalize_chords(((r - a) % n, (r - b) % n) for a, b in graph.chords)


def canonical_form(graph: MopGraph) -> Tuple[Chord, ...]:
    """
    Menor conjunto de cordas (lexicográfico) sobre as 2n simetrias.

    Examples:
        >>> canonical_form(MopGraph(5, ((1, 3), (1, 4))))
        ((0, 2), (0, 3))
    """
    return min(_dihedral_images(graph))


def canonical_graph(graph: MopGraph) -> MopGraph:
    """Representante canónico da classe de isomorfismo"""
    return MopGraph(graph.n, canonical_form(graph))


def canonical_key(graph: MopGraph) -> str:
    """Serialização canónica (usada como chave de cache)"""
    return canonical_graph(graph).to_json()


def canonical_id(graph: MopGraph) -> str:
    """Identificador curto e estável: n{n}-<sha1[:12]>"""
    digest = hashlib.sha1(canonical_key(graph).encode("utf-8")).hexdigest()
    return f"n{graph.n}-{digest[:12]}"


def marked_canonical_form(graph: MopGraph, x: int, y: int) -> Tuple[Chord, ...]:
    """
    Forma canónica de (G, xy) para uma aresta exterior marcada.

    Só se consideram as duas simetrias que levam {x, y} para {0, 1}.
    """
    n = graph.n
    if not graph.is_outer_edge(x, y):
        raise ValueError(f"{{{x},{y}}} não é aresta exterior")

    best = None
    for a, b in ((x, y), (y, x)):
        if b == (a + 1) % n:
            mapped = (((p - a) % n, (q - a) % n) for p, q in graph.chords)
        else:
            mapped = (((a - p) % n, (a - q) % n) for p, q in graph.chords)
        form = normalize_chords(mapped)
        if best is None or form < best:
            best = form
    return best

