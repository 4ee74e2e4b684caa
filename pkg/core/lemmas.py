# -*- coding: utf-8 -*-
"""
core/lemmas.py
Construções de tamanho fixo: conjuntos de ordem k em MOPs de ordem
2k+1, 2k+2 e 2k+3, e a escolha de corda que divide o polígono.

Todas as escolhas livres são resolvidas pelo menor rótulo, por isso o
resultado é determinístico. Cada construção verifica o seu resultado e
levanta InternalInvariantViolation se a garantia falhar.
"""
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional, Set, Tuple

from .errors import (
    DegreeTooSmall,
    InternalInvariantViolation,
    NotOuterEdge,
    ParameterOutOfRange,
    TooSmall,
    WrongOrder,
)
from .exact import DomSet, is_kcds
from .mop import Chord, LabeledMop, MopGraph, apex, contract_outer_edge, delete_vertices, outer_neighbors


# ============================================================================
# LIMITES
# ============================================================================

def floor_bound(k: int, n: int) -> int:
    """⌊kn/(2k+1)⌋"""
    return k * n // (2 * k + 1)


def ceil_bound(k: int, n: int) -> int:
    """⌈kn/(2k+1)⌉"""
    return -(-k * n // (2 * k + 1))


def certify(graph: MopGraph, k: int, vertices: Iterable[int], limit: int, label: str,
            exact: bool = False) -> FrozenSet[int]:
    """Confirma que o conjunto é k-componente dominante e cabe no limite"""
    result = frozenset(vertices)
    if not is_kcds(graph, k, result):
        raise InternalInvariantViolation(
            f"{label}: {sorted(result)} não é {k}-componente dominante em {graph!r}")
    if len(result) > limit or (exact and len(result) != limit):
        raise InternalInvariantViolation(
            f"{label}: tamanho {len(result)}, limite {limit} em {graph!r}")
    return result


def pad(graph: MopGraph, vertices: Iterable[int], size: int) -> Set[int]:
    """Junta o menor vértice vizinho do conjunto até atingir size"""
    result = set(vertices)
    while len(result) < size:
        candidates = [w for v in result for w in graph.neighbors(v) if w not in result]
        if not candidates:
            raise InternalInvariantViolation(f"pad: conjunto {sorted(result)} sem vizinhos")
        result.add(min(candidates))
    return result


# ============================================================================
# LEMA DA ORDEM 2k+3
# ============================================================================

def _lemma2(graph: MopGraph) -> Set[int]:
    n = graph.n
    if n == 5:
        # todo o MOP de ordem 5 tem vértice universal
        return {min(v for v in range(n) if graph.degree(v) == 4)}

    x = min(v for v in range(n) if graph.degree(v) == 2)
    u, v = outer_neighbors(graph, x)
    rest = delete_vertices(graph, {x})
    contraction = contract_outer_edge(rest.graph, (rest.local(u), rest.local(v)))
    inner = _lemma2(contraction.graph)

    if contraction.merged in inner:
        return set(rest.lift(contraction.lift(inner))) | {u, v}
    lifted = set(rest.lift(contraction.lift(inner)))
    if graph.neighbors(u) & lifted:
        return lifted | {u}
    return lifted | {v}


def lemma2_set(graph: MopGraph) -> DomSet:
    """
    Conjunto k-componente dominante de ordem k num MOP de ordem 2k+3.

    Remove um vértice x de grau 2, contrai a aresta entre os seus vizinhos
    u, v e recorre; depois devolve {u, v} ao lugar de u* ou junta o
    extremo (u primeiro) com vizinho no conjunto.

    Raises:
        WrongOrder: n par ou n < 5
    """
    n = graph.n
    if n < 5 or n % 2 == 0:
        raise WrongOrder(f"lemma2_set: n={n} (esperado ímpar >= 5)")
    k = (n - 3) // 2
    return DomSet(certify(graph, k, _lemma2(graph), k, "lemma2", exact=True), k)


# ============================================================================
# CONJUNTOS DE ORDEM k COM RESTRIÇÕES
# ============================================================================

def _expect_order(graph: MopGraph, expected: int, label: str) -> None:
    if graph.n != expected:
        raise WrongOrder(f"{label}: n={graph.n}, esperado {expected}")


def _expect_outer(graph: MopGraph, x: int, y: int, label: str) -> None:
    if not graph.is_outer_edge(x, y):
        raise NotOuterEdge(f"{label}: {{{x},{y}}} não é aresta exterior")


def lemma4_i(graph: MopGraph, k: int, u: int) -> DomSet:
    """Ordem 2k+1: conjunto de ordem k que contém u"""
    _expect_order(graph, 2 * k + 1, "lemma4_i")
    if k == 1:
        chosen = {u}
    else:
        chosen = _lemma2(graph)
        if u not in chosen:
            chosen.add(u)
        else:
            chosen.add(min(v for v in range(graph.n) if v not in chosen))
    result = certify(graph, k, chosen, k, "lemma4_i", exact=True)
    if u not in result:
        raise InternalInvariantViolation(f"lemma4_i: {u} fora de {sorted(result)}")
    return DomSet(result, k)


def lemma4_ii(graph: MopGraph, k: int, edge: Tuple[int, int]) -> DomSet:
    """Ordem 2k+2: conjunto de ordem k que intersecta a aresta exterior xy"""
    _expect_order(graph, 2 * k + 2, "lemma4_ii")
    x, y = edge
    _expect_outer(graph, x, y, "lemma4_ii")
    if k == 1:
        chosen = {x} if graph.degree(x) == 3 else {y}
    else:
        contraction = contract_outer_edge(graph, (x, y))
        inner = _lemma2(contraction.graph)
        if contraction.merged in inner:
            chosen = set(contraction.lift(inner, merged_as=(x, y)))
        else:
            chosen = set(contraction.lift(inner))
            chosen.add(x if graph.neighbors(x) & chosen else y)
    result = certify(graph, k, chosen, k, "lemma4_ii", exact=True)
    if x not in result and y not in result:
        raise InternalInvariantViolation(f"lemma4_ii: {sorted(result)} não intersecta {x}{y}")
    return DomSet(result, k)


def _triangle_sides(graph: MopGraph, x: int, y: int) -> Tuple[int, LabeledMop, LabeledMop]:
    """Ápice z de xy e os lados G_x (corda yz, sem x) e G_y (corda xz, sem y)"""
    whole = LabeledMop.whole(graph)
    z = apex(graph, (x, y), "inner")
    return z, whole.split_avoiding(y, z, x), whole.split_avoiding(x, z, y)


def on_i(part: LabeledMop, anchor: int) -> FrozenSet[int]:
    """lemma4_i num sub-MOP de ordem ímpar, em rótulos de origem"""
    level = (part.n - 1) // 2
    return part.lift(lemma4_i(part.graph, level, part.local(anchor)).vertices)


def on_ii(part: LabeledMop, a: int, b: int) -> FrozenSet[int]:
    """lemma4_ii num sub-MOP de ordem par, em rótulos de origem"""
    level = (part.n - 2) // 2
    return part.lift(lemma4_ii(part.graph, level, (part.local(a), part.local(b))).vertices)


def on_iii(part: LabeledMop, a: int, b: int) -> FrozenSet[int]:
    level = (part.n - 1) // 2
    return part.lift(lemma4_iii(part.graph, level, part.local(a), part.local(b)).vertices)


def on_iv(part: LabeledMop, a: int) -> FrozenSet[int]:
    level = (part.n - 2) // 2
    return part.lift(lemma4_iv(part.graph, level, part.local(a)).vertices)


def lemma4_iii(graph: MopGraph, k: int, x: int, y: int) -> DomSet:
    """Ordem 2k+1, d(x), d(y) >= 3: conjunto de ordem k que contém x e y"""
    _expect_order(graph, 2 * k + 1, "lemma4_iii")
    _expect_outer(graph, x, y, "lemma4_iii")
    if graph.degree(x) < 3 or graph.degree(y) < 3:
        raise DegreeTooSmall(f"lemma4_iii: d({x})={graph.degree(x)}, d({y})={graph.degree(y)}")

    z, side_x, side_y = _triangle_sides(graph, x, y)
    ell_x = side_x.n - 1
    if ell_x % 2 == 0:
        chosen = set(on_i(side_x, y)) | set(on_i(side_y, x))
    else:
        chosen = set(on_ii(side_x, y, z)) | set(on_ii(side_y, x, z)) | {x, y}
    chosen = pad(graph, chosen, k)

    result = certify(graph, k, chosen, k, "lemma4_iii", exact=True)
    if not {x, y} <= result:
        raise InternalInvariantViolation(f"lemma4_iii: {x},{y} fora de {sorted(result)}")
    return DomSet(result, k)


def lemma4_iv(graph: MopGraph, k: int, x: int, y: Optional[int] = None) -> DomSet:
    """
    Ordem 2k+2, d(x) >= 3: conjunto de ordem k que contém x.

    y é o vizinho exterior de x usado na construção (por omissão x+1).
    """
    _expect_order(graph, 2 * k + 2, "lemma4_iv")
    if graph.degree(x) < 3:
        raise DegreeTooSmall(f"lemma4_iv: d({x})={graph.degree(x)}")
    if y is None:
        y = (x + 1) % graph.n
    _expect_outer(graph, x, y, "lemma4_iv")

    if k == 1:
        chosen = {x}
    elif graph.degree(y) == 2:
        rest = delete_vertices(graph, {y})
        chosen = set(rest.lift(lemma4_i(rest.graph, k, rest.local(x)).vertices))
    else:
        z, side_x, side_y = _triangle_sides(graph, x, y)
        ell_x = side_x.n - 1
        if ell_x % 2 == 1:
            chosen = set(on_i(side_y, x)) | set(on_ii(side_x, y, z))
        else:
            from_y = on_ii(side_y, x, z)
            chosen = set(on_i(side_x, z)) | set(from_y)
            if x not in from_y:
                chosen.add(x)
        chosen = pad(graph, chosen, k)

    result = certify(graph, k, chosen, k, "lemma4_iv", exact=True)
    if x not in result:
        raise InternalInvariantViolation(f"lemma4_iv: {x} fora de {sorted(result)}")
    return DomSet(result, k)


def small_case(graph: MopGraph, k: int) -> DomSet:
    """
    2k+1 <= n <= 4k+3: conjunto de ordem <= ⌊kn/(2k+1)⌋.

    n = 2k+1 usa lemma4_i(0); n ímpar usa lemma2_set; n par = 2m+2 usa
    lemma4_ii de nível m na aresta {0, 1}.
    """
    n = graph.n
    if not 2 * k + 1 <= n <= 4 * k + 3:
        raise WrongOrder(f"small_case: n={n} fora de [{2 * k + 1}, {4 * k + 3}]")
    if n == 2 * k + 1:
        chosen = lemma4_i(graph, k, 0).vertices
    elif n % 2 == 1:
        chosen = lemma2_set(graph).vertices
    else:
        chosen = lemma4_ii(graph, (n - 2) // 2, (0, 1)).vertices
    return DomSet(certify(graph, k, chosen, floor_bound(k, n), "small_case"), k)


# ============================================================================
# CORDA QUE SEPARA ENTRE s E 2s-2 ARESTAS EXTERIORES
# ============================================================================

@dataclass(frozen=True)
class ChordChoice:
    """Corda xy e o lado G_xy com m arestas de C(G)"""
    chord: Chord
    m: int
    side: str  # "a" (vértices a..b) ou "b" (b..n-1, 0..a)

    def to_dict(self):
        return {"chord": list(self.chord), "m": self.m, "side": self.side}


def shermer_chord(graph: MopGraph, s: int) -> ChordChoice:
    """
    Corda com um lado de m arestas exteriores, s <= m <= 2s-2, m mínimo.
    Empates: menor corda, depois lado "a".

    Raises:
        TooSmall: n < 2s
    """
    if s < 2:
        raise ParameterOutOfRange(f"shermer_chord: s={s} (mínimo 2)")
    n = graph.n
    if n < 2 * s:
        raise TooSmall(f"shermer_chord: n={n} < 2s={2 * s}")

    best = None
    for a, b in graph.chords:
        for m, side in ((b - a, "a"), (n - (b - a), "b")):
            if s <= m <= 2 * s - 2:
                candidate = (m, (a, b), side)
                if best is None or candidate < best:
                    best = candidate
    if best is None:
        raise InternalInvariantViolation(f"shermer_chord: nenhuma corda para s={s} em {graph!r}")
    m, chord, side = best
    return ChordChoice(chord=chord, m=m, side=side)
