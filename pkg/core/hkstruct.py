# -*- coding: utf-8 -*-
"""
core/hkstruct.py
Famílias excecionais: pares marcados 𝒢_ℓ e grafos ℋ_k^p.

Um grafo de ℋ_k^p tem um ciclo interior C_0 = c_0 c_1 ... c_2p formado
por cordas; cada arco c_i -> c_{i+1} do ciclo exterior (ℓ_i arestas) é o
lado de fora da corda {c_i, c_{i+1}} e forma uma peça (G_i, x_i y_i) de
𝒢_{ℓ_i}. Na peça, com rótulos locais, x_i = 0 e y_i = ℓ_i.
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from config import GCAL_MAX_ELL
from .canonical import marked_canonical_form
from .errors import (
    BadPieceCount,
    BadTriangulation,
    InternalInvariantViolation,
    NotAMarkedPair,
    ParameterOutOfRange,
    PieceOutOfRange,
    SumTooSmall,
    TooLarge,
    UOnCycle,
)
from .exact import Constraints, DomSet, component_sizes, is_kcds, min_kcds
from .lemmas import ceil_bound, floor_bound, lemma4_i
from .mop import Chord, LabeledMop, MopGraph, delete_vertices, normalize_chords, split_by_chord, validate

logger = logging.getLogger(__name__)


# ============================================================================
# 𝒢_ℓ
# ============================================================================

@dataclass(frozen=True)
class MarkedPair:
    """(G, xy): MOP de ordem ℓ+1 com aresta exterior xy e {d(x), d(y)} = {2, 3}"""
    g: MopGraph
    x: int
    y: int

    def __post_init__(self):
        g, x, y = self.g, self.x, self.y
        ell = g.n - 1
        if ell < 4 or ell % 2:
            raise NotAMarkedPair(f"ordem {g.n}: ℓ={ell} tem de ser par >= 4")
        if not g.is_outer_edge(x, y):
            raise NotAMarkedPair(f"{{{x},{y}}} não é aresta exterior")
        if sorted((g.degree(x), g.degree(y))) != [2, 3]:
            raise NotAMarkedPair(f"graus {{{g.degree(x)},{g.degree(y)}}} != {{2,3}}")

    @property
    def ell(self) -> int:
        return self.g.n - 1

    @property
    def x_prime(self) -> int:
        return LabeledMop.whole(self.g).cycle_neighbor(self.x, self.y)

    @property
    def y_prime(self) -> int:
        return LabeledMop.whole(self.g).cycle_neighbor(self.y, self.x)

    def to_dict(self):
        return {"n": self.g.n, "chords": [list(c) for c in self.g.chords], "x": self.x, "y": self.y}


@lru_cache(maxsize=4096)
def _gcal_by_form(n: int, form: Tuple[Chord, ...]) -> bool:
    """Teste de 𝒢_ℓ no representante com x = 0, y = 1"""
    g = MopGraph(n, form)
    half = (n - 1) // 2
    rest = delete_vertices(g, {0, 1})
    # em G - {0, 1}: x' = n-1, y' = 2
    pair = (rest.local(n - 1), rest.local(2))
    constraints = Constraints(must_intersect=(pair,), max_size=half - 2)
    return min_kcds(rest.graph, half - 2, constraints, guard_override=True) is None


def is_in_gcal(mp: MarkedPair) -> bool:
    """
    True sse G - {x, y} não tem conjunto (ℓ/2-2)-componente dominante de
    ordem ℓ/2-2 que intersecte x'y'. Para ℓ = 4 é sempre True: um conjunto
    vazio não intersecta uma aresta.
    """
    return _gcal_by_form(mp.g.n, marked_canonical_form(mp.g, mp.x, mp.y))


def enum_gcal(ell: int) -> List[MarkedPair]:
    """
    Todos os membros de 𝒢_ℓ a menos de isomorfismo marcado, com x = 0, y = 1.

    Raises:
        ParameterOutOfRange: ℓ ímpar ou < 4
        TooLarge: ℓ > GCAL_MAX_ELL
    """
    from families.population import enum_mops

    if ell < 4 or ell % 2:
        raise ParameterOutOfRange(f"enum_gcal: ℓ={ell} (par >= 4)")
    if ell > GCAL_MAX_ELL:
        raise TooLarge(f"enum_gcal: ℓ={ell} acima de {GCAL_MAX_ELL}")

    n = ell + 1
    seen = set()
    members = []
    for g in enum_mops(n, dedup=True):
        for v in range(n):
            w = (v + 1) % n
            if sorted((g.degree(v), g.degree(w))) != [2, 3]:
                continue
            form = marked_canonical_form(g, v, w)
            if form in seen:
                continue
            seen.add(form)
            if _gcal_by_form(n, form):
                members.append(MarkedPair(MopGraph(n, form), 0, 1))
    members.sort(key=lambda mp: mp.g.chords)
    logger.debug(f"𝒢_{ell}: {len(members)} membros")
    return members


# ============================================================================
# ℋ_k^p
# ============================================================================

@dataclass(frozen=True)
class HkPiece:
    """Peça entre c_i e c_{i+1}: (local, rótulos globais); x local 0, y local ℓ"""
    start: int
    end: int
    part: LabeledMop

    @property
    def ell(self) -> int:
        return self.part.n - 1

    @property
    def pair(self) -> MarkedPair:
        return MarkedPair(self.part.graph, 0, self.ell)

    def interior(self) -> FrozenSet[int]:
        return frozenset(self.part.labels[1:-1])


@dataclass(frozen=True)
class HkDecomposition:
    """Testemunha de G ∈ ℋ_k^p"""
    k: int
    p: int
    cycle: Tuple[int, ...]
    pieces: Tuple[HkPiece, ...]
    inner_chords: Tuple[Chord, ...]

    @property
    def ells(self) -> List[int]:
        return [piece.ell for piece in self.pieces]

    @property
    def n(self) -> int:
        return sum(self.ells)

    def piece_of(self, v: int) -> int:
        """Índice da peça que contém v no interior"""
        for i, piece in enumerate(self.pieces):
            if v in piece.interior():
                return i
        raise UOnCycle(f"{v} pertence a C_0 {list(self.cycle)}")

    def to_dict(self):
        return {
            "in_hk": True,
            "k": self.k,
            "p": self.p,
            "cycle": list(self.cycle),
            "piece_sizes": self.ells,
            "inner_chords": [list(c) for c in self.inner_chords],
        }


def _piece_from_arc(g: MopGraph, start: int, end: int) -> Optional[HkPiece]:
    """Peça sobre o arco start -> end (sentido crescente); None se não é corda"""
    a, b = min(start, end), max(start, end)
    if not g.is_chord(a, b):
        return None
    split = split_by_chord(g, (a, b))
    part = split.part("a" if start < end else "b")
    return HkPiece(start=start, end=end, part=part)


def _valid_piece(piece: HkPiece, k: int) -> bool:
    ell = piece.ell
    if ell % 2 or not 4 <= ell <= 2 * k:
        return False
    g = piece.part.graph
    if sorted((g.degree(0), g.degree(ell))) != [2, 3]:
        return False
    return is_in_gcal(MarkedPair(g, 0, ell))


def _decomposition(g: MopGraph, k: int, cycle: Sequence[int]) -> HkDecomposition:
    size = len(cycle)
    pieces = []
    for i in range(size):
        piece = _piece_from_arc(g, cycle[i], cycle[(i + 1) % size])
        if piece is None:
            raise InternalInvariantViolation(f"arco {cycle[i]}->{cycle[(i + 1) % size]} sem corda")
        pieces.append(piece)
    on_cycle = set(cycle)
    inner = tuple(
        (a, b) for a, b in g.chords
        if a in on_cycle and b in on_cycle
        and (cycle.index(b) - cycle.index(a)) % size not in (1, size - 1)
    )
    return HkDecomposition(k=k, p=(size - 1) // 2, cycle=tuple(cycle),
                           pieces=tuple(pieces), inner_chords=inner)


@lru_cache(maxsize=4096)
def detect_hk(g: MopGraph, k: int) -> Optional[HkDecomposition]:
    """
    Decomposição de G em ℋ_k, ou None.

    Procura ciclos c_0 < c_1 < ... de cordas cujos arcos têm ℓ par em
    [4, 2k] e formam peças de 𝒢_ℓ, em número ímpar 2p+1 com p <= k-1.
    O ciclo devolvido começa no menor vértice possível.
    """
    n = g.n
    if k < 2 or n % 2 or n < 4 * k + 4 or n > 2 * k * (2 * k - 1):
        return None

    valid: Dict[Tuple[int, int], bool] = {}

    def piece_ok(start: int, ell: int) -> bool:
        key = (start, ell)
        if key not in valid:
            piece = _piece_from_arc(g, start, (start + ell) % n)
            valid[key] = piece is not None and _valid_piece(piece, k)
        return valid[key]

    def extend(path: List[int], total: int) -> Optional[List[int]]:
        count = len(path) - 1  # peças já colocadas
        if total == n:
            p = (count - 1) // 2
            if count % 2 == 1 and 3 <= count <= 2 * k - 1 and n >= 4 * k * p + 2 * p + 2:
                return path
            return None
        if count >= 2 * k - 1:
            return None
        for ell in range(4, 2 * k + 1, 2):
            if total + ell > n:
                break
            if piece_ok(path[-1], ell):
                found = extend(path + [(path[-1] + ell) % n], total + ell)
                if found is not None:
                    return found
        return None

    for start in range(min(n, 2 * k)):
        found = extend([start], 0)
        if found is not None:
            cycle = found[:-1]
            dec = _decomposition(g, k, cycle)
            logger.debug(f"ℋ_{k}^{dec.p}: ciclo {cycle}, peças {dec.ells}")
            return dec
    return None


def in_hk(g: MopGraph, k: int) -> bool:
    return detect_hk(g, k) is not None


def dichotomy_bound(g: MopGraph, k: int) -> int:
    """⌈kn/(2k+1)⌉ para membros de ℋ_k, ⌊kn/(2k+1)⌋ caso contrário"""
    if detect_hk(g, k) is not None:
        return ceil_bound(k, g.n)
    return floor_bound(k, g.n)


def build_hk(k: int, pieces: Sequence[MarkedPair],
             inner_triangulation: Optional[MopGraph] = None) -> Tuple[MopGraph, HkDecomposition]:
    """
    Cola 2p+1 peças pelo ciclo interior e triangula-o.

    A peça i ocupa as posições globais off_i .. off_i + ℓ_i, percorrendo o
    caminho exterior de x_i para y_i que não usa a aresta x_i y_i. O ciclo
    interior c_i = off_i é triangulado por inner_triangulation (um MOP de
    ordem 2p+1; por omissão o leque).

    Raises:
        BadPieceCount, PieceOutOfRange, SumTooSmall, BadTriangulation
    """
    count = len(pieces)
    if count % 2 == 0 or not 3 <= count <= 2 * k - 1:
        raise BadPieceCount(f"{count} peças para k={k} (ímpar entre 3 e {2 * k - 1})")
    p = (count - 1) // 2
    for i, mp in enumerate(pieces):
        if not 4 <= mp.ell <= 2 * k:
            raise PieceOutOfRange(f"peça {i}: ℓ={mp.ell} fora de [4, {2 * k}]")
        if not is_in_gcal(mp):
            raise PieceOutOfRange(f"peça {i}: não pertence a 𝒢_{mp.ell}")
    total = sum(mp.ell for mp in pieces)
    if total < 4 * k * p + 2 * p + 2:
        raise SumTooSmall(f"Σℓ = {total} < {4 * k * p + 2 * p + 2}")

    if inner_triangulation is None:
        inner_triangulation = MopGraph(count, tuple((0, i) for i in range(2, count - 1)))
    if not isinstance(inner_triangulation, MopGraph) or inner_triangulation.n != count:
        raise BadTriangulation(f"triangulação interior tem de ser um MOP de ordem {count}")

    chords: List[Chord] = []
    cycle: List[int] = []
    offset = 0
    for mp in pieces:
        g, n_local = mp.g, mp.g.n
        step = -1 if mp.y == (mp.x + 1) % n_local else 1
        position = {(mp.x + step * j) % n_local: (offset + j) % total for j in range(n_local)}
        chords.extend((position[a], position[b]) for a, b in g.chords)
        cycle.append(offset)
        chords.append((offset, (offset + mp.ell) % total))
        offset += mp.ell
    chords.extend((cycle[a], cycle[b]) for a, b in inner_triangulation.chords)

    graph = validate(total, normalize_chords(chords))
    dec = _decomposition(graph, k, cycle)
    return graph, dec


# ============================================================================
# CONJUNTOS PARA MEMBROS DE ℋ_k
# ============================================================================

def anchored_sets(dec: HkDecomposition, order: Sequence[int], mirror: bool = False) -> List[FrozenSet[int]]:
    """
    Conjuntos ℓ_i/2-componente dominantes das peças pela ordem dada:
    posições pares ancoradas em y (fim), ímpares em x (início).
    Com mirror as âncoras trocam (pares em x, ímpares em y).
    """
    sets = []
    for position, index in enumerate(order):
        piece = dec.pieces[index]
        at_end = (position % 2 == 0) != mirror
        anchor = piece.ell if at_end else 0
        local = lemma4_i(piece.part.graph, piece.ell // 2, anchor).vertices
        sets.append(piece.part.lift(local))
    return sets


def hk_kcds(g: MopGraph, dec: HkDecomposition) -> DomSet:
    """Conjunto k-componente dominante de ordem n/2 - p = ⌈kn/(2k+1)⌉"""
    chosen = frozenset().union(*anchored_sets(dec, range(len(dec.pieces))))
    expected = g.n // 2 - dec.p
    if not is_kcds(g, dec.k, chosen) or len(chosen) != expected:
        raise InternalInvariantViolation(
            f"hk_kcds: {sorted(chosen)} (tamanho {len(chosen)}, esperado {expected})")
    return DomSet(chosen, dec.k)


@dataclass(frozen=True)
class SemiDomSet:
    """Conjunto dominante D = D1 ∪ D2 com u na componente pequena D1"""
    d1: FrozenSet[int]
    d2: FrozenSet[int]
    u: int
    k: int
    excluded: FrozenSet[int] = field(default_factory=frozenset)

    @property
    def vertices(self) -> FrozenSet[int]:
        return self.d1 | self.d2

    @property
    def size(self) -> int:
        return len(self.d1) + len(self.d2)

    def to_dict(self):
        return {"u": self.u, "k": self.k, "d1": sorted(self.d1), "d2": sorted(self.d2),
                "excluded_cycle_vertices": sorted(self.excluded)}


def _connected(g: MopGraph, vertices: FrozenSet[int]) -> bool:
    if not vertices:
        return False
    start = min(vertices)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w in vertices and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == set(vertices)


def hk_semi(g: MopGraph, dec: HkDecomposition, u: int) -> SemiDomSet:
    """
    Conjunto semi-k-componente dominante com u na componente pequena.

    A peça de u fica em último lugar; D1 é um conjunto de G_j - {x_j, y_j}
    que contém u, D2 usa a alternância y, x, y, ... nas outras 2p peças.

    Raises:
        UOnCycle: u ∈ C_0
    """
    if u in dec.cycle:
        raise UOnCycle(f"{u} pertence a C_0 {list(dec.cycle)}")
    j = dec.piece_of(u)
    size = len(dec.pieces)
    order = [(j + 1 + r) % size for r in range(size - 1)]
    d2 = frozenset().union(*anchored_sets(dec, order))

    piece = dec.pieces[j]
    inner = piece.part.compose(delete_vertices(piece.part.graph, {0, piece.ell}))
    level = piece.ell // 2 - 1
    d1 = inner.lift(lemma4_i(inner.graph, level, inner.local(u)).vertices)

    chosen = d1 | d2
    cycle_nbrs = g.neighbors(u) & set(dec.cycle)
    checks = [
        (not d1 & d2, "D1 e D2 não são disjuntos"),
        (is_kcds(g, 1, chosen), "D não domina G"),
        (_connected(g, d1) and u in d1, "G[D1] não é conexo com u"),
        (len(d1) >= min(dec.ells) // 2 - 1, "D1 pequeno demais"),
        (all(size >= dec.k for size in component_sizes(g, d2)), "componente de D2 com ordem < k"),
        (len(chosen) <= g.n // 2 - (dec.p + 1), "D grande demais"),
        (not chosen & cycle_nbrs, "D contém vizinho de u em C_0"),
    ]
    for ok, message in checks:
        if not ok:
            raise InternalInvariantViolation(f"hk_semi(u={u}): {message}: {sorted(chosen)}")
    return SemiDomSet(d1=d1, d2=d2, u=u, k=dec.k, excluded=frozenset(dec.cycle) - chosen)
