# -*- coding: utf-8 -*-
"""
core/mop.py
Representação, validação e cirurgia estrutural de grafos maximais
outerplanares (MOPs).

Convenção de rótulos: os vértices 0..n-1 estão por esta ordem no ciclo
exterior C(G). As arestas exteriores {i, i+1 mod n} são implícitas; só as
cordas são guardadas, como pares ordenados (a, b) com a < b.

Com esta convenção cada lado de uma corda é um intervalo contíguo de
rótulos, por isso dividir, contrair e remover são operações O(n).
"""
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, FrozenSet, Iterable, List, Sequence, Tuple, Union

import networkx as nx

from .errors import (
    CrossingChords,
    DegenerateChord,
    DuplicateChord,
    MopError,
    NoTriangleOnSide,
    NotAChord,
    NotAnEdge,
    NotOuterEdge,
    ResultNotMop,
    TooSmall,
    WrongChordCount,
)

Chord = Tuple[int, int]


# ============================================================================
# TIPO PRINCIPAL
# ============================================================================

@dataclass(frozen=True)
class MopGraph:
    """
    MOP como polígono rotulado ciclicamente + conjunto de cordas sem cruzamentos.

    Não construir diretamente a partir de dados externos: usar validate().
    """
    n: int
    chords: Tuple[Chord, ...]

    @cached_property
    def chord_set(self) -> FrozenSet[Chord]:
        return frozenset(self.chords)

    @cached_property
    def adjacency(self) -> Tuple[FrozenSet[int], ...]:
        """Vizinhanças abertas, indexadas por vértice"""
        nbrs: List[set] = [set() for _ in range(self.n)]
        for v in range(self.n):
            w = (v + 1) % self.n
            nbrs[v].add(w)
            nbrs[w].add(v)
        for a, b in self.chords:
            nbrs[a].add(b)
            nbrs[b].add(a)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def closed_masks(self) -> Tuple[int, ...]:
        """Vizinhanças fechadas N[v] como bitmasks (usado pelo solver)"""
        masks = []
        for v, nbrs in enumerate(self.adjacency):
            mask = 1 << v
            for w in nbrs:
                mask |= 1 << w
            masks.append(mask)
        return tuple(masks)

    @property
    def edges(self) -> List[Chord]:
        """Todas as 2n-3 arestas, ordenadas"""
        outer = [(min(v, (v + 1) % self.n), max(v, (v + 1) % self.n)) for v in range(self.n)]
        return sorted(set(outer) | self.chord_set)

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, a: int, b: int) -> bool:
        return b in self.adjacency[a]

    def is_outer_edge(self, a: int, b: int) -> bool:
        return a != b and (b - a) % self.n in (1, self.n - 1)

    def is_chord(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.chord_set

    def to_dict(self) -> Dict[str, Any]:
        """Converte para dicionário (formato de ficheiro canónico)"""
        return {"n": self.n, "chords": [list(c) for c in self.chords]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'MopGraph':
        """Cria MopGraph validado a partir de dicionário"""
        return validate(data["n"], data["chords"])

    def to_json(self) -> str:
        """Serialização canónica bit-exata (uma linha)"""
        return json.dumps(self.to_dict())

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def __repr__(self) -> str:
        return f"MopGraph(n={self.n}, chords={list(self.chords)})"


# ============================================================================
# VALIDAÇÃO
# ============================================================================

def normalize_chords(pairs: Iterable[Sequence[int]]) -> Tuple[Chord, ...]:
    """Pares ordenados, lista ordenada lexicograficamente (sem validar)"""
    return tuple(sorted((min(a, b), max(a, b)) for a, b in pairs))


def _check_crossings(chords: Sequence[Chord]) -> None:
    """
    Cordas de um polígono não se cruzam sse os intervalos formam uma
    família laminar. Varrimento com pilha por (a, -b).
    """
    stack: List[Chord] = []
    for a, b in sorted(chords, key=lambda c: (c[0], -c[1])):
        while stack and stack[-1][1] <= a:
            stack.pop()
        if stack and b > stack[-1][1]:
            c, d = stack[-1]
            raise CrossingChords(f"cordas {{{c},{d}}} e {{{a},{b}}} cruzam-se")
        stack.append((a, b))


def validate(n: int, chords: Iterable[Sequence[int]]) -> MopGraph:
    """
    Valida e normaliza um MOP.

    Args:
        n: Número de vértices (>= 3)
        chords: Pares de vértices

    Returns:
        MopGraph normalizado

    Raises:
        TooSmall, DegenerateChord, DuplicateChord, WrongChordCount, CrossingChords

    Examples:
        >>> validate(5, [(0, 2), (0, 3)]).n
        5
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 3:
        raise TooSmall(f"ordem inválida: {n!r} (mínimo 3)")

    seen = set()
    for pair in chords:
        try:
            a, b = (int(v) for v in pair)
        except (TypeError, ValueError):
            raise DegenerateChord(f"par inválido: {pair!r}")
        if a == b:
            raise DegenerateChord(f"laço em {a}")
        a, b = min(a, b), max(a, b)
        if a < 0 or b > n - 1:
            raise DegenerateChord(f"{{{a},{b}}} fora de 0..{n - 1}")
        if b - a == 1 or (a == 0 and b == n - 1):
            raise DegenerateChord(f"{{{a},{b}}} é aresta exterior")
        if (a, b) in seen:
            raise DuplicateChord(f"corda {{{a},{b}}} repetida")
        seen.add((a, b))

    if len(seen) != n - 3:
        raise WrongChordCount(f"{len(seen)} cordas para n={n} (esperado {n - 3})")

    normalized = tuple(sorted(seen))
    _check_crossings(normalized)
    return MopGraph(n, normalized)


# ============================================================================
# VISTAS ROTULADAS (subgrafo + mapa para os rótulos originais)
# ============================================================================

@dataclass(frozen=True)
class LabeledMop:
    """Sub-MOP com mapa rótulo local -> rótulo do grafo de origem"""
    graph: MopGraph
    labels: Tuple[int, ...]

    @cached_property
    def _index(self) -> Dict[int, int]:
        return {v: i for i, v in enumerate(self.labels)}

    @property
    def n(self) -> int:
        return self.graph.n

    def __contains__(self, v: int) -> bool:
        return v in self._index

    def local(self, v: int) -> int:
        """Rótulo local de um vértice do grafo de origem"""
        try:
            return self._index[v]
        except KeyError:
            raise ValueError(f"vértice {v} não pertence ao subgrafo")

    def lift(self, vertices: Iterable[int]) -> FrozenSet[int]:
        """Converte conjunto local para rótulos de origem"""
        return frozenset(self.labels[v] for v in vertices)

    @classmethod
    def whole(cls, graph: MopGraph) -> 'LabeledMop':
        return cls(graph, tuple(range(graph.n)))

    def compose(self, inner: 'LabeledMop') -> 'LabeledMop':
        """inner é sub-MOP de self.graph; devolve-o com rótulos de origem"""
        return LabeledMop(inner.graph, tuple(self.labels[v] for v in inner.labels))

    def degree(self, v: int) -> int:
        """Grau (no subgrafo) de um vértice de origem"""
        return self.graph.degree(self.local(v))

    def cycle_neighbor(self, v: int, other: int) -> int:
        """Vizinho de v no ciclo exterior do subgrafo distinto de other"""
        i = self.local(v)
        left, right = outer_neighbors(self.graph, i)
        j = self.local(other)
        if j not in (left, right):
            raise NotOuterEdge(f"{{{v},{other}}} não é aresta exterior do subgrafo")
        return self.labels[right if j == left else left]

    def split_avoiding(self, a: int, b: int, avoid: int) -> 'LabeledMop':
        """Lado da corda {a, b} que não contém avoid (rótulos de origem)"""
        split = split_by_chord(self.graph, (self.local(a), self.local(b)))
        return self.compose(split.avoiding(self.local(avoid)))

    def without(self, vertices: Iterable[int]) -> 'LabeledMop':
        """Remove vértices (rótulos de origem) e verifica que resta um MOP"""
        return self.compose(delete_vertices(self.graph, {self.local(v) for v in vertices}))


@dataclass(frozen=True)
class SplitResult:
    """Os dois subgrafos gerados por uma corda"""
    chord: Chord
    side_a: MopGraph
    side_b: MopGraph
    map_a: Tuple[int, ...]
    map_b: Tuple[int, ...]
    m_a: int
    m_b: int

    def part(self, tag: str) -> LabeledMop:
        if tag == "a":
            return LabeledMop(self.side_a, self.map_a)
        if tag == "b":
            return LabeledMop(self.side_b, self.map_b)
        raise ValueError(f"lado desconhecido: {tag!r}")

    def containing(self, v: int) -> LabeledMop:
        """Lado que contém v (v não pode ser extremo da corda)"""
        if v in self.chord:
            raise ValueError(f"{v} é extremo da corda {self.chord}")
        return self.part("a" if v in self.map_a else "b")

    def avoiding(self, v: int) -> LabeledMop:
        """Lado que não contém v"""
        if v in self.chord:
            raise ValueError(f"{v} é extremo da corda {self.chord}")
        return self.part("b" if v in self.map_a else "a")


@dataclass(frozen=True)
class Contraction:
    """Resultado de contrair arestas: imagem de cada vértice antigo e vértice u*"""
    graph: MopGraph
    image: Tuple[int, ...]
    merged: int
    merged_from: FrozenSet[int]

    @cached_property
    def _preimage(self) -> Dict[int, int]:
        return {w: v for v, w in enumerate(self.image) if w != self.merged}

    def preimage(self, w: int) -> int:
        """Vértice antigo correspondente a w (w != u*)"""
        return self._preimage[w]

    def lift(self, vertices: Iterable[int], merged_as: Iterable[int] = ()) -> FrozenSet[int]:
        """
        Converte conjunto do grafo contraído para rótulos antigos.
        u*, se presente, é substituído por merged_as.
        """
        result = set()
        for w in vertices:
            if w == self.merged:
                result.update(merged_as)
            else:
                result.add(self._preimage[w])
        return frozenset(result)

    def then(self, other: 'Contraction') -> 'Contraction':
        """Compõe com uma contração aplicada a self.graph"""
        image = tuple(other.image[w] for w in self.image)
        merged_from = frozenset(v for v, w in enumerate(image) if w == other.merged)
        return Contraction(other.graph, image, other.merged, merged_from)


# ============================================================================
# OPERAÇÕES
# ============================================================================

def degree(graph: MopGraph, v: int) -> int:
    return graph.degree(v)


def outer_neighbors(graph: MopGraph, v: int) -> Tuple[int, int]:
    """(v-1, v+1) mod n"""
    return ((v - 1) % graph.n, (v + 1) % graph.n)


def _induced_on_cycle(graph: MopGraph, order: Sequence[int]) -> MopGraph:
    """Subgrafo induzido por `order`, que tem de ser um ciclo de arestas de graph"""
    index = {v: i for i, v in enumerate(order)}
    m = len(order)
    chords = set()
    for a, b in graph.edges:
        if a in index and b in index:
            i, j = sorted((index[a], index[b]))
            if j - i == 1 or (i == 0 and j == m - 1):
                continue
            chords.add((i, j))
    return validate(m, chords)


def split_by_chord(graph: MopGraph, chord: Sequence[int]) -> SplitResult:
    """
    Divide G pelos dois subgrafos gerados pela corda.

    side_a tem os vértices a..b, side_b os vértices b..n-1,0..a (b fica com 0).

    Raises:
        NotAChord
    """
    a, b = min(chord), max(chord)
    if not graph.is_chord(a, b):
        raise NotAChord(f"{{{a},{b}}} não é corda de {graph!r}")

    map_a = tuple(range(a, b + 1))
    map_b = tuple(range(b, graph.n)) + tuple(range(0, a + 1))
    return SplitResult(
        chord=(a, b),
        side_a=_induced_on_cycle(graph, map_a),
        side_b=_induced_on_cycle(graph, map_b),
        map_a=map_a,
        map_b=map_b,
        m_a=b - a,
        m_b=graph.n - (b - a),
    )


def contract_outer_edge(graph: MopGraph, edge: Sequence[int]) -> Contraction:
    """
    Contrai a aresta exterior {i, i+1} num vértice u*.

    O vértice i fica com o papel de u*; os rótulos acima de i+1 descem uma
    posição.

    Raises:
        TooSmall (n = 3), NotOuterEdge
    """
    n = graph.n
    if n <= 3:
        raise TooSmall("não é possível contrair arestas de um triângulo")
    a, b = edge
    if not graph.is_outer_edge(a, b):
        raise NotOuterEdge(f"{{{a},{b}}} não é aresta exterior")
    if (a + 1) % n != b:
        a, b = b, a

    image = [v if v < b else v - 1 for v in range(n)]
    image[b] = image[a]

    chords = set()
    for p, q in graph.chords:
        i, j = sorted((image[p], image[q]))
        if i == j or j - i == 1 or (i == 0 and j == n - 2):
            continue
        chords.add((i, j))

    return Contraction(
        graph=validate(n - 1, chords),
        image=tuple(image),
        merged=image[a],
        merged_from=frozenset((a, b)),
    )


def delete_vertices(graph: MopGraph, vertices: Iterable[int]) -> LabeledMop:
    """
    Remove vértices e verifica que o resto é um MOP.

    Raises:
        ResultNotMop
    """
    removed = set(vertices)
    remaining = [v for v in range(graph.n) if v not in removed]
    m = len(remaining)
    if m < 3:
        raise ResultNotMop(f"restam {m} vértices")

    for i in range(m):
        if not graph.has_edge(remaining[i], remaining[(i + 1) % m]):
            raise ResultNotMop(
                f"{remaining[i]} e {remaining[(i + 1) % m]} não são adjacentes: "
                f"G - {sorted(removed)} não tem ciclo exterior")

    edge_count = sum(1 for a, b in graph.edges if a not in removed and b not in removed)
    if edge_count != 2 * m - 3:
        raise ResultNotMop(f"{edge_count} arestas para ordem {m}")

    try:
        sub = _induced_on_cycle(graph, remaining)
    except MopError as exc:
        raise ResultNotMop(str(exc)) from exc
    return LabeledMop(sub, tuple(remaining))


def apex(graph: MopGraph, edge: Sequence[int], side: Union[int, str] = "inner") -> int:
    """
    Terceiro vértice do triângulo sobre a aresta, do lado pedido.

    Args:
        graph: MOP
        edge: Aresta {a, b}
        side: Vértice do lado pretendido, "inner" (aresta exterior, lado
            limitado) ou "outer" (lado ilimitado, sempre erro)

    Examples:
        >>> apex(validate(3, []), (0, 1))
        2
    """
    a, b = min(edge), max(edge)
    if not graph.has_edge(a, b):
        raise NotAnEdge(f"{{{a},{b}}} não é aresta")

    forward_empty = b - a == 1
    backward_empty = a == 0 and b == graph.n - 1

    if side == "inner":
        if not graph.is_outer_edge(a, b):
            raise ValueError("'inner' só faz sentido para arestas exteriores")
        use_forward = not forward_empty
    elif side == "outer":
        raise NoTriangleOnSide(f"{{{a},{b}}}: lado ilimitado não tem triângulo")
    else:
        v = int(side)
        if v in (a, b):
            raise ValueError(f"{v} é extremo da aresta")
        use_forward = a < v < b

    if (use_forward and forward_empty) or (not use_forward and backward_empty):
        raise NoTriangleOnSide(f"{{{a},{b}}}: não há triângulo desse lado")

    for w in sorted(graph.adjacency[a] & graph.adjacency[b]):
        if (a < w < b) == use_forward:
            return w
    raise NoTriangleOnSide(f"{{{a},{b}}}: triângulo em falta")


def relabel_dihedral(graph: MopGraph, rotation: int = 0, reflect: bool = False) -> MopGraph:
    """Aplica v -> (rotation - v) (reflexão) ou v -> (v + rotation) mod n"""
    n = graph.n
    if reflect:
        mapped = (((rotation - a) % n, (rotation - b) % n) for a, b in graph.chords)
    else:
        mapped = (((a + rotation) % n, (b + rotation) % n) for a, b in graph.chords)
    return MopGraph(n, normalize_chords(mapped))
