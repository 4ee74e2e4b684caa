# -*- coding: utf-8 -*-
"""
core/construct.py
Construção de conjuntos k-componente dominantes dentro do limite
⌊kn/(2k+1)⌋ (ou ⌈kn/(2k+1)⌉ para membros de ℋ_k).

O algoritmo é uma recursão estrutural: cada caso reduz G a MOPs menores
(remoção de orelhas, divisão por uma corda, contração de arestas
exteriores), resolve-os e junta os conjuntos. Todos os ramos verificam a
sua garantia com certify(); uma falha levanta InternalInvariantViolation.

Convenção: os conjuntos intermédios estão sempre nos rótulos do grafo
de entrada; os sub-MOPs são LabeledMop com rótulos de origem.
"""
import logging
from dataclasses import dataclass
from typing import Callable, FrozenSet, Iterable, List, Optional, Tuple

from .errors import (
    InternalInvariantViolation,
    IsExceptional,
    MopError,
    OrderTooSmall,
    ParameterOutOfRange,
    WrongOrder,
)
from .exact import Constraints, DomSet, min_kcds
from .hkstruct import HkDecomposition, anchored_sets, detect_hk, hk_kcds, hk_semi
from .lemmas import (
    ChordChoice,
    ceil_bound,
    certify,
    floor_bound,
    lemma2_set,
    on_i,
    on_ii,
    on_iii,
    on_iv,
    shermer_chord,
    small_case,
)
from .mop import Contraction, LabeledMop, MopGraph, apex, contract_outer_edge, split_by_chord

logger = logging.getLogger(__name__)

Trace = List[str]


# ============================================================================
# PADRÃO DE DUAS ORELHAS
# ============================================================================

@dataclass(frozen=True)
class Claim1Pattern:
    """
    distance2: d(u) = d(v) = 2, vizinho comum x, N(u) = {x, y}, N(v) = {x, z}
    adjacent23: d(u) = 2, d(v) = 3, u ~ v, N(u) = {v, x}, N(v) = {u, x, y}
    """
    tag: str
    u: int
    v: int
    x: int
    y: int
    z: Optional[int] = None

    def to_dict(self):
        return {"tag": self.tag, "u": self.u, "v": self.v, "x": self.x, "y": self.y, "z": self.z}


def claim1_pattern(g: MopGraph) -> Claim1Pattern:
    """
    Duas orelhas próximas: vértices de grau 2 a distância 2, ou um vértice
    de grau 2 adjacente a um de grau 3. Escolha pelo menor rótulo.
    """
    if g.n < 7:
        raise WrongOrder(f"claim1_pattern: n={g.n} (mínimo 7)")
    ears = [v for v in range(g.n) if g.degree(v) == 2]

    for i, u in enumerate(ears):
        for v in ears[i + 1:]:
            common = g.neighbors(u) & g.neighbors(v)
            if common and not g.has_edge(u, v):
                x = min(common)
                (y,) = g.neighbors(u) - {x}
                (z,) = g.neighbors(v) - {x}
                return Claim1Pattern("distance2", u, v, x, y, z)

    for u in ears:
        for v in sorted(g.neighbors(u)):
            if g.degree(v) == 3:
                (x,) = g.neighbors(u) - {v}
                (y,) = g.neighbors(v) - {u, x}
                return Claim1Pattern("adjacent23", u, v, x, y)

    raise InternalInvariantViolation(f"claim1_pattern: nenhum padrão em {g!r}")


# ============================================================================
# AUXILIARES
# ============================================================================

def _residue_blocked(r: int, k: int) -> bool:
    """
    Resíduos 2ℓ (1 <= ℓ <= k-1) em que a remoção de duas orelhas não chega.
    Para k = 1 o resíduo 2 também fica bloqueado: ⌊(n+1)/3⌋ > ⌊n/3⌋.
    """
    return r % 2 == 0 and 1 <= r // 2 <= max(k - 1, 1)


def _bound(g: MopGraph, k: int) -> Tuple[int, Optional[HkDecomposition]]:
    dec = detect_hk(g, k)
    if dec is not None:
        return ceil_bound(k, g.n), dec
    return floor_bound(k, g.n), None


def _solve(part: LabeledMop, k: int, trace: Trace) -> FrozenSet[int]:
    """Chamada recursiva num sub-MOP, em rótulos de origem"""
    return part.lift(_construct(part.graph, k, trace))


def _semi(part: LabeledMop, k: int, dec: HkDecomposition, w: int) -> FrozenSet[int]:
    """Conjunto semi-dominante de um membro de ℋ_k com w na componente pequena"""
    return part.lift(hk_semi(part.graph, dec, part.local(w)).vertices)


def _on_cycle(part: LabeledMop, dec: HkDecomposition, w: int) -> bool:
    return part.local(w) in dec.cycle


def _cover_side(gz: LabeledMop, k: int, x: int, y: int, trace: Trace) -> FrozenSet[int]:
    """G_z inteiro: recursão, ou semi-dominante com x (ou y) fora de C_0"""
    dec = detect_hk(gz.graph, k)
    if dec is None:
        return _solve(gz, k, trace)
    w = x if not _on_cycle(gz, dec, x) else y
    trace.append(f"semi({w})")
    return _semi(gz, k, dec, w)


@dataclass(frozen=True)
class _ContractedSide:
    """G_z com arestas exteriores contraídas"""
    gz: LabeledMop
    contraction: Contraction

    @property
    def graph(self) -> MopGraph:
        return self.contraction.graph

    def lift(self, vertices: Iterable[int], merged_as: Iterable[int] = ()) -> FrozenSet[int]:
        local = self.contraction.lift(vertices, merged_as=[self.gz.local(v) for v in merged_as])
        return self.gz.lift(local)

    def image(self, v: int) -> int:
        return self.contraction.image[self.gz.local(v)]


def _contract(gz: LabeledMop, *edges: Tuple[int, int]) -> _ContractedSide:
    """Contrai xy (e depois a aresta entre u* e a imagem do segundo par)"""
    (a, b), rest = edges[0], edges[1:]
    contraction = contract_outer_edge(gz.graph, (gz.local(a), gz.local(b)))
    for a, b in rest:
        ia, ib = contraction.image[gz.local(a)], contraction.image[gz.local(b)]
        contraction = contraction.then(contract_outer_edge(contraction.graph, (ia, ib)))
    return _ContractedSide(gz, contraction)


def _first_certified(g: MopGraph, k: int, limit: int, label: str,
                     candidates: Iterable[Callable[[], FrozenSet[int]]]) -> FrozenSet[int]:
    """Primeiro candidato que é k-componente dominante e cabe no limite"""
    for build in candidates:
        try:
            chosen = build()
        except MopError as exc:
            logger.debug(f"{label}: candidato rejeitado ({exc})")
            continue
        try:
            return certify(g, k, chosen, limit, label)
        except InternalInvariantViolation:
            continue
    raise InternalInvariantViolation(f"{label}: nenhum candidato válido em {g!r}")


def _gcal_witness(part: LabeledMop, b: int, c: int) -> FrozenSet[int]:
    """
    Conjunto (ℓ/2-2)-componente dominante de part - {b, c} de ordem
    ℓ/2-2 que intersecta b'c' (existe sse (part, bc) não está em 𝒢_ℓ).
    """
    b_prime = part.cycle_neighbor(b, c)
    c_prime = part.cycle_neighbor(c, b)
    rest = part.without({b, c})
    level = (part.n - 1) // 2 - 2
    constraints = Constraints(must_intersect=((rest.local(b_prime), rest.local(c_prime)),),
                              max_size=level)
    if level < 1:
        raise InternalInvariantViolation(f"ℓ={part.n - 1}: todo o par pertence a 𝒢")
    found = min_kcds(rest.graph, level, constraints, guard_override=True)
    if found is None:
        raise InternalInvariantViolation(f"sem testemunha fora de 𝒢 em {part.graph!r}")
    return rest.lift(found.vertices)


# ============================================================================
# TRIÂNGULO SOBRE A CORDA: G_x, G_y, G_z
# ============================================================================

@dataclass(frozen=True)
class _Triangle:
    x: int
    y: int
    z: int
    gx: LabeledMop  # lado de yz sem x
    gy: LabeledMop  # lado de xz sem y
    gz: LabeledMop  # lado de xy sem z

    @property
    def ell_x(self) -> int:
        return self.gx.n - 1

    @property
    def ell_y(self) -> int:
        return self.gy.n - 1

    @property
    def ell_z(self) -> int:
        return self.gz.n - 1

    def swapped(self) -> '_Triangle':
        return _Triangle(self.y, self.x, self.z, self.gy, self.gx, self.gz)


def _sides(g: MopGraph, choice: ChordChoice) -> Tuple[LabeledMop, LabeledMop]:
    """G_xy (o lado com m arestas de C(G)) e G_z"""
    split = split_by_chord(g, choice.chord)
    return split.part(choice.side), split.part("b" if choice.side == "a" else "a")


def _triangle(g: MopGraph, choice: ChordChoice, gxy: LabeledMop, gz: LabeledMop) -> _Triangle:
    """Ápice z de xy em G_xy e os lados G_x, G_y (m > 2k+2 garante ℓ_x, ℓ_y >= 2)"""
    x, y = choice.chord
    whole = LabeledMop.whole(g)
    z = apex(g, (x, y), gxy.labels[1])
    return _Triangle(x, y, z, whole.split_avoiding(y, z, x), whole.split_avoiding(x, z, y), gz)


# ============================================================================
# ORDEM n = 4k + 2ℓ
# ============================================================================

def lemma7_construct(g: MopGraph, k: int) -> DomSet:
    """
    n = 4k+2ℓ, 2 <= ℓ <= k, G fora de ℋ_k: conjunto de ordem <= 2k+ℓ-2.

    Raises:
        WrongOrder, IsExceptional
    """
    n = g.n
    ell, rem = divmod(n - 4 * k, 2)
    if rem or not 2 <= ell <= max(k, 2):
        raise WrongOrder(f"lemma7_construct: n={n} não é 4k+2ℓ com 2 <= ℓ <= k (k={k})")
    if detect_hk(g, k) is not None:
        raise IsExceptional(f"lemma7_construct: G pertence a ℋ_{k}")
    return DomSet(_lemma7(g, k, []), k)


def _lemma7(g: MopGraph, k: int, trace: Trace) -> FrozenSet[int]:
    limit = floor_bound(k, g.n)
    choice = shermer_chord(g, 2 * k + 2)
    gxy, gz = _sides(g, choice)

    if choice.m == 2 * k + 2:
        trace.append("lemma7:m=2k+2")
        chosen = gxy.lift(lemma2_set(gxy.graph).vertices) | gz.lift(small_case(gz.graph, k).vertices)
        return certify(g, k, chosen, limit, "lemma7:m=2k+2")

    tri = _triangle(g, choice, gxy, gz)

    if tri.ell_x % 2 == 1 and tri.ell_y % 2 == 1:
        trace.append("lemma7:case1")
        dx = on_ii(tri.gx, tri.y, tri.z)
        dy = on_ii(tri.gy, tri.x, tri.z)
        anchor = tri.x if (tri.z in dx and tri.z in dy) or tri.x in dy else tri.y
        chosen = dx | dy | on_i(tri.gz, anchor)
        return certify(g, k, chosen, limit, "lemma7:case1")

    if tri.ell_x % 2 != tri.ell_y % 2:
        trace.append("lemma7:case2")
        if tri.ell_x % 2 == 0:
            tri = tri.swapped()
        dx = on_ii(tri.gx, tri.y, tri.z)
        dy = on_i(tri.gy, tri.z if tri.z in dx else tri.x)
        chosen = dx | dy | on_ii(tri.gz, tri.x, tri.y)
        return certify(g, k, chosen, limit, "lemma7:case2")

    trace.append("lemma7:case3")
    return _first_certified(g, k, limit, "lemma7:case3", _lemma7_case3_candidates(tri, k))


def _lemma7_case3_candidates(tri: _Triangle, k: int):
    x, y, z = tri.x, tri.y, tri.z
    # (P_a, b, c, P_b, P_c): P_a tem a aresta bc; P_b contém c, P_c contém b
    sides = [
        (tri.gx, y, z, tri.gy, tri.gz),
        (tri.gy, x, z, tri.gx, tri.gz),
        (tri.gz, x, y, tri.gx, tri.gy),
    ]
    for pa, b, c, pb, pc in sides:
        rest = (lambda pb=pb, pc=pc, b=b, c=c: on_i(pb, c) | on_i(pc, b))
        deg_b, deg_c = pa.degree(b), pa.degree(c)
        if deg_b >= 3 and deg_c >= 3:
            yield lambda pa=pa, b=b, c=c, rest=rest: on_iii(pa, b, c) | rest()
        if deg_b == 2 and deg_c >= 4:
            yield lambda pa=pa, b=b, c=c, rest=rest: on_iv(pa.without({b}), c) | rest()
        if deg_c == 2 and deg_b >= 4:
            yield lambda pa=pa, b=b, c=c, rest=rest: on_iv(pa.without({c}), b) | rest()

    if tri.ell_z >= 2 * k + 2:
        def long_side():
            inner = tri.gz.without({x, y})
            return on_i(tri.gx, z) | on_i(tri.gy, z) | on_i(inner, min(inner.labels))
        yield long_side

    for pa, b, c, pb, pc in sides:
        yield lambda pa=pa, b=b, c=c, pb=pb, pc=pc: _gcal_witness(pa, b, c) | on_i(pb, c) | on_i(pc, b)


# ============================================================================
# CASO GERAL
# ============================================================================

def theorem1_construct(g: MopGraph, k: int) -> DomSet:
    """
    Conjunto k-componente dominante de ordem <= ⌊kn/(2k+1)⌋, ou
    <= ⌈kn/(2k+1)⌉ se G ∈ ℋ_k.

    Raises:
        OrderTooSmall: n < 2k+1
        InternalInvariantViolation: um ramo da construção falhou
    """
    return construct_with_trace(g, k)[0]


def construct_with_trace(g: MopGraph, k: int) -> Tuple[DomSet, Trace]:
    """Como theorem1_construct, com a sequência de casos percorridos"""
    if k < 1:
        raise ParameterOutOfRange(f"k={k} (mínimo 1)")
    if g.n < 2 * k + 1:
        raise OrderTooSmall(f"n={g.n} < 2k+1={2 * k + 1}")
    trace: Trace = []
    chosen = _construct(g, k, trace)
    logger.debug(f"construct n={g.n} k={k}: {len(chosen)} vértices, casos {trace}")
    return DomSet(chosen, k), trace


def _construct(g: MopGraph, k: int, trace: Trace) -> FrozenSet[int]:
    n = g.n
    limit, dec = _bound(g, k)

    if n <= 4 * k + 3:
        trace.append("small_case")
        return certify(g, k, small_case(g, k).vertices, limit, "small_case")

    if dec is not None:
        trace.append(f"hk:p={dec.p}")
        return hk_kcds(g, dec).vertices

    if not _residue_blocked(n % (2 * k + 1), k):
        return _claim1(g, k, limit, trace)

    if n <= 6 * k + 4:
        trace.append("lemma7")
        return _lemma7(g, k, trace)

    return _chord_step(g, k, limit, trace)


def _claim1(g: MopGraph, k: int, limit: int, trace: Trace) -> FrozenSet[int]:
    pattern = claim1_pattern(g)
    rest = LabeledMop.whole(g).without({pattern.u, pattern.v})
    dec = detect_hk(rest.graph, k)

    if dec is None:
        trace.append(f"claim1:{pattern.tag}")
        chosen = _solve(rest, k, trace) | {pattern.x}
    elif not _on_cycle(rest, dec, pattern.x):
        trace.append(f"claim1:{pattern.tag}:semi(x)")
        chosen = _semi(rest, k, dec, pattern.x) | {pattern.u}
    else:
        trace.append(f"claim1:{pattern.tag}:semi(y)")
        w = pattern.y
        if _on_cycle(rest, dec, w) and pattern.z is not None:
            w = pattern.z
        chosen = _semi(rest, k, dec, w) | {pattern.x}
    return certify(g, k, chosen, limit, f"claim1:{pattern.tag}")


def _chord_step(g: MopGraph, k: int, limit: int, trace: Trace) -> FrozenSet[int]:
    choice = shermer_chord(g, 2 * k + 2)
    gxy, gz = _sides(g, choice)
    x, y = choice.chord

    if choice.m == 2 * k + 2:
        dec = detect_hk(gz.graph, k)
        if dec is None:
            trace.append("chord:m=2k+2")
            chosen = gxy.lift(lemma2_set(gxy.graph).vertices) | _solve(gz, k, trace)
        else:
            trace.append("chord:m=2k+2:semi")
            w = x if not _on_cycle(gz, dec, x) else y
            chosen = _semi(gz, k, dec, w) | on_i(gxy, w)
        return certify(g, k, chosen, limit, "chord:m=2k+2")

    tri = _triangle(g, choice, gxy, gz)

    if tri.ell_x % 2 == 1 and tri.ell_y % 2 == 1:
        return _case1(g, k, limit, tri, trace)
    if tri.ell_x % 2 != tri.ell_y % 2:
        return _case2(g, k, limit, tri if tri.ell_x % 2 == 1 else tri.swapped(), trace)
    return _case3(g, k, limit, tri, trace)


def _case1(g: MopGraph, k: int, limit: int, tri: _Triangle, trace: Trace) -> FrozenSet[int]:
    """ℓ_x, ℓ_y ímpares"""
    dx = on_ii(tri.gx, tri.y, tri.z)
    dy = on_ii(tri.gy, tri.x, tri.z)

    if tri.z in dx and tri.z in dy:
        trace.append("case1.1")
        chosen = dx | dy | _cover_side(tri.gz, k, tri.x, tri.y, trace)
        return certify(g, k, chosen, limit, "case1.1")

    if tri.y not in dx:
        tri, dx, dy = tri.swapped(), dy, dx
    x, y = tri.x, tri.y
    side = _contract(tri.gz, (x, y))
    merged = side.contraction.merged
    dec = detect_hk(side.graph, k)

    if dec is None:
        trace.append("case1.2")
        chosen = side.lift(_construct(side.graph, k, trace), merged_as=(x,))
    elif merged not in dec.cycle:
        trace.append("case1.2:semi(u*)")
        chosen = side.lift(hk_semi(side.graph, dec, merged).vertices, merged_as=(x,))
    else:
        trace.append("case1.2:semi(y')")
        y_prime = tri.gz.cycle_neighbor(y, x)
        semi = hk_semi(side.graph, dec, side.image(y_prime)).vertices
        if merged in semi:
            raise InternalInvariantViolation("case1.2: u* no conjunto semi-dominante")
        chosen = side.lift(semi)
    return certify(g, k, dx | dy | chosen, limit, "case1.2")


def _case2(g: MopGraph, k: int, limit: int, tri: _Triangle, trace: Trace) -> FrozenSet[int]:
    """ℓ_x ímpar, ℓ_y par"""
    x, y, z = tri.x, tri.y, tri.z
    dx = on_ii(tri.gx, y, z)

    if z in dx:
        trace.append("case2.1")
        chosen = dx | on_i(tri.gy, z) | _cover_side(tri.gz, k, x, y, trace)
        return certify(g, k, chosen, limit, "case2.1")

    dy = on_i(tri.gy, x)
    y_prime = tri.gz.cycle_neighbor(y, x)
    x_prime = tri.gz.cycle_neighbor(x, y)
    side = _contract(tri.gz, (x, y), (y, y_prime))
    merged = side.contraction.merged
    dec = detect_hk(side.graph, k)

    if dec is None:
        trace.append("case2.2")
        chosen = side.lift(_construct(side.graph, k, trace), merged_as=(y_prime,))
    elif merged not in dec.cycle:
        trace.append("case2.2:semi(u*)")
        chosen = side.lift(hk_semi(side.graph, dec, merged).vertices, merged_as=(y_prime,))
    else:
        trace.append("case2.2:semi(x')")
        semi = hk_semi(side.graph, dec, side.image(x_prime)).vertices
        if merged in semi:
            raise InternalInvariantViolation("case2.2: u* no conjunto semi-dominante")
        chosen = side.lift(semi)
    return certify(g, k, dx | dy | chosen, limit, "case2.2")


def _case3(g: MopGraph, k: int, limit: int, tri: _Triangle, trace: Trace) -> FrozenSet[int]:
    """ℓ_x, ℓ_y pares"""
    x, y, z = tri.x, tri.y, tri.z
    side = _contract(tri.gz, (x, y))
    merged = side.contraction.merged
    dec = detect_hk(side.graph, k)

    if dec is None:
        trace.append("case3")
        inner = _construct(side.graph, k, trace)
        if merged in inner:
            chosen = on_i(tri.gx, y) | on_i(tri.gy, x) | side.lift(inner)
        else:
            chosen = on_i(tri.gx, z) | on_i(tri.gy, z) | side.lift(inner)
        return certify(g, k, chosen, limit, "case3")

    if merged not in dec.cycle:
        trace.append("case3:semi(u*)")
        semi = hk_semi(side.graph, dec, merged).vertices
        chosen = on_i(tri.gx, y) | on_i(tri.gy, x) | side.lift(semi)
        return certify(g, k, chosen, limit, "case3:semi(u*)")

    trace.append(f"case3:cycle(p={dec.p})")
    return _first_certified(g, k, limit, "case3:cycle", _case3_cycle_candidates(tri, side, dec))


def _piece_sets(side: _ContractedSide, dec: HkDecomposition, x: int, y: int) -> List[FrozenSet[int]]:
    """
    União alternada das peças de G_z' com u* como âncora de uma peça,
    levantada para G_z. A peça ancorada em u* recebe x ou y no seu lugar,
    as outras recebem o outro extremo.
    """
    merged = side.contraction.merged
    size = len(dec.pieces)
    j = dec.cycle.index(merged)
    variants = [
        ([(j + r) % size for r in range(size)], False),
        ([(j - 1 - r) % size for r in range(size)], True),
    ]
    results = []
    for order, mirror in variants:
        sets = anchored_sets(dec, order, mirror=mirror)
        for e, other in ((x, y), (y, x)):
            chosen = set(side.lift(sets[-1], merged_as=(e,)))
            for part in sets[:-1]:
                chosen |= side.lift(part, merged_as=(other,))
            results.append(frozenset(chosen))
    return results


def _case3_cycle_candidates(tri: _Triangle, side: _ContractedSide, dec: HkDecomposition):
    x, y, z = tri.x, tri.y, tri.z
    pieces = _piece_sets(side, dec, x, y)

    for covered in pieces:
        yield lambda covered=covered: on_i(tri.gx, z) | on_i(tri.gy, z) | covered

    # substituições em G_y (b = x) e depois em G_x (b = y); P_b é o outro lado
    for pa, b, other in ((tri.gy, x, tri.gx), (tri.gx, y, tri.gy)):
        deg_b, deg_z = pa.degree(b), pa.degree(z)
        replacements = []
        if deg_b >= 3 and deg_z >= 3:
            replacements.append(lambda pa=pa, b=b: on_iii(pa, b, z))
        if deg_b == 2 and deg_z >= 4:
            replacements.append(lambda pa=pa, b=b: on_iv(pa.without({b}), z))
        if deg_z == 2 and deg_b >= 4:
            replacements.append(lambda pa=pa, b=b: on_iv(pa.without({z}), b))
        replacements.append(lambda pa=pa, b=b: _gcal_witness(pa, b, z))
        for replace in replacements:
            for covered in pieces:
                yield (lambda replace=replace, other=other, covered=covered:
                       replace() | on_i(other, z) | covered)
