# -*- coding: utf-8 -*-
"""
core/exact.py
Solver exato de conjuntos k-componente dominantes (com restrições).

Pesquisa por cardinalidade crescente; dentro de cada cardinalidade, DFS
pelos vértices em ordem de rótulo. O primeiro conjunto encontrado é o
lexicograficamente menor, por isso o resultado é determinístico.

Tudo trabalha sobre bitmasks: o bit v representa o vértice v.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from tqdm import tqdm

from config import EXACT_GUARD, ENUM_MAX_N
from .canonical import canonical_key
from .errors import ParameterOutOfRange, TooLarge
from .mop import MopGraph

logger = logging.getLogger(__name__)


# ============================================================================
# TIPOS
# ============================================================================

@dataclass(frozen=True)
class DomSet:
    """Conjunto de vértices apresentado como conjunto k-componente dominante"""
    vertices: FrozenSet[int]
    k: int

    @property
    def size(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def sorted(self) -> List[int]:
        return sorted(self.vertices)

    def to_dict(self):
        return {"k": self.k, "size": self.size, "vertices": self.sorted()}


@dataclass(frozen=True)
class Constraints:
    """
    Restrições adicionais para min_kcds.

    must_intersect: pares dos quais pelo menos um extremo tem de estar em D.
    """
    must_contain: FrozenSet[int] = frozenset()
    must_intersect: Tuple[Tuple[int, int], ...] = ()
    forbidden: FrozenSet[int] = frozenset()
    max_size: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "must_contain", frozenset(self.must_contain))
        object.__setattr__(self, "forbidden", frozenset(self.forbidden))
        object.__setattr__(self, "must_intersect", tuple(tuple(p) for p in self.must_intersect))
        clash = self.must_contain & self.forbidden
        if clash:
            raise ParameterOutOfRange(f"vértices obrigatórios e proibidos: {sorted(clash)}")

    def accepts(self, vertices: Iterable[int]) -> bool:
        """Verifica as restrições (sem a condição de dominação)"""
        chosen = set(vertices)
        if self.max_size is not None and len(chosen) > self.max_size:
            return False
        if not self.must_contain <= chosen or chosen & self.forbidden:
            return False
        return all(a in chosen or b in chosen for a, b in self.must_intersect)


NO_CONSTRAINTS = Constraints()


# ============================================================================
# VERIFICAÇÃO
# ============================================================================

def _to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _components(mask: int, closed: Sequence[int]) -> List[int]:
    """Componentes de G[mask], cada uma como bitmask"""
    comps = []
    rest = mask
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            grow = 0
            while frontier:
                bit = frontier & -frontier
                grow |= closed[bit.bit_length() - 1]
                frontier ^= bit
            grow &= mask
            frontier = grow & ~comp
            comp |= grow
        comps.append(comp)
        rest &= ~comp
    return comps


def component_sizes(graph: MopGraph, vertices: Iterable[int]) -> List[int]:
    """Ordens das componentes de G[vertices], por ordem crescente"""
    return sorted(c.bit_count() for c in _components(_to_mask(vertices), graph.closed_masks))


def is_kcds(graph: MopGraph, k: int, vertices: Iterable[int]) -> bool:
    """
    True sse vertices domina G e cada componente de G[vertices] tem ordem >= k.

    Examples:
        >>> is_kcds(MopGraph(3, ()), 1, {0})
        True
    """
    chosen = set(vertices)
    if any(v < 0 or v >= graph.n for v in chosen):
        raise ValueError(f"vértices fora de 0..{graph.n - 1}: {sorted(chosen)}")

    mask = _to_mask(chosen)
    dominated = 0
    for v in chosen:
        dominated |= graph.closed_masks[v]
    if dominated != (1 << graph.n) - 1:
        return False
    if k <= 1:
        return True
    return all(c.bit_count() >= k for c in _components(mask, graph.closed_masks))


# ============================================================================
# SOLVER
# ============================================================================

class _Search:
    """Estado da pesquisa para um grafo e um conjunto de restrições"""

    def __init__(self, graph: MopGraph, k: int, constraints: Constraints):
        self.n = graph.n
        self.k = k
        self.closed = graph.closed_masks
        self.full = (1 << self.n) - 1
        self.reach = max(m.bit_count() for m in self.closed)
        self.top = [m.bit_length() - 1 for m in self.closed]
        self.forbidden = _to_mask(constraints.forbidden)
        self.must = sorted(constraints.must_contain)
        self.must_mask = _to_mask(self.must)
        self.pairs = constraints.must_intersect
        self.nodes = 0

    def run(self, t: int) -> Optional[List[int]]:
        self.t = t
        self.chosen: List[int] = []
        return self._dfs(0, 0, 0)

    def _dead(self, next_v: int, chosen_mask: int) -> bool:
        # pares já ultrapassados sem extremo escolhido
        for a, b in self.pairs:
            if a < next_v and b < next_v and not (chosen_mask >> a) & 1 and not (chosen_mask >> b) & 1:
                return True
        if self.k >= 2 and chosen_mask:
            for comp in _components(chosen_mask, self.closed):
                if comp.bit_count() >= self.k:
                    continue
                nbrs = 0
                c = comp
                while c:
                    bit = c & -c
                    nbrs |= self.closed[bit.bit_length() - 1]
                    c ^= bit
                # componente pequena que já não pode crescer
                if (nbrs & ~comp) >> next_v == 0:
                    return True
        return False

    def _leaf_ok(self, chosen_mask: int, dominated: int) -> bool:
        if dominated != self.full:
            return False
        if chosen_mask & self.must_mask != self.must_mask:
            return False
        for a, b in self.pairs:
            if not (chosen_mask >> a) & 1 and not (chosen_mask >> b) & 1:
                return False
        if self.k >= 2:
            return all(c.bit_count() >= self.k for c in _components(chosen_mask, self.closed))
        return True

    def _dfs(self, next_v: int, chosen_mask: int, dominated: int) -> Optional[List[int]]:
        self.nodes += 1
        need = self.t - len(self.chosen)
        if need == 0:
            return list(self.chosen) if self._leaf_ok(chosen_mask, dominated) else None

        undominated = self.full & ~dominated
        if undominated.bit_count() > need * self.reach:
            return None
        if self._dead(next_v, chosen_mask):
            return None

        upper = self.n - need
        if undominated:
            lowest = (undominated & -undominated).bit_length() - 1
            upper = min(upper, self.top[lowest])
        pending = self.must_mask & ~chosen_mask
        if pending:
            first_must = (pending & -pending).bit_length() - 1
            if first_must < next_v:
                return None
            upper = min(upper, first_must)

        for c in range(next_v, upper + 1):
            if (self.forbidden >> c) & 1:
                continue
            self.chosen.append(c)
            found = self._dfs(c + 1, chosen_mask | (1 << c), dominated | self.closed[c])
            self.chosen.pop()
            if found is not None:
                return found
        return None


def _check_guard(graph: MopGraph, guard_override: bool) -> None:
    if graph.n > EXACT_GUARD and not guard_override:
        raise TooLarge(f"n={graph.n} acima do limite do solver ({EXACT_GUARD}); usar --guard-override")


def _size_range(graph: MopGraph, k: int, constraints: Constraints) -> Tuple[int, int]:
    lo = max(len(constraints.must_contain), k if k >= 1 else 1)
    hi = graph.n if constraints.max_size is None else min(graph.n, constraints.max_size)
    return lo, hi


def _check_vertices(graph: MopGraph, constraints: Constraints) -> None:
    mentioned = set(constraints.must_contain) | set(constraints.forbidden)
    for a, b in constraints.must_intersect:
        mentioned.update((a, b))
    bad = [v for v in mentioned if not 0 <= v < graph.n]
    if bad:
        raise ParameterOutOfRange(f"vértices fora de 0..{graph.n - 1}: {sorted(bad)}")


def min_kcds(graph: MopGraph, k: int, constraints: Optional[Constraints] = None,
             guard_override: bool = False) -> Optional[DomSet]:
    """
    Conjunto k-componente dominante mínimo que cumpre as restrições.

    Args:
        graph: MOP
        k: Ordem mínima das componentes (k = 0 é dominação simples)
        constraints: Restrições opcionais
        guard_override: Ignorar o limite EXACT_GUARD

    Returns:
        DomSet lexicograficamente menor entre os de tamanho mínimo,
        ou None se nenhum conjunto cumpre as restrições

    Raises:
        TooLarge: n acima do limite
    """
    if k < 0:
        raise ParameterOutOfRange(f"k={k} negativo")
    constraints = constraints or NO_CONSTRAINTS
    _check_guard(graph, guard_override)
    _check_vertices(graph, constraints)

    lo, hi = _size_range(graph, k, constraints)
    search = _Search(graph, k, constraints)
    for t in range(lo, hi + 1):
        found = search.run(t)
        if found is not None:
            logger.debug(f"[EXACT] n={graph.n} k={k}: tamanho {t} ({search.nodes} nós)")
            return DomSet(frozenset(found), k)
    logger.debug(f"[EXACT] n={graph.n} k={k}: sem solução até {hi} ({search.nodes} nós)")
    return None


def naive_min_kcds(graph: MopGraph, k: int,
                   constraints: Optional[Constraints] = None) -> Optional[DomSet]:
    """Oráculo: enumera todos os subconjuntos por tamanho e ordem lexicográfica"""
    constraints = constraints or NO_CONSTRAINTS
    hi = graph.n if constraints.max_size is None else min(graph.n, constraints.max_size)
    for t in range(0, hi + 1):
        for combo in combinations(range(graph.n), t):
            if constraints.accepts(combo) and is_kcds(graph, k, combo):
                return DomSet(frozenset(combo), k)
    return None


def gamma_k_exact(graph: MopGraph, k: int, guard_override: bool = False) -> int:
    """γ_k(G)"""
    result = min_kcds(graph, k, guard_override=guard_override)
    if result is None:
        raise ParameterOutOfRange(f"k={k} maior que n={graph.n}: não existe conjunto")
    return result.size


# ============================================================================
# TABELA γ_k(n)
# ============================================================================

@dataclass
class GammaEntry:
    """γ_k(n) e os grafos (canónicos) que o atingem"""
    k: int
    n: int
    gamma: int
    extremal: List[MopGraph] = field(default_factory=list)
    graphs_checked: int = 0

    @property
    def extremal_count(self) -> int:
        return len(self.extremal)

    def to_row(self, extremal_files: str = "") -> Dict[str, object]:
        return {
            "k": self.k,
            "n": self.n,
            "gamma": self.gamma,
            "extremal_count": self.extremal_count,
            "extremal_files": extremal_files,
        }


@dataclass
class GammaTable:
    """Mapa (k, n) -> γ_k(n)"""
    entries: Dict[Tuple[int, int], GammaEntry] = field(default_factory=dict)

    def __getitem__(self, key: Tuple[int, int]) -> int:
        return self.entries[key].gamma

    def __contains__(self, key: Tuple[int, int]) -> bool:
        return key in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def add(self, entry: GammaEntry) -> None:
        self.entries[(entry.k, entry.n)] = entry

    def merge(self, other: 'GammaTable') -> None:
        self.entries.update(other.entries)

    def sorted_entries(self) -> List[GammaEntry]:
        return [self.entries[key] for key in sorted(self.entries)]

    def monotonicity_violations(self) -> List[str]:
        """Pares de entradas que violam γ_k(n) <= γ_k(n+1) ou γ_k(n) <= γ_{k+1}(n)"""
        problems = []
        for (k, n), entry in sorted(self.entries.items()):
            for other_key in ((k, n + 1), (k + 1, n)):
                other = self.entries.get(other_key)
                if other is not None and other.gamma < entry.gamma:
                    problems.append(
                        f"γ_{k}({n})={entry.gamma} > γ_{other.k}({other.n})={other.gamma}")
        return problems


def _gamma_job(args: Tuple[MopGraph, int]) -> int:
    graph, k = args
    return gamma_k_exact(graph, k)


def gamma_table(k: int, n_range: Iterable[int], workers: int = 1, cache=None,
                progress: bool = False, guard_override: bool = False) -> GammaTable:
    """
    γ_k(n) exato por enumeração de todos os MOPs (a menos de isomorfismo).

    Args:
        k: Ordem mínima das componentes
        n_range: Ordens a calcular (entradas com n < max(3, k) são ignoradas)
        workers: >1 usa ProcessPoolExecutor
        cache: GammaCache opcional (mesmo k)
        progress: Mostrar barra tqdm

    Raises:
        TooLarge: n acima de ENUM_MAX_N (sem guard_override)
    """
    from families.population import enum_mops

    table = GammaTable()
    if cache is not None:
        removed = cache.remove_stale()
        if removed:
            logger.info(f"[CACHE] k={k}: {removed} entradas de outra versão do solver removidas")

    for n in n_range:
        if n < max(3, k):
            continue
        if n > ENUM_MAX_N and not guard_override:
            raise TooLarge(f"enumeração de n={n} acima de ENUM_MAX_N={ENUM_MAX_N}")

        graphs = list(enum_mops(n, dedup=True))
        gammas: List[Optional[int]] = [None] * len(graphs)
        todo = []
        for i, g in enumerate(graphs):
            cached = cache.get(canonical_key(g)) if cache is not None else None
            if cached is None:
                todo.append(i)
            else:
                gammas[i] = cached

        jobs = [(graphs[i], k) for i in todo]
        desc = f"γ_{k}(n={n})"
        if workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(tqdm(pool.map(_gamma_job, jobs, chunksize=32),
                                    total=len(jobs), desc=desc, disable=not progress))
        else:
            results = [_gamma_job(job) for job in tqdm(jobs, desc=desc, disable=not progress)]

        for i, value in zip(todo, results):
            gammas[i] = value
            if cache is not None:
                cache.put(canonical_key(graphs[i]), value)

        best = max(gammas)
        extremal = [g for g, value in zip(graphs, gammas) if value == best]
        table.add(GammaEntry(k=k, n=n, gamma=best, extremal=extremal, graphs_checked=len(graphs)))
        logger.info(f"[EXACT] γ_{k}({n}) = {best} ({len(extremal)} extremais em {len(graphs)} classes)")

    if cache is not None:
        cache.save()
    return table
