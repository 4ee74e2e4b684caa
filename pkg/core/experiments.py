# -*- coding: utf-8 -*-
"""
core/experiments.py
Experiências reprodutíveis: verificação exaustiva da dicotomia e da
fórmula fechada de γ_k(n), com relatórios em CSV, JSON ou XLSX.
"""
import io
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Union

import pandas as pd
from tqdm import tqdm

from config import ENUM_MAX_N, EXACT_GUARD, GCAL_MAX_ELL
from .cache import GammaCache
from .canonical import canonical_id, canonical_key
from .construct import theorem1_construct
from .errors import OrderTooSmall, ParameterOutOfRange, TooLarge
from .exact import gamma_k_exact, gamma_table
from .hkstruct import build_hk, detect_hk, enum_gcal
from .lemmas import ceil_bound, floor_bound
from .mop import MopGraph

logger = logging.getLogger(__name__)

REPORT_COLUMNS = ["graph_id", "n", "k", "exact", "constructed", "bound", "in_hk", "note"]


# ============================================================================
# FÓRMULA FECHADA E TESTEMUNHAS
# ============================================================================

def gamma_formula(k: int, n: int) -> int:
    """
    γ_k(n): ⌈kn/(2k+1)⌉ se n é par e algum p em [1, k-1] tem
    4kp+2p+2 <= n <= 2k(2p+1) (ordens de ℋ_k^p); ⌊kn/(2k+1)⌋ caso contrário.

    A união destes intervalos tem buracos: o intervalo contínuo
    [4k+4, 4k²-2k] contém ordens sem membros de ℋ_k (k=3, n=20).
    """
    if k < 1:
        raise ParameterOutOfRange(f"k={k} (mínimo 1)")
    if n < 2 * k + 1:
        raise OrderTooSmall(f"n={n} < 2k+1={2 * k + 1}")
    if n % 2 == 0 and any(4 * k * p + 2 * p + 2 <= n <= 2 * k * (2 * p + 1) for p in range(1, k)):
        return ceil_bound(k, n)
    return floor_bound(k, n)


def _piece_sizes(k: int, n: int) -> Optional[List[int]]:
    """2p+1 tamanhos pares em [4, 2k] com soma n, p mínimo"""
    for p in range(1, k):
        count = 2 * p + 1
        if not 4 * k * p + 2 * p + 2 <= n <= 2 * k * count:
            continue
        sizes = [2 * k] * count
        deficit = 2 * k * count - n
        i = 0
        while deficit > 0:
            cut = min(deficit, sizes[i] - 4)
            sizes[i] -= cut
            deficit -= cut
            i += 1
        return sorted(sizes, reverse=True)
    return None


def exceptional_witness(k: int, n: int) -> MopGraph:
    """
    Membro de ℋ_k de ordem n, colado a partir do primeiro membro de cada
    𝒢_ℓ e de um leque no ciclo interior.

    Raises:
        ParameterOutOfRange: n não é ordem de ℋ_k
        TooLarge: peças acima de GCAL_MAX_ELL
    """
    sizes = _piece_sizes(k, n) if n % 2 == 0 else None
    if sizes is None:
        raise ParameterOutOfRange(f"n={n} não é ordem de ℋ_{k}")
    if max(sizes) > GCAL_MAX_ELL:
        raise TooLarge(f"peças de ℓ={max(sizes)} acima de {GCAL_MAX_ELL}")
    pieces = [enum_gcal(ell)[0] for ell in sizes]
    graph, _ = build_hk(k, pieces)
    return graph


def extremal_witness(k: int, n: int) -> MopGraph:
    """
    MOP de ordem n com γ_k = ⌊kn/(2k+1)⌋: faixas na gama 2k+1..4k+3,
    braços colados (n mod (2k+1) = 0, ímpar, par) acima dela.
    """
    from families.extremal import fig5_graph, fig6_graph, fig6_graph_even
    from families.strips import fan, strip, strip_minus

    if k < 1:
        raise ParameterOutOfRange(f"k={k} (mínimo 1)")
    if n < 2 * k + 1:
        raise OrderTooSmall(f"n={n} < 2k+1={2 * k + 1}")
    if n <= 4 * k + 3:
        m = (n - 3) // 2 if n % 2 else (n - 2) // 2
        if m < 1:
            return fan(n)
        return strip(m) if n % 2 else strip_minus(m)

    s, r = divmod(n, 2 * k + 1)
    if r == 0:
        return fig5_graph(k, s)
    if r % 2 == 1:
        return fig6_graph(k, s, (r + 1) // 2)
    return fig6_graph_even(k, s, r // 2)


# ============================================================================
# RELATÓRIO
# ============================================================================

@dataclass
class ReportRow:
    """Uma linha: grafo (ou ordem), γ_k exato, tamanho construído, limite"""
    graph_id: str
    n: int
    k: int
    exact: int
    constructed: int
    bound: int
    in_hk: bool
    note: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def problems(self) -> List[str]:
        where = f"{self.graph_id} (k={self.k})"
        found = []
        if self.exact > self.constructed:
            found.append(f"{where}: exato {self.exact} > construído {self.constructed}")
        if self.constructed > self.bound:
            found.append(f"{where}: construído {self.constructed} > limite {self.bound}")
        if self.exact > self.bound:
            found.append(f"{where}: exato {self.exact} > limite {self.bound}")
        return found


@dataclass
class Report:
    """Resultado de uma experiência"""
    experiment: str
    params: Dict[str, Any]
    rows: List[ReportRow] = field(default_factory=list)
    violations: List[str] = field(default_factory=list)
    wall_time: float = 0.0  # não serializado

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, row: ReportRow) -> None:
        self.rows.append(row)
        self.violations.extend(row.problems())

    def summary(self) -> Dict[str, Any]:
        return {
            "rows": len(self.rows),
            "exceptional": sum(1 for row in self.rows if row.in_hk),
            "violations": len(self.violations),
        }

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame([row.to_dict() for row in self.rows], columns=REPORT_COLUMNS)

    def to_csv(self) -> str:
        buffer = io.StringIO()
        self.to_dataframe().to_csv(buffer, index=False, lineterminator="\n")
        return buffer.getvalue()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "experiment": self.experiment,
            "params": self.params,
            "summary": self.summary(),
            "violations": self.violations,
            "rows": [row.to_dict() for row in self.rows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2) + "\n"

    def save(self, path: Union[str, Path], fmt: str = "csv") -> Path:
        """Grava em csv, json ou xlsx"""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        if fmt == "csv":
            path.write_text(self.to_csv(), encoding="utf-8")
        elif fmt == "json":
            path.write_text(self.to_json(), encoding="utf-8")
        elif fmt == "xlsx":
            from .excel import ReportWorkbook
            workbook = ReportWorkbook(self)
            workbook.build()
            workbook.save(path)
        else:
            raise ParameterOutOfRange(f"formato desconhecido: {fmt!r}")
        return path


# ============================================================================
# VERIFICAÇÃO EXAUSTIVA
# ============================================================================

def _verify_job(args) -> ReportRow:
    graph, k, exact = args
    if exact is None:
        exact = gamma_k_exact(graph, k)
    dec = detect_hk(graph, k)
    bound = ceil_bound(k, graph.n) if dec is not None else floor_bound(k, graph.n)
    constructed = theorem1_construct(graph, k).size
    note = f"p={dec.p}" if dec is not None else ""
    return ReportRow(canonical_id(graph), graph.n, k, exact, constructed, bound, dec is not None, note)


def _map(jobs: Sequence, func, workers: int, desc: str, progress: bool) -> List:
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(tqdm(pool.map(func, jobs, chunksize=16), total=len(jobs),
                             desc=desc, disable=not progress))
    return [func(job) for job in tqdm(jobs, desc=desc, disable=not progress)]


def cmd_verify(k_max: int, n_max: int, workers: int = 1, use_cache: bool = True,
               progress: bool = False, cache_dir: Optional[Path] = None) -> Report:
    """
    Para cada k <= k_max e cada classe de MOPs com 2k+1 <= n <= n_max:
    γ_k exato, construção e deteção de ℋ_k. Verifica
    exato <= construído <= limite da dicotomia, e exato = ⌈kn/(2k+1)⌉ em ℋ_k.

    Raises:
        TooLarge: n_max acima de ENUM_MAX_N
    """
    from families.population import enum_mops

    if n_max > ENUM_MAX_N:
        raise TooLarge(f"n_max={n_max} acima de ENUM_MAX_N={ENUM_MAX_N}")
    start = time.perf_counter()
    report = Report("verify", {"k_max": k_max, "n_max": n_max})

    for k in range(1, k_max + 1):
        cache = GammaCache(k, cache_dir) if use_cache else None
        for n in range(2 * k + 1, n_max + 1):
            graphs = list(enum_mops(n, dedup=True))
            jobs = [(g, k, cache.get(canonical_key(g)) if cache else None) for g in graphs]
            rows = _map(jobs, _verify_job, workers, f"verify k={k} n={n}", progress)
            for graph, row in zip(graphs, rows):
                if cache is not None:
                    cache.put(canonical_key(graph), row.exact)
                if row.in_hk and row.exact != row.bound:
                    report.violations.append(f"{row.graph_id}: membro de ℋ_{k} com γ_k={row.exact} != {row.bound}")
                report.add(row)
            logger.info(f"[VERIFY] k={k} n={n}: {len(graphs)} classes, "
                        f"{sum(1 for row in rows if row.in_hk)} excecionais")
        if cache is not None:
            cache.save()

    report.wall_time = time.perf_counter() - start
    logger.info(f"[VERIFY] {len(report.rows)} linhas, {len(report.violations)} violações "
                f"em {report.wall_time:.1f}s")
    return report


# ============================================================================
# FÓRMULA FECHADA
# ============================================================================

def _formula_row(k: int, n: int, use_cache: bool, progress: bool,
                 guard_override: bool, cache_dir: Optional[Path]) -> ReportRow:
    expected = gamma_formula(k, n)

    if n <= ENUM_MAX_N:
        cache = GammaCache(k, cache_dir) if use_cache else None
        table = gamma_table(k, [n], cache=cache, progress=progress)
        entry = table.entries[(k, n)]
        witness = entry.extremal[0]
        return ReportRow(f"n{n}-todos", n, k, entry.gamma, theorem1_construct(witness, k).size,
                         expected, detect_hk(witness, k) is not None,
                         f"enumeração ({entry.graphs_checked} classes)")

    if n > EXACT_GUARD and not guard_override:
        raise TooLarge(f"n={n}: acima de ENUM_MAX_N e de EXACT_GUARD ({EXACT_GUARD})")
    exceptional = expected != floor_bound(k, n)
    witness = exceptional_witness(k, n) if exceptional else extremal_witness(k, n)
    lower = gamma_k_exact(witness, k, guard_override=guard_override)
    constructed = theorem1_construct(witness, k).size
    return ReportRow(canonical_id(witness), n, k, lower, constructed, expected, exceptional,
                     "testemunha + construção")


def cmd_gamma_formula(k: int, n_list: Iterable[int], use_cache: bool = True, progress: bool = False,
                      guard_override: bool = False, cache_dir: Optional[Path] = None) -> Report:
    """
    Compara γ_k(n) com a fórmula fechada. Enumeração exaustiva quando
    n <= ENUM_MAX_N; acima disso a testemunha da família dá o limite
    inferior e o limite da dicotomia (com a construção verificada) o superior.
    """
    start = time.perf_counter()
    n_list = list(n_list)
    report = Report("gamma-formula", {"k": k, "n": n_list})
    for n in n_list:
        row = _formula_row(k, n, use_cache, progress, guard_override, cache_dir)
        if row.exact != row.bound:
            report.violations.append(f"γ_{k}({n}) = {row.exact}, fórmula {row.bound}")
        report.add(row)
        logger.info(f"[FORMULA] γ_{k}({n}) = {row.exact} (fórmula {row.bound}, {row.note})")
    report.wall_time = time.perf_counter() - start
    return report
