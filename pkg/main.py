# -*- coding: utf-8 -*-
"""
main.py - MOP Domination Toolkit v1.0
Linha de comandos: geração de famílias, solver exato, construção,
classificação em ℋ_k, tabelas γ_k(n) e experiências de verificação.

Dados vão para stdout (ou --out); mensagens de log vão para stderr.
"""

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import List, Optional

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from config import CACHE_ENABLED, DEFAULT_SEED, DEFAULT_WORKERS, EXCEL_OUTPUT, LOG_LEVEL, SHOW_PROGRESS_BAR
from core.cache import GammaCache
from core.canonical import canonical_id
from core.construct import construct_with_trace
from core.errors import MopError, ParameterOutOfRange
from core.exact import gamma_table, min_kcds
from core.experiments import cmd_gamma_formula, cmd_verify
from core.graphio import dump_graphs, load_graphs, parse_graphs, save_graphs
from core.hkstruct import detect_hk
from core.lemmas import ceil_bound, floor_bound
from families import AVAILABLE_FAMILIES
from families.base import FamilySpec

logger = logging.getLogger("mopdom")

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_ERROR = 2


def parse_orders(text: str) -> List[int]:
    """'5-13', '12' ou '5,7,9'"""
    orders = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part:
            lo, hi = part.split("-", 1)
            orders.extend(range(int(lo), int(hi) + 1))
        elif part:
            orders.append(int(part))
    if not orders:
        raise argparse.ArgumentTypeError(f"lista de ordens vazia: {text!r}")
    return orders


def parse_args(argv: Optional[List[str]] = None):
    """Parse argumentos da linha de comando"""

    parser = argparse.ArgumentParser(
        prog="mopdom",
        description="Conjuntos k-componente dominantes em grafos maximais outerplanares",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Exemplos de uso:
  py main.py gen --family strip --m 3             # Faixa de ordem 9
  py main.py gen --family random --n 40 --count 5 # 5 MOPs aleatórios
  py main.py solve --k 2 h1.jsonl                 # γ_2 exato
  py main.py construct --k 2 grafo.jsonl          # Conjunto construído + casos
  py main.py classify --k 2 3 h1.jsonl            # Pertença a ℋ_2, ℋ_3
  py main.py table --k 2 --n 5-12                 # Tabela γ_2(n)
  py main.py verify --k 2 --n 12                  # Verificação exaustiva
  py main.py gamma-formula --k 2 --n 5-14         # Fórmula fechada
        """
    )
    parser.add_argument("--log-level", default=LOG_LEVEL,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        help=f"Nível de log (padrão: {LOG_LEVEL})")
    parser.add_argument("--no-progress", action="store_true",
                        help="Esconder barras de progresso")

    sub = parser.add_subparsers(dest="command", required=True)

    def add_out(p, formats=None):
        p.add_argument("--out", type=Path, metavar="FICHEIRO", help="Ficheiro de saída (padrão: stdout)")
        if formats:
            p.add_argument("--format", choices=formats, default=formats[0],
                           help=f"Formato de saída (padrão: {formats[0]})")

    def add_cache(p):
        group = p.add_mutually_exclusive_group()
        group.add_argument("--nocache", action="store_true",
                           help="Ignorar cache completamente")
        group.add_argument("--refresh", action="store_true",
                           help="Limpar cache e recalcular tudo")

    gen = sub.add_parser("gen", help="Gerar grafos de uma família")
    gen.add_argument("--family", required=True, choices=list(AVAILABLE_FAMILIES.keys()))
    for name in ("n", "k", "m", "s", "t"):
        gen.add_argument(f"--{name}", type=int)
    gen.add_argument("--seed", type=int, default=DEFAULT_SEED)
    gen.add_argument("--count", type=int, default=1, metavar="N",
                     help="Número de grafos (família random)")
    add_out(gen)

    solve = sub.add_parser("solve", help="γ_k exato e um conjunto mínimo")
    solve.add_argument("graphs", type=Path)
    solve.add_argument("--k", type=int, required=True)
    solve.add_argument("--guard-override", action="store_true",
                       help="Ignorar o limite de ordem do solver")
    add_out(solve)

    construct = sub.add_parser("construct", help="Conjunto construído dentro do limite")
    construct.add_argument("graphs", type=Path)
    construct.add_argument("--k", type=int, required=True)
    add_out(construct)

    classify = sub.add_parser("classify", help="Pertença a ℋ_k")
    classify.add_argument("graphs", type=Path)
    classify.add_argument("--k", type=int, nargs="+", required=True)
    add_out(classify)

    table = sub.add_parser("table", help="Tabela γ_k(n) por enumeração")
    table.add_argument("--k", type=int, required=True)
    table.add_argument("--n", type=parse_orders, required=True, metavar="ORDENS")
    table.add_argument("--workers", type=int, default=DEFAULT_WORKERS)
    table.add_argument("--guard-override", action="store_true")
    add_out(table, ["csv", "json"])
    add_cache(table)

    verify = sub.add_parser("verify", help="Verificação exaustiva da dicotomia")
    verify.add_argument("--k", type=int, required=True, help="k máximo")
    verify.add_argument("--n", type=int, required=True, help="n máximo")
    verify.add_argument("--workers", type=int, default=DEFAULT_WORKERS)
    add_out(verify, ["csv", "json", "xlsx"])
    add_cache(verify)

    formula = sub.add_parser("gamma-formula", help="γ_k(n) contra a fórmula fechada")
    formula.add_argument("--k", type=int, required=True)
    formula.add_argument("--n", type=parse_orders, required=True, metavar="ORDENS")
    formula.add_argument("--guard-override", action="store_true")
    add_out(formula, ["csv", "json", "xlsx"])
    add_cache(formula)

    return parser.parse_args(argv)


# ============================================================================
# SAÍDA
# ============================================================================

def emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    logger.info(f"✅ Gravado: {out}")


def emit_json_lines(records, out: Optional[Path]) -> None:
    emit("".join(json.dumps(record, ensure_ascii=False) + "\n" for record in records), out)


def read_graphs(path: Path):
    if str(path) == "-":
        return parse_graphs(sys.stdin.read(), "<stdin>")
    return load_graphs(path)


def use_cache_for(args) -> bool:
    return CACHE_ENABLED and not args.nocache


def clear_caches(args, ks) -> None:
    if args.refresh:
        for k in ks:
            cache = GammaCache(k)
            cache.clear()
            cache.save()
            logger.info(f"[CACHE] cache de k={k} limpo")


# ============================================================================
# SUBCOMANDOS
# ============================================================================

def run_gen(args) -> int:
    builder = AVAILABLE_FAMILIES[args.family]()
    spec = FamilySpec(family=args.family, n=args.n, k=args.k, m=args.m, s=args.s, t=args.t,
                      seed=args.seed, count=args.count)
    graphs = list(builder.generate(spec))
    if args.out is not None:
        save_graphs(graphs, args.out)
        logger.info(f"✅ {len(graphs)} grafos gravados em {args.out}")
    else:
        sys.stdout.write(dump_graphs(graphs))
    return EXIT_OK


def run_solve(args) -> int:
    records = []
    for graph in read_graphs(args.graphs):
        found = min_kcds(graph, args.k, guard_override=args.guard_override)
        if found is None:
            raise ParameterOutOfRange(f"k={args.k} maior que n={graph.n}")
        records.append({"graph_id": canonical_id(graph), "n": graph.n, "k": args.k,
                        "gamma": found.size, "set": found.sorted()})
        logger.info(f"[EXACT] {canonical_id(graph)}: γ_{args.k} = {found.size}")
    emit_json_lines(records, args.out)
    return EXIT_OK


def run_construct(args) -> int:
    records = []
    for graph in read_graphs(args.graphs):
        chosen, trace = construct_with_trace(graph, args.k)
        dec = detect_hk(graph, args.k)
        bound = ceil_bound(args.k, graph.n) if dec is not None else floor_bound(args.k, graph.n)
        records.append({"graph_id": canonical_id(graph), "n": graph.n, "k": args.k,
                        "size": chosen.size, "bound": bound, "in_hk": dec is not None,
                        "set": chosen.sorted(), "trace": trace})
    emit_json_lines(records, args.out)
    return EXIT_OK


def run_classify(args) -> int:
    records = []
    for graph in read_graphs(args.graphs):
        for k in args.k:
            dec = detect_hk(graph, k)
            record = {"graph_id": canonical_id(graph), "n": graph.n, "k": k}
            record.update(dec.to_dict() if dec is not None else {"in_hk": False})
            records.append(record)
    emit_json_lines(records, args.out)
    return EXIT_OK


def run_table(args) -> int:
    clear_caches(args, [args.k])
    cache = GammaCache(args.k) if use_cache_for(args) else None
    table = gamma_table(args.k, args.n, workers=args.workers, cache=cache,
                        progress=not args.no_progress, guard_override=args.guard_override)
    if cache is not None:
        stats = cache.get_stats()
        logger.info(f"[CACHE] k={stats['k']}: {stats['total_entries']} entradas, "
                    f"{stats['hits']} hits, {stats['misses']} misses")

    rows = []
    for entry in table.sorted_entries():
        files = ""
        if args.out is not None:
            target = args.out.with_name(f"{args.out.stem}_k{entry.k}_n{entry.n}.jsonl")
            save_graphs(entry.extremal, target)
            files = target.name
        rows.append(entry.to_row(files))

    if args.format == "json":
        emit(json.dumps(rows, ensure_ascii=False, indent=2) + "\n", args.out)
    else:
        import pandas as pd
        frame = pd.DataFrame(rows, columns=["k", "n", "gamma", "extremal_count", "extremal_files"])
        emit(frame.to_csv(index=False, lineterminator="\n"), args.out)

    problems = table.monotonicity_violations()
    for problem in problems:
        logger.error(f"[ERRO] monotonia: {problem}")
    return EXIT_VIOLATION if problems else EXIT_OK


def write_report(report, args) -> int:
    if args.format == "xlsx":
        target = args.out or EXCEL_OUTPUT
        report.save(target, "xlsx")
        logger.info(f"✅ Excel gerado: {target}")
    elif args.format == "json":
        emit(report.to_json(), args.out)
    else:
        emit(report.to_csv(), args.out)

    for violation in report.violations:
        logger.error(f"[ERRO] {violation}")
    summary = report.summary()
    logger.info(f"📊 {summary['rows']} linhas, {summary['exceptional']} excecionais, "
                f"{summary['violations']} violações ({report.wall_time:.1f}s)")
    return EXIT_OK if report.ok else EXIT_VIOLATION


def run_verify(args) -> int:
    clear_caches(args, range(1, args.k + 1))
    report = cmd_verify(args.k, args.n, workers=args.workers, use_cache=use_cache_for(args),
                        progress=not args.no_progress)
    return write_report(report, args)


def run_gamma_formula(args) -> int:
    clear_caches(args, [args.k])
    report = cmd_gamma_formula(args.k, args.n, use_cache=use_cache_for(args),
                               progress=not args.no_progress, guard_override=args.guard_override)
    return write_report(report, args)


COMMANDS = {
    "gen": run_gen,
    "solve": run_solve,
    "construct": run_construct,
    "classify": run_classify,
    "table": run_table,
    "verify": run_verify,
    "gamma-formula": run_gamma_formula,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Função principal"""

    args = parse_args(argv)
    logging.basicConfig(stream=sys.stderr, level=getattr(logging, args.log_level),
                        format="%(message)s")
    if not SHOW_PROGRESS_BAR:
        args.no_progress = True

    try:
        return COMMANDS[args.command](args)
    except MopError as e:
        logger.error(f"[ERRO] {type(e).__name__}: {e}")
        return EXIT_ERROR
    except OSError as e:
        logger.error(f"[ERRO] {e}")
        return EXIT_ERROR


if __name__ == "__main__":
    try:
        exit_code = main()
        sys.exit(exit_code)
    except KeyboardInterrupt:
        print("\n\n⚠️  Interrompido pelo utilizador (Ctrl+C)", file=sys.stderr)
        sys.exit(130)
