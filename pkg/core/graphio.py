# -*- coding: utf-8 -*-
"""
core/graphio.py
Leitura e escrita do formato de ficheiro de grafos.

Formato: um objeto {"n": <int>, "chords": [[a,b], ...]} por documento.
Um ficheiro pode ter um único documento JSON ou um documento por linha
(JSON lines). A escrita é sempre canónica: uma linha por grafo.
"""
import json
from pathlib import Path
from typing import Any, Iterable, List, Union

from .errors import GraphFormatError, MopError
from .mop import MopGraph, validate


def _graph_from_obj(obj: Any, where: str) -> MopGraph:
    """Converte objeto JSON já lido em MopGraph validado"""
    if not isinstance(obj, dict):
        raise GraphFormatError(f"{where}: esperado objeto, encontrado {type(obj).__name__}")
    missing = [key for key in ("n", "chords") if key not in obj]
    if missing:
        raise GraphFormatError(f"{where}: campos em falta: {', '.join(missing)}")
    if not isinstance(obj["chords"], list):
        raise GraphFormatError(f"{where}: 'chords' tem de ser lista")
    try:
        return validate(obj["n"], obj["chords"])
    except GraphFormatError:
        raise
    except MopError as exc:
        raise GraphFormatError(f"{where}: {type(exc).__name__}: {exc}") from exc


def parse_graphs(text: str, source: str = "<stdin>") -> List[MopGraph]:
    """
    Lê um ou mais grafos de texto.

    Args:
        text: Conteúdo do ficheiro
        source: Nome usado nas mensagens de erro

    Returns:
        Lista de MopGraph (pela ordem do ficheiro)

    Raises:
        GraphFormatError: com posição fonte:linha:coluna
    """
    if not text.strip():
        raise GraphFormatError(f"{source}:1:1: ficheiro vazio")

    try:
        document = json.loads(text)
    except json.JSONDecodeError as whole_error:
        document = None
        lines = [line for line in text.splitlines() if line.strip()]
        if len(lines) <= 1:
            raise GraphFormatError(
                f"{source}:{whole_error.lineno}:{whole_error.colno}: {whole_error.msg}")
    else:
        where = f"{source}:1:1"
        if isinstance(document, list):
            return [_graph_from_obj(obj, f"{where} [{i}]") for i, obj in enumerate(document)]
        return [_graph_from_obj(document, where)]

    # JSON lines
    graphs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"{source}:{lineno}:{exc.colno}: {exc.msg}")
        col = len(line) - len(line.lstrip()) + 1
        graphs.append(_graph_from_obj(obj, f"{source}:{lineno}:{col}"))
    return graphs


def parse_graph(text: str, source: str = "<stdin>") -> MopGraph:
    """Lê exatamente um grafo"""
    graphs = parse_graphs(text, source)
    if len(graphs) != 1:
        raise GraphFormatError(f"{source}: esperado 1 grafo, encontrados {len(graphs)}")
    return graphs[0]


def load_graphs(path: Union[str, Path]) -> List[MopGraph]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphFormatError(f"{path}: não foi possível ler: {exc}") from exc
    return parse_graphs(text, str(path))


def load_graph(path: Union[str, Path]) -> MopGraph:
    path = Path(path)
    graphs = load_graphs(path)
    if len(graphs) != 1:
        raise GraphFormatError(f"{path}: esperado 1 grafo, encontrados {len(graphs)}")
    return graphs[0]


def dump_graphs(graphs: Iterable[MopGraph]) -> str:
    """Serialização canónica: uma linha por grafo, terminada em newline"""
    return "".join(g.to_json() + "\n" for g in graphs)


def dump_graph(graph: MopGraph) -> str:
    return dump_graphs([graph])


def save_graphs(graphs: Iterable[MopGraph], path: Union[str, Path]) -> Path:
    """Escreve grafos em ficheiro (cria diretórios se preciso)"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_graphs(graphs), encoding="utf-8")
    return path
