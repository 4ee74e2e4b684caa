# -*- coding: utf-8 -*-
"""
families/base.py
Classe base abstrata para todos os geradores de famílias de MOPs.

Cada família herda FamilyBuilder e implementa apenas:
- build() - como construir o grafo a partir dos parâmetros
- order() - ordem esperada (verificada depois de construir)
"""
import logging
from abc import ABC, abstractmethod
from dataclasses import asdict, dataclass
from typing import Dict, Iterator, Optional, Tuple

from core.errors import InternalInvariantViolation, ParameterOutOfRange
from core.mop import MopGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FamilySpec:
    """Família + parâmetros (os não usados ficam a None)"""
    family: str
    n: Optional[int] = None
    k: Optional[int] = None
    m: Optional[int] = None
    s: Optional[int] = None
    t: Optional[int] = None
    seed: Optional[int] = None
    count: int = 1

    def to_dict(self) -> Dict:
        """Só os parâmetros definidos"""
        return {key: value for key, value in asdict(self).items() if value is not None}

    def label(self) -> str:
        params = [f"{key}{value}" for key, value in self.to_dict().items()
                  if key not in ("family", "count")]
        return "_".join([self.family] + params)


class FamilyBuilder(ABC):
    """
    Classe base para geradores de famílias.

    Providencia:
    - Verificação de parâmetros obrigatórios
    - Verificação da ordem do grafo gerado
    - Estatísticas
    """

    name: str = ""
    required: Tuple[str, ...] = ()

    def __init__(self):
        self.stats = {"built": 0}

    @abstractmethod
    def build(self, spec: FamilySpec) -> MopGraph:
        """Constrói um grafo (IMPLEMENTAR em cada família)"""
        raise NotImplementedError("Cada família deve implementar build()")

    @abstractmethod
    def order(self, spec: FamilySpec) -> int:
        """Ordem do grafo gerado"""
        raise NotImplementedError("Cada família deve implementar order()")

    def check(self, spec: FamilySpec) -> None:
        missing = [key for key in self.required if getattr(spec, key) is None]
        if missing:
            raise ParameterOutOfRange(
                f"{self.name}: parâmetros em falta: {', '.join('--' + m for m in missing)}")

    def generate(self, spec: FamilySpec) -> Iterator[MopGraph]:
        """Grafos da família (um só, por omissão)"""
        self.check(spec)
        graph = self.build(spec)
        expected = self.order(spec)
        if graph.n != expected:
            raise InternalInvariantViolation(
                f"{self.name}: ordem {graph.n}, esperado {expected}")
        self.stats["built"] += 1
        logger.debug(f"{self.name}: {spec.label()} -> n={graph.n}")
        yield graph

    def __repr__(self):
        return f"{type(self).__name__}(name={self.name})"
