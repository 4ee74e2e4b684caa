# -*- coding: utf-8 -*-
"""
core/cache.py
Cache em disco de valores exatos γ_k(G).
Cada k tem o seu próprio ficheiro JSON, indexado pela forma canónica do grafo.

Os valores exatos não expiram: uma entrada só é descartada quando foi
calculada por outra versão do solver (config.SOLVER_VERSION).
"""
import json
import logging
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Optional

from config import CACHE_DIR, SOLVER_VERSION

logger = logging.getLogger(__name__)


@dataclass
class CacheEntry:
    """Entrada de cache para um grafo"""
    key: str          # Serialização canónica do grafo
    gamma: int        # γ_k exato
    solver: str       # Versão do solver que calculou
    timestamp: str    # ISO timestamp de quando foi guardado

    def to_dict(self) -> Dict[str, Any]:
        """Converte para dicionário (para JSON)"""
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'CacheEntry':
        """Cria CacheEntry a partir de dicionário"""
        return cls(**data)

    def is_stale(self) -> bool:
        """Calculada por outra versão do solver"""
        return self.solver != SOLVER_VERSION


class GammaCache:
    """
    Cache para um valor de k.
    Cada k tem o seu ficheiro JSON independente.
    """

    def __init__(self, k: int, cache_dir: Optional[Path] = None):
        """
        Args:
            k: Ordem mínima das componentes
            cache_dir: Diretório (por omissão config.CACHE_DIR)
        """
        self.k = k
        self.cache_file = Path(cache_dir or CACHE_DIR) / f"gamma_k{k}.json"
        self._cache: Dict[str, CacheEntry] = {}
        self._dirty = False
        self.hits = 0
        self.misses = 0

        self._load()

    def _load(self) -> None:
        """Carrega cache do disco"""
        if not self.cache_file.exists():
            return

        try:
            with open(self.cache_file, 'r', encoding='utf-8') as f:
                data = json.load(f)
            for key, entry_dict in data.items():
                self._cache[key] = CacheEntry.from_dict(entry_dict)
        except (OSError, ValueError, TypeError) as e:
            logger.warning(f"[AVISO] Erro ao carregar cache de k={self.k}: {e}")
            self._cache = {}

    def save(self) -> None:
        """Guarda cache no disco (só se houve mudanças)"""
        if not self._dirty:
            return

        try:
            data = {key: entry.to_dict() for key, entry in sorted(self._cache.items())}
            self.cache_file.parent.mkdir(parents=True, exist_ok=True)
            with open(self.cache_file, 'w', encoding='utf-8') as f:
                json.dump(data, f, ensure_ascii=False, indent=2)
            self._dirty = False
            logger.debug(f"[CACHE] {len(self)} entradas guardadas em {self.cache_file}")
        except OSError as e:
            logger.error(f"[ERRO] Não foi possível guardar cache de k={self.k}: {e}")

    def get(self, key: str) -> Optional[int]:
        """
        Busca γ_k no cache.

        Returns:
            γ_k se existe e é da versão atual do solver, None caso contrário
        """
        entry = self._cache.get(key)
        if entry is None:
            self.misses += 1
            return None

        if entry.is_stale():
            del self._cache[key]
            self._dirty = True
            self.misses += 1
            return None

        self.hits += 1
        return entry.gamma

    def put(self, key: str, gamma: int) -> None:
        """Adiciona ou atualiza entrada"""
        self._cache[key] = CacheEntry(
            key=key,
            gamma=int(gamma),
            solver=SOLVER_VERSION,
            timestamp=datetime.now(timezone.utc).isoformat(timespec='seconds'),
        )
        self._dirty = True

    def clear(self) -> None:
        """Limpa todo o cache"""
        self._cache = {}
        self._dirty = True

    def remove_stale(self) -> int:
        """
        Remove entradas de outras versões do solver.

        Returns:
            Número de entradas removidas
        """
        stale = [key for key, entry in self._cache.items() if entry.is_stale()]
        for key in stale:
            del self._cache[key]
        if stale:
            self._dirty = True
        return len(stale)

    def get_stats(self) -> Dict[str, Any]:
        """Estatísticas do cache"""
        return {
            "k": self.k,
            "total_entries": len(self._cache),
            "stale": sum(1 for entry in self._cache.values() if entry.is_stale()),
            "hits": self.hits,
            "misses": self.misses,
            "cache_file": str(self.cache_file),
        }

    def __len__(self) -> int:
        return len(self._cache)

    def __repr__(self) -> str:
        return f"GammaCache(k={self.k}, entries={len(self)})"
