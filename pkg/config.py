# -*- coding: utf-8 -*-
"""
MOP Domination Toolkit v1.0 - Configurações Centralizadas
Grafos maximais outerplanares e conjuntos k-componente dominantes
"""
import os
from pathlib import Path

# ============================================================================
# PATHS - Alterar aqui (ou via MOPDOM_HOME) se mudares de pasta
# ============================================================================
BASE_DIR = Path(os.environ.get("MOPDOM_HOME", Path.home() / ".mopdom"))
CACHE_DIR = BASE_DIR / "cache"
OUTPUT_DIR = BASE_DIR / "output"

# Relatório Excel por omissão
EXCEL_OUTPUT = OUTPUT_DIR / "relatorio.xlsx"

# ============================================================================
# SOLVER EXATO - Limites de tamanho
# ============================================================================
# Acima disto a pesquisa exaustiva explode (subconjuntos de 2^n)
EXACT_GUARD = 26

# Enumeração exaustiva de triangulações: C_{n-2} grafos
# n=13 -> 58786 triangulações (~1 minuto)
ENUM_MAX_N = 13

# Maior ℓ aceite por enum_gcal (grafos de ordem ℓ+1)
GCAL_MAX_ELL = 12

# ============================================================================
# VERIFICAÇÃO - Experiências reprodutíveis
# ============================================================================
DEFAULT_SEED = 20240601
DEFAULT_WORKERS = 1  # >1 usa ProcessPoolExecutor

# ============================================================================
# CACHE - Resultados exatos em disco
# ============================================================================
CACHE_ENABLED = True  # Pode ser desativado via CLI

# Valores exatos não expiram; só são invalidados quando o solver muda
SOLVER_VERSION = "1.0"

# ============================================================================
# LOGGING - Níveis de verbosidade
# ============================================================================
LOG_LEVEL = "INFO"  # DEBUG, INFO, WARNING, ERROR
SHOW_PROGRESS_BAR = True  # Barra de progresso visual
