# -*- coding: utf-8 -*-
"""
Configuração comum dos testes.

As corridas exaustivas longas estão marcadas com @pytest.mark.slow;
`pytest -m "not slow"` corre só a bateria rápida.
"""
import sys
from pathlib import Path

import pytest

# Adicionar pasta do projeto ao path
ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT))

GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: corridas exaustivas (minutos)")


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN_DIR


@pytest.fixture
def cache_dir(tmp_path) -> Path:
    """Cache isolado por teste (nunca toca em ~/.mopdom)"""
    return tmp_path / "cache"
