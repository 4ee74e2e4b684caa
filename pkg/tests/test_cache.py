# -*- coding: utf-8 -*-
"""Cache de γ_k por forma canónica"""
import json

from config import SOLVER_VERSION
from core.cache import CacheEntry, GammaCache


def test_put_save_reload(cache_dir):
    cache = GammaCache(2, cache_dir)
    assert cache.get("6:0-2,0-3,0-4") is None
    cache.put("6:0-2,0-3,0-4", 2)
    cache.save()

    again = GammaCache(2, cache_dir)
    assert again.get("6:0-2,0-3,0-4") == 2
    stats = again.get_stats()
    assert (stats["k"], stats["total_entries"], stats["hits"], stats["misses"]) == (2, 1, 1, 0)
    assert stats["cache_file"].endswith("gamma_k2.json")


def test_save_only_when_dirty(cache_dir):
    cache = GammaCache(1, cache_dir)
    cache.save()
    assert not cache.cache_file.exists()


def test_stale_entries_are_dropped(cache_dir):
    cache_dir.mkdir(parents=True)
    old = CacheEntry(key="a", gamma=3, solver="0.1", timestamp="2024-01-01T00:00:00+00:00")
    new = CacheEntry(key="b", gamma=4, solver=SOLVER_VERSION, timestamp="2024-01-01T00:00:00+00:00")
    payload = {"a": old.to_dict(), "b": new.to_dict()}
    (cache_dir / "gamma_k3.json").write_text(json.dumps(payload), encoding="utf-8")

    loaded = GammaCache(3, cache_dir)
    assert loaded.get_stats()["stale"] == 1
    assert loaded.remove_stale() == 1
    assert len(loaded) == 1
    assert loaded.get("b") == 4


def test_stale_entry_is_a_miss(cache_dir):
    cache_dir.mkdir(parents=True)
    old = CacheEntry(key="a", gamma=3, solver="0.1", timestamp="2024-01-01T00:00:00+00:00")
    (cache_dir / "gamma_k1.json").write_text(json.dumps({"a": old.to_dict()}), encoding="utf-8")
    cache = GammaCache(1, cache_dir)
    assert cache.get("a") is None
    assert cache.misses == 1 and len(cache) == 0


def test_corrupted_file_is_ignored(cache_dir, caplog):
    cache_dir.mkdir(parents=True)
    (cache_dir / "gamma_k2.json").write_text("{não é json", encoding="utf-8")
    cache = GammaCache(2, cache_dir)
    assert len(cache) == 0
    assert "[AVISO]" in caplog.text


def test_clear(cache_dir):
    cache = GammaCache(2, cache_dir)
    cache.put("x", 1)
    cache.clear()
    cache.save()
    assert json.loads(cache.cache_file.read_text(encoding="utf-8")) == {}


def test_gamma_table_purges_stale_entries(cache_dir, caplog):
    from core.exact import gamma_table

    cache_dir.mkdir(parents=True)
    old = CacheEntry(key="9:velha", gamma=3, solver="0.1", timestamp="2024-01-01T00:00:00+00:00")
    (cache_dir / "gamma_k1.json").write_text(json.dumps({old.key: old.to_dict()}), encoding="utf-8")

    cache = GammaCache(1, cache_dir)
    with caplog.at_level("INFO"):
        gamma_table(1, [5], cache=cache)
    assert "1 entradas de outra versão" in caplog.text

    reloaded = GammaCache(1, cache_dir)
    assert reloaded.get_stats()["stale"] == 0
    assert len(reloaded) == 1
    assert "9:velha" not in json.loads(reloaded.cache_file.read_text(encoding="utf-8"))
