import logging
import threading
import time

import pytest

from scancarrier.core import decorators
from scancarrier.core.cache import PathCache
from scancarrier.core.config import settings
from scancarrier.core.decorators import memoize_path
from scancarrier.core.exceptions import CacheMissError
from scancarrier.core.scan import generate_path, parse_scan_spec

from helpers import ALL_SPECS, timeit_return


class TestPathCache:
    def test_get_set(self):
        cache = PathCache()
        path = generate_path(parse_scan_spec("C0"), 2, 2)
        cache.set("k", path)
        assert cache.get("k") is path
        assert "k" in cache
        assert len(cache) == 1

    def test_miss(self):
        with pytest.raises(CacheMissError):
            PathCache().get("absent")

    def test_delete_and_clear(self):
        cache = PathCache()
        cache.set("a", 1)
        cache.set("b", 2)
        cache.delete("a")
        cache.delete("a")
        assert "a" not in cache and "b" in cache
        cache.clear()
        assert len(cache) == 0

    def test_fifo_eviction(self):
        cache = PathCache(max_entries=2)
        cache.set("a", 1)
        cache.set("b", 2)
        cache.set("a", 3)  # overwrite keeps both
        assert len(cache) == 2
        cache.set("c", 4)
        assert "a" not in cache
        assert cache.get("b") == 2 and cache.get("c") == 4


class TestMemoizedPaths:
    def test_basic(self):
        @timeit_return
        @memoize_path()
        def slow_path(spec, rows, cols):
            time.sleep(0.5)  # Simulate an expensive traversal
            return generate_path(spec, rows, cols)

        spec = parse_scan_spec("S1")
        res, exc_time = slow_path(spec, 4, 4)
        assert res == generate_path(spec, 4, 4)
        assert exc_time > 0.4
        res, exc_time = slow_path(spec, 4, 4)
        assert res == generate_path(spec, 4, 4)
        assert exc_time < 0.4  # Should be much faster (cached)

    def test_generate_path_is_memoized(self):
        spec = parse_scan_spec("D0")
        first = generate_path(spec, 16, 9)
        assert generate_path(spec, 16, 9) is first
        assert generate_path(spec=spec, rows=16, cols=9) is first
        assert generate_path(spec, 9, 16) is not first

    def test_cache_clear(self):
        spec = parse_scan_spec("O4")
        first = generate_path(spec, 5, 5)
        generate_path.cache_clear()
        assert len(settings.path_cache) == 0
        second = generate_path(spec, 5, 5)
        assert second is not first
        assert second == first

    def test_hits_and_misses_logged(self, caplog, monkeypatch):
        monkeypatch.setattr(decorators.logger, "propagate", True)
        spec = parse_scan_spec("D0")
        with caplog.at_level(logging.DEBUG, logger=decorators.logger.name):
            generate_path(spec, 5, 5)
            generate_path(spec, 5, 5)
        messages = [m for m in caplog.messages if m.startswith("Path cache")]
        assert len(messages) == 2
        assert messages[0].startswith("Path cache miss for key: path:")
        assert messages[1].startswith("Path cache hit for key: path:")

    def test_quiet_above_debug(self, caplog, monkeypatch):
        monkeypatch.setattr(decorators.logger, "propagate", True)
        with caplog.at_level(logging.INFO, logger=decorators.logger.name):
            generate_path(parse_scan_spec("S2"), 4, 4)
        assert not [m for m in caplog.messages if m.startswith("Path cache")]

    def test_capacity(self):
        settings.configure(PATH_CACHE_SIZE=2)
        c0, d0, s0 = (parse_scan_spec(text) for text in ("C0", "D0", "S0"))

        first = generate_path(c0, 3, 3)
        generate_path(d0, 3, 3)
        generate_path(s0, 3, 3)
        assert len(settings.path_cache) == 2
        assert generate_path(c0, 3, 3) is not first
        assert generate_path(c0, 3, 3) == first

    def test_configure_resets_cache(self):
        generate_path(parse_scan_spec("C0"), 3, 3)
        assert len(settings.path_cache) == 1
        settings.configure(PATH_CACHE_SIZE=8)
        assert len(settings.path_cache) == 0
        assert settings.path_cache.max_entries == 8

    def test_ignore_args(self):
        calls = []

        @memoize_path(key_prefix="test:", ignore_args=["label"])
        def labelled_path(spec, rows, cols, label):
            calls.append(label)
            return generate_path(spec, rows, cols)

        spec = parse_scan_spec("C3")
        assert labelled_path(spec, 2, 2, "first") == labelled_path(spec, 2, 2, "second")
        assert calls == ["first"]

    def test_concurrency(self):
        expected = {
            (str(spec), rows): generate_path(spec, rows, rows + 1)
            for spec in ALL_SPECS
            for rows in (3, 6)
        }
        settings.configure(PATH_CACHE_SIZE=16)
        num_threads = 10
        results = []

        def worker():
            for spec in ALL_SPECS:
                for rows in (3, 6):
                    results.append(
                        generate_path(spec, rows, rows + 1) == expected[(str(spec), rows)]
                    )

        threads = [threading.Thread(target=worker) for _ in range(num_threads)]
        for thread in threads:
            thread.start()
        for thread in threads:
            thread.join()

        assert len(results) == num_threads * len(expected)
        assert all(results)
        assert len(settings.path_cache) <= 16
