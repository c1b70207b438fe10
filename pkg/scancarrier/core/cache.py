import threading
from collections import OrderedDict
from typing import Optional

from scancarrier.core.exceptions import CacheMissError
from scancarrier.core.models import ScanPath


class PathCache:
    """Thread-safe in-memory store of generated scan paths with FIFO eviction"""

    def __init__(self, max_entries: Optional[int] = None):
        self._store: "OrderedDict[str, ScanPath]" = OrderedDict()
        self._lock = threading.RLock()
        self.max_entries = max_entries

    def get(self, key: str) -> ScanPath:
        with self._lock:
            if key not in self._store:
                raise CacheMissError(f"Key '{key}' not found")
            return self._store[key]

    def set(self, key: str, path: ScanPath) -> None:
        with self._lock:
            # Enforce max entries limit using FIFO
            if (
                self.max_entries
                and len(self._store) >= self.max_entries
                and key not in self._store
            ):
                self._store.popitem(last=False)
            self._store[key] = path

    def delete(self, key: str) -> None:
        with self._lock:
            self._store.pop(key, None)

    def clear(self) -> None:
        with self._lock:
            self._store.clear()

    def __len__(self):
        with self._lock:
            return len(self._store)

    def __contains__(self, key: str):
        with self._lock:
            return key in self._store
