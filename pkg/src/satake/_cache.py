"""A small thread-safe LRU map used for the memo tables."""

from __future__ import annotations

import threading
from collections import OrderedDict
from typing import Callable, Hashable, TypeVar

V = TypeVar("V")

DEFAULT_LIMIT = 200_000


class BoundedCache:
    """LRU cache with an entry limit.

    Reads and writes take a single lock; values are computed outside the lock,
    so two threads may race to compute the same entry and the later write wins
    (both values are equal because every cached function is pure).
    """

    def __init__(self, limit: int = DEFAULT_LIMIT):
        if limit < 1:
            raise ValueError("cache limit must be positive")
        self.limit = limit
        self._data: OrderedDict = OrderedDict()
        self._lock = threading.Lock()

    def get_or_compute(self, key: Hashable, compute: Callable[[], V]) -> V:
        with self._lock:
            if key in self._data:
                self._data.move_to_end(key)
                return self._data[key]
        value = compute()
        with self._lock:
            self._data[key] = value
            self._data.move_to_end(key)
            while len(self._data) > self.limit:
                self._data.popitem(last=False)
        return value

    def set_limit(self, limit: int) -> None:
        if limit < 1:
            raise ValueError("cache limit must be positive")
        with self._lock:
            self.limit = limit
            while len(self._data) > limit:
                self._data.popitem(last=False)

    def clear(self) -> None:
        with self._lock:
            self._data.clear()

    def __len__(self) -> int:
        return len(self._data)
