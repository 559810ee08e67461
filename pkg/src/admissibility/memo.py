import threading


class InsertOnceMemo:
    """Thread-safe map where each key is written at most once.

    The value is computed outside the lock; if two threads race on the same
    key, the first insertion wins and both callers see that value.
    """

    def __init__(self):
        self._data = {}
        self._lock = threading.Lock()

    def get_or_compute(self, key, fn):
        with self._lock:
            if key in self._data:
                return self._data[key]
        value = fn()
        with self._lock:
            return self._data.setdefault(key, value)

    def __contains__(self, key):
        with self._lock:
            return key in self._data

    def __len__(self):
        with self._lock:
            return len(self._data)
