"""Binary min-heap with a reverse location index.

Every priority structure in this package (neighbor heaps inside the
shortest-path trees, the per-pair certificate heaps, the pivot heaps) needs
decrease/increase-key and delete-by-id in O(log n), which heapq does not
offer.  Entries are (key, id) pairs ordered lexicographically, so equal keys
break ties toward the smaller id and iteration order never depends on
insertion history.
"""

from __future__ import annotations


class IndexedHeap:
    """Min-heap over hashable ids with updatable keys.

    Keys may be ints or floats (math.inf is fine).  Ids must be mutually
    comparable because they are used as tie-breakers.
    """

    __slots__ = ("_keys", "_ids", "_pos")

    def __init__(self, items=None):
        # items: iterable of (id, key); built in O(len) via sift-down passes
        self._keys = []
        self._ids = []
        self._pos = {}
        if items:
            for ident, key in items:
                if ident in self._pos:
                    raise KeyError(f"duplicate heap id {ident!r}")
                self._pos[ident] = len(self._ids)
                self._keys.append(key)
                self._ids.append(ident)
            for i in range(len(self._ids) // 2 - 1, -1, -1):
                self._sift_down(i)

    def __len__(self):
        return len(self._ids)

    def __contains__(self, ident):
        return ident in self._pos

    def __bool__(self):
        return bool(self._ids)

    def key_of(self, ident):
        return self._keys[self._pos[ident]]

    def peek(self):
        """(id, key) of the minimum without removing it."""
        if not self._ids:
            raise IndexError("peek on empty heap")
        return self._ids[0], self._keys[0]

    def min_key(self):
        if not self._ids:
            raise IndexError("min_key on empty heap")
        return self._keys[0]

    def insert(self, ident, key):
        if ident in self._pos:
            raise KeyError(f"heap id {ident!r} already present")
        self._pos[ident] = len(self._ids)
        self._keys.append(key)
        self._ids.append(ident)
        self._sift_up(len(self._ids) - 1)

    def update(self, ident, key):
        """Change the key of an existing entry (either direction)."""
        i = self._pos[ident]
        old = self._keys[i]
        self._keys[i] = key
        if key < old:
            self._sift_up(i)
        else:
            self._sift_down(i)

    def upsert(self, ident, key):
        if ident in self._pos:
            self.update(ident, key)
        else:
            self.insert(ident, key)

    def pop(self):
        """Remove and return (id, key) of the minimum."""
        if not self._ids:
            raise IndexError("pop on empty heap")
        ident = self._ids[0]
        key = self._keys[0]
        self._remove_at(0)
        return ident, key

    def delete(self, ident):
        self._remove_at(self._pos[ident])

    def discard(self, ident):
        if ident in self._pos:
            self._remove_at(self._pos[ident])

    def items(self):
        """Snapshot of (id, key) pairs in arbitrary heap order."""
        return list(zip(self._ids, self._keys))

    def _remove_at(self, i):
        keys, ids, pos = self._keys, self._ids, self._pos
        del pos[ids[i]]
        last_key = keys.pop()
        last_id = ids.pop()
        if i < len(ids):
            keys[i] = last_key
            ids[i] = last_id
            pos[last_id] = i
            self._sift_down(i)
            self._sift_up(i)

    def _less(self, i, j):
        ki, kj = self._keys[i], self._keys[j]
        if ki != kj:
            return ki < kj
        return self._ids[i] < self._ids[j]

    def _sift_up(self, i):
        keys, ids, pos = self._keys, self._ids, self._pos
        key, ident = keys[i], ids[i]
        while i > 0:
            parent = (i - 1) >> 1
            pk = keys[parent]
            if pk < key or (pk == key and ids[parent] < ident):
                break
            keys[i] = pk
            ids[i] = ids[parent]
            pos[ids[i]] = i
            i = parent
        keys[i] = key
        ids[i] = ident
        pos[ident] = i

    def _sift_down(self, i):
        keys, ids, pos = self._keys, self._ids, self._pos
        n = len(ids)
        key, ident = keys[i], ids[i]
        while True:
            child = 2 * i + 1
            if child >= n:
                break
            right = child + 1
            if right < n:
                ck, rk = keys[child], keys[right]
                if rk < ck or (rk == ck and ids[right] < ids[child]):
                    child = right
            ck = keys[child]
            if key < ck or (key == ck and ident < ids[child]):
                break
            keys[i] = ck
            ids[i] = ids[child]
            pos[ids[i]] = i
            i = child
        keys[i] = key
        ids[i] = ident
        pos[ident] = i
