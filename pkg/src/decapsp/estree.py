"""Single-source shortest-path trees under edge deletions and insertions.

MonotoneESTree keeps a level l(v) per node with the contract:

  * levels never decrease;
  * l(v) is always an upper bound... (lower-bounded by the true distance:
    d_H(root, v) <= l(v));
  * under a purely decremental history the levels are exact whenever they
    do not exceed the depth cap;
  * on an increase the new level equals the minimum of l(u) + w(u, v) over
    the current neighbors, so every finite level is witnessed by an incident
    edge even when insertions made the true distance smaller.

Levels beyond the cap jump to infinity.  Each node owns a heap over its
neighbors keyed by l(neighbor) + weight, and a global queue drives level
recomputation in increasing level order.
"""

from __future__ import annotations

import heapq
import math

from .graph import DuplicateEdge, EdgeNotFound, MonotonicityViolation
from .heaps import IndexedHeap

INF = math.inf


class MonotoneESTree:
    __slots__ = ("root", "cap", "adj", "level_of", "_nbr", "_queue", "level_increases")

    def __init__(self, adj, root, cap):
        """adj: mapping node -> {neighbor: weight}; copied, never aliased."""
        if cap < 0:
            raise ValueError("depth cap must be nonnegative")
        self.root = root
        self.cap = cap
        self.adj = {u: dict(nbrs) for u, nbrs in adj.items()}
        if root not in self.adj:
            raise KeyError(f"root {root!r} not a node of the graph")
        self.level_of = self._dijkstra()
        self._nbr = {
            u: IndexedHeap((v, self.level_of[v] + w) for v, w in nbrs.items())
            for u, nbrs in self.adj.items()
        }
        self._queue = IndexedHeap()
        self.level_increases = 0

    def _dijkstra(self):
        dist = dict.fromkeys(self.adj, INF)
        dist[self.root] = 0
        heap = [(0, self.root)]
        adj = self.adj
        cap = self.cap
        while heap:
            d, u = heapq.heappop(heap)
            if d > dist[u]:
                continue
            for v, w in adj[u].items():
                nd = d + w
                if nd <= cap and nd < dist[v]:
                    dist[v] = nd
                    heapq.heappush(heap, (nd, v))
        return dist

    def level(self, v):
        return self.level_of[v]

    def has_edge(self, u, v):
        return v in self.adj[u]

    def insert_edge(self, u, v, w):
        """Add an edge; levels never drop, so no recomputation happens."""
        if v in self.adj[u]:
            raise DuplicateEdge(f"edge {{{u}, {v}}} already in tree graph")
        self.adj[u][v] = w
        self.adj[v][u] = w
        lv = self.level_of
        self._nbr[u].insert(v, lv[v] + w)
        self._nbr[v].insert(u, lv[u] + w)

    def relax_edge(self, u, v, w):
        """Insert {u, v} or lower its stored weight to w.

        A cheaper parallel edge behaves exactly like an insertion: neighbor
        heap keys drop but levels stay put, so the shortcut only takes
        effect at the next level recomputation.
        """
        cur = self.adj[u].get(v)
        if cur is None:
            self.insert_edge(u, v, w)
        elif w < cur:
            self.adj[u][v] = w
            self.adj[v][u] = w
            lv = self.level_of
            self._nbr[u].update(v, lv[v] + w)
            self._nbr[v].update(u, lv[u] + w)

    def delete_edge(self, u, v):
        return self.increase_weight(u, v, INF)

    def increase_weight(self, u, v, w):
        """Raise the weight of {u, v} (inf removes it).  Returns the set of
        nodes whose level increased as a consequence."""
        nbrs = self.adj[u]
        if v not in nbrs:
            raise EdgeNotFound(f"edge {{{u}, {v}}} not in tree graph")
        old = nbrs[v]
        if w == INF:
            del nbrs[v]
            del self.adj[v][u]
            self._nbr[u].delete(v)
            self._nbr[v].delete(u)
        else:
            if w <= old:
                raise MonotonicityViolation(
                    f"tree edge {{{u}, {v}}} weight must strictly increase: {old} -> {w!r}"
                )
            nbrs[v] = w
            self.adj[v][u] = w
            lv = self.level_of
            self._nbr[u].update(v, lv[v] + w)
            self._nbr[v].update(u, lv[u] + w)
        queue = self._queue
        root = self.root
        if u != root and u not in queue:
            queue.insert(u, self.level_of[u])
        if v != root and v not in queue:
            queue.insert(v, self.level_of[v])
        return self._settle()

    def _settle(self):
        """Drain the queue, lifting levels in increasing order."""
        queue = self._queue
        level_of = self.level_of
        nbr = self._nbr
        adj = self.adj
        cap = self.cap
        root = self.root
        changed = set()
        while queue:
            u, _ = queue.pop()
            heap = nbr[u]
            new = heap.min_key() if heap else INF
            old = level_of[u]
            if new > old:
                if new > cap:
                    new = INF
                level_of[u] = new
                self.level_increases += 1
                changed.add(u)
                for v, w in adj[u].items():
                    nbr[v].update(u, new + w)
                    if v != root and v not in queue:
                        queue.insert(v, level_of[v])
        return changed
