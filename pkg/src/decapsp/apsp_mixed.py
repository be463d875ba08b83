"""Weighted (2 + eps)-approximation with a per-pair additive edge term.

Splits intermediate nodes by cluster size.  A node is heavy once at least
tau bunches contain it; heaviness is permanent.  Heavy nodes root their own
bounded-depth trees, so any pair can route through its nearest heavy node
at exact tree distances.  Light intermediates are covered pairwise: for
every unordered pair {u, v} an overlap heap stores each light w lying in
both bunches, keyed rounded_bunch(u, w) + rounded_bunch(v, w).

Promotion happens the moment a join pushes a cluster to tau members: the
node's tree is built on the current graph, it enters every heavy-pivot
heap, and all of its overlap entries are purged.  Queries take the best of
pivot routes, routes through the nearest heavy node of either endpoint,
and the pair's overlap minimum.
"""

from __future__ import annotations

import math

from .bunches import INCREASE, JOIN, LEAVE, BunchEngine
from .estree import MonotoneESTree
from .graph import DELETE, INCREASE as W_INCREASE, UpdateEvent, apply_update
from .heaps import IndexedHeap

INF = math.inf


def _pair(a, b):
    return (a, b) if a < b else (b, a)


class MixedAPSP:
    def __init__(self, graph, p, eps, tau, seed):
        if tau < 1:
            raise ValueError("tau must be a positive threshold")
        self.g = graph
        self.tau = tau
        self.engine = BunchEngine(graph, p, eps, seed)
        value_of = self.engine.value_of

        self.bexp = {}         # (owner, member) -> exponent mirror
        self.cluster_m = [set() for _ in range(graph.n)]
        for v in range(graph.n):
            for w, exp in self.engine.bunch[v].items():
                self.bexp[(v, w)] = exp
                self.cluster_m[w].add(v)

        self.heavy = set()
        self.heavy_trees = {}
        self.hp_heap = [IndexedHeap() for _ in range(graph.n)]
        self.promotions = 0

        self.overlap_heap = {}  # unordered (u, v) -> IndexedHeap of light w
        self.set_overlap = {}   # (w, u) -> set of v with entry w in heap {u, v}
        self.overlap_touches = 0

        for w in range(graph.n):
            if len(self.cluster_m[w]) >= tau:
                self._promote(w)
        for w in range(graph.n):
            if w in self.heavy:
                continue
            owners = sorted(self.cluster_m[w])
            for i, u in enumerate(owners):
                uval = value_of(self.bexp[(u, w)])
                for v in owners[i + 1:]:
                    self._overlap_insert(w, u, v, uval + value_of(self.bexp[(v, w)]))

        self.updates_applied = 0

    # -- heavy layer ---------------------------------------------------------

    def _promote(self, w):
        self.heavy.add(w)
        self.promotions += 1
        tree = MonotoneESTree(self.g.adj, w, self.engine.depth_cap)
        self.heavy_trees[w] = tree
        level_of = tree.level_of
        for v in range(self.g.n):
            self.hp_heap[v].insert(w, level_of[v])
        pairs = set()
        drop = [key for key in self.set_overlap if key[0] == w]
        for key in drop:
            for v in self.set_overlap[key]:
                pairs.add(_pair(key[1], v))
            del self.set_overlap[key]
        for uv in sorted(pairs):
            heap = self.overlap_heap[uv]
            heap.delete(w)
            if not heap:
                del self.overlap_heap[uv]

    # -- overlap layer -------------------------------------------------------

    def _overlap_insert(self, w, u, v, key):
        heap = self.overlap_heap.get(_pair(u, v))
        if heap is None:
            heap = self.overlap_heap[_pair(u, v)] = IndexedHeap()
        heap.insert(w, key)
        self.set_overlap.setdefault((w, u), set()).add(v)
        self.set_overlap.setdefault((w, v), set()).add(u)

    def _bunch_event(self, bev):
        w, v = bev.member, bev.owner
        value_of = self.engine.value_of
        if bev.case == JOIN:
            self.bexp[(v, w)] = bev.exponent
            if w not in self.heavy:
                for u in sorted(self.cluster_m[w]):
                    self._overlap_insert(w, u, v, value_of(self.bexp[(u, w)]) + bev.value)
            self.cluster_m[w].add(v)
            if w not in self.heavy and len(self.cluster_m[w]) >= self.tau:
                self._promote(w)
        elif bev.case == INCREASE:
            self.bexp[(v, w)] = bev.exponent
            if w not in self.heavy:
                targets = self.set_overlap.get((w, v), ())
                self.overlap_touches += len(targets)
                for u in sorted(targets):
                    self.overlap_heap[_pair(u, v)].update(
                        w, value_of(self.bexp[(u, w)]) + bev.value)
        else:  # LEAVE
            del self.bexp[(v, w)]
            self.cluster_m[w].discard(v)
            if w not in self.heavy:
                for u in sorted(self.set_overlap.pop((w, v), ())):
                    uv = _pair(u, v)
                    heap = self.overlap_heap[uv]
                    heap.delete(w)
                    if not heap:
                        del self.overlap_heap[uv]
                    self.set_overlap[(w, u)].discard(v)
                    if not self.set_overlap[(w, u)]:
                        del self.set_overlap[(w, u)]

    # -- updates ---------------------------------------------------------------

    def delete(self, u, v):
        self._apply(UpdateEvent(DELETE, u, v))

    def increase(self, u, v, delta):
        self._apply(UpdateEvent(W_INCREASE, u, v, delta))

    def _apply(self, ev):
        rec = apply_update(self.g, ev)
        self.updates_applied += 1
        events = self.engine.refresh(rec)
        for w in sorted(self.heavy):
            tree = self.heavy_trees[w]
            if rec.new_weight == INF:
                changed = tree.delete_edge(rec.u, rec.v)
            else:
                changed = tree.increase_weight(rec.u, rec.v, rec.new_weight)
            heaps = self.hp_heap
            level_of = tree.level_of
            for x in changed:
                heaps[x].update(w, level_of[x])
        for bev in events:
            self._bunch_event(bev)

    # -- queries ---------------------------------------------------------------

    def query(self, u, v):
        if u == v:
            return 0
        engine = self.engine
        best = INF
        for a, b in ((u, v), (v, u)):
            pa = engine.pivot_of[a]
            if pa is not None:
                cand = engine.pivot_est[a] + engine.delta_A(pa, b)
                if cand < best:
                    best = cand
        for a, b in ((u, v), (v, u)):
            heap = self.hp_heap[a]
            if heap:
                w, near = heap.peek()
                if near < INF:
                    cand = near + self.heavy_trees[w].level_of[b]
                    if cand < best:
                        best = cand
        heap = self.overlap_heap.get(_pair(u, v))
        if heap is not None:
            cand = heap.min_key()
            if cand < best:
                best = cand
        return best

    def counters(self):
        return {
            "updates": self.updates_applied,
            "searches": self.engine.searches,
            "bunch_rebuilds_max": max(self.engine.rebuilds, default=0),
            "bunch_rebuilds_total": sum(self.engine.rebuilds),
            "promotions": self.promotions,
            "heavy_count": len(self.heavy),
            "overlap_touches": self.overlap_touches,
            "overlap_pairs_live": len(self.overlap_heap),
            "tree_level_increases": (
                sum(t.level_increases for t in self.engine.trees.values())
                + sum(t.level_increases for t in self.heavy_trees.values())
            ),
        }
