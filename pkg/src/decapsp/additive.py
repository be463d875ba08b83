"""Near-exact small-distance APSP for unweighted graphs under deletions.

Nodes are partitioned into levels D_1..D_k by independent sampling with
geometrically interpolated densities; every node roots one bounded-depth
tree.  Level-1 trees run on the full graph.  A tree at level i runs on a
sparser graph holding only edges whose endpoints lack low-level neighbors
(E_i), one designated escape edge per node into its lowest reachable level
(E*), plus weighted shortcut edges from the root to every lower-level node
priced at that node's own tree estimate.

A deletion is absorbed level by level: replacement escape edges and newly
qualifying sparse edges are inserted first, then shortcut reweightings
exported by lower levels are applied, and only then does the edge leave
the level's trees; estimate increases are exported upward.  For a pair at
distance at most d + (k - i), the tree rooted at its lower-level endpoint
(level i) answers within additive error 2(i - 1), so any pair within d is
answered within 2(k - 1).
"""

from __future__ import annotations

import math
import random

from .estree import MonotoneESTree
from .graph import DELETE, DomainError, UpdateEvent, apply_update

INF = math.inf


def level_thresholds(n, m, k):
    """s_i for i = 1..k-1; interpolates between m/n and ln n."""
    if n < 2:
        raise DomainError("need at least two nodes")
    ratio = max(m / n, 1e-9)
    lg = math.log(n)
    return [ratio ** (1 - i / k) * lg ** (i / k) for i in range(1, k)]


def sample_partition(n, m, k, c, seed):
    """Assign each node its level: lowest sampled index, else k."""
    thresholds = level_thresholds(n, m, k)
    rng = random.Random(seed)
    level = [k] * n
    for i, s_i in enumerate(thresholds, start=1):
        p_i = min(1.0, c * math.log(n) / s_i)
        for v in range(n):
            if rng.random() < p_i and level[v] == k:
                level[v] = i
    return level


class AdditiveAPSP:
    def __init__(self, graph, k, d, c=2, eps=0.0, seed=0):
        if k < 2 or k > max(2, int(math.log2(graph.n))):
            raise DomainError(f"k={k} outside [2, log2(n)]")
        if d < 1:
            raise DomainError("depth parameter d must be >= 1")
        for u, v, w in graph.edges():
            if w != 1:
                raise DomainError(f"edge {{{u}, {v}}} has weight {w}; expected unweighted input")
        self.g = graph
        self.k = k
        self.d = d
        self.c = c
        self.eps = eps
        self.cap = d + 3 * k
        self.level = sample_partition(graph.n, graph.m, k, c, seed)
        self.s = level_thresholds(graph.n, graph.m, k)

        # escape-edge state: fixed neighbor scan order with a resume pointer
        n = graph.n
        self.nbr_order = [sorted(graph.adj[v]) for v in range(n)]
        self.ptr = [0] * n
        self.idx = [k] * n       # i_v: lowest level seen among live neighbors
        self.escape = [None] * n
        self.estar_added = 0
        self.ei_added = [0] * (k + 1)  # per tree level, index 0 unused
        self.scans = 0
        self.exports_applied = 0

        for v in range(n):
            if graph.adj[v]:
                self.idx[v] = min(self.level[x] for x in graph.adj[v])
                self.escape[v] = self._scan(v)
                self.estar_added += 1

        # per-level sparse edge sets; level 1 implicitly holds everything
        self.edge_set = {i: set() for i in range(2, k + 1)}
        for u, v, _ in graph.edges():
            top = max(self.idx[u], self.idx[v])
            for i in range(2, min(top, k) + 1):
                self.edge_set[i].add((u, v))
                self.ei_added[i] += 1
        for v in range(n):
            if self.escape[v] is not None:
                pair = self._pair(v, self.escape[v])
                for i in range(2, k + 1):
                    self.edge_set[i].add(pair)

        # trees, built level by level so shortcut weights already exist
        self.tree = {}
        self.shortcut = {}  # root -> {lower node: exported weight}
        for v in range(n):
            if self.level[v] == 1:
                self.tree[v] = MonotoneESTree(graph.adj, v, self.cap)
        for i in range(2, k + 1):
            base = {u: {} for u in range(n)}
            for a, b in self.edge_set[i]:
                base[a][b] = base[b][a] = 1
            for u in range(n):
                if self.level[u] != i:
                    continue
                adj = {x: dict(nb) for x, nb in base.items()}
                cuts = self.shortcut[u] = {}
                for w in range(n):
                    if self.level[w] < i:
                        lw = self.tree[w].level_of[u]
                        if lw < INF:
                            cuts[w] = lw
                            if adj[u].get(w, INF) > lw:
                                adj[u][w] = adj[w][u] = lw
                self.tree[u] = MonotoneESTree(adj, u, self.cap)

        self.updates_applied = 0

    # -- escape-edge bookkeeping ------------------------------------------

    @staticmethod
    def _pair(a, b):
        return (a, b) if a < b else (b, a)

    def _scan(self, v):
        """Next live neighbor of v in D_{idx[v]} at or after the pointer."""
        order = self.nbr_order[v]
        live = self.g.adj[v]
        want = self.idx[v]
        while self.ptr[v] < len(order):
            x = order[self.ptr[v]]
            self.ptr[v] += 1
            self.scans += 1
            if x in live and self.level[x] == want:
                return x
        return None

    def _redesignate(self, v, additions):
        """v lost its escape edge; find a replacement, promoting idx if needed."""
        x = self._scan(v)
        if x is None:
            live = self.g.adj[v]
            old = self.idx[v]
            if not live:
                self.idx[v] = self.k
                self.escape[v] = None
            else:
                self.idx[v] = min(self.level[z] for z in live)
                self.ptr[v] = 0
                x = self._scan(v)
            if self.idx[v] > old:
                for z in self.g.adj[v]:
                    lo = max(old, self.idx[z])
                    hi = max(self.idx[v], self.idx[z])
                    for i in range(lo + 1, min(hi, self.k) + 1):
                        self._add_edge_level(self._pair(v, z), i, additions)
        self.escape[v] = x
        if x is not None:
            self.estar_added += 1
            pair = self._pair(v, x)
            for i in range(2, self.k + 1):
                self._add_edge_level(pair, i, additions, star=True)

    def _add_edge_level(self, pair, i, additions, star=False):
        if i >= 2 and pair not in self.edge_set[i]:
            self.edge_set[i].add(pair)
            if not star:
                self.ei_added[i] += 1
            additions.setdefault(i, []).append(pair)

    # -- updates ------------------------------------------------------------

    def delete(self, u, v):
        rec = apply_update(self.g, UpdateEvent(DELETE, u, v))
        self.updates_applied += 1
        a, b = rec.u, rec.v
        pair = self._pair(a, b)

        additions = {}
        for x, y in ((a, b), (b, a)):
            if self.escape[x] == y:
                self._redesignate(x, additions)

        # pend[(root, w)] marks a shortcut weight to re-read when the root's
        # level is processed; lower levels fill it, higher levels drain it.
        pend = {i: set() for i in range(2, self.k + 1)}

        def export(source_tree, changed):
            root_of = source_tree.root
            for x in changed:
                lx = self.level[x]
                if lx > self.level[root_of] and root_of in self.shortcut.get(x, ()):
                    pend[lx].add((x, root_of))

        for w in range(self.g.n):
            if self.level[w] == 1:
                export(self.tree[w], self.tree[w].delete_edge(a, b))

        for i in range(2, self.k + 1):
            new_pairs = additions.get(i, ())
            dying = pair in self.edge_set[i]
            for u2 in range(self.g.n):
                if self.level[u2] != i:
                    continue
                tree = self.tree[u2]
                cuts = self.shortcut[u2]
                for x, y in new_pairs:
                    if u2 == x or u2 == y:
                        other = y if u2 == x else x
                        tree.relax_edge(u2, other, 1)
                    else:
                        tree.insert_edge(x, y, 1)
                for (root, w) in sorted(pend[i]):
                    if root != u2:
                        continue
                    new_w = self.tree[w].level_of[root]
                    self.exports_applied += 1
                    direct = self._pair(root, w) in self.edge_set[i]
                    if new_w == INF:
                        del cuts[w]
                        if not direct:
                            export(tree, tree.delete_edge(root, w))
                    else:
                        cuts[w] = new_w
                        if not direct:
                            export(tree, tree.increase_weight(root, w, new_w))
                if dying:
                    r = None
                    if u2 == a or u2 == b:
                        other = b if u2 == a else a
                        r = cuts.get(other)
                    if r is None:
                        export(tree, tree.delete_edge(a, b))
                    elif r > 1:
                        export(tree, tree.increase_weight(a, b, r))
            if dying:
                self.edge_set[i].discard(pair)

    def increase(self, u, v, delta):
        raise DomainError("additive structure supports deletions only")

    # -- queries -------------------------------------------------------------

    def query(self, u, v):
        if u == v:
            return 0
        root, other = (u, v) if (self.level[u], u) <= (self.level[v], v) else (v, u)
        return self.tree[root].level_of[other]

    def counters(self):
        return {
            "updates": self.updates_applied,
            "estar_added": self.estar_added,
            "ei_added": {i: self.ei_added[i] for i in range(2, self.k + 1)},
            "neighbor_scans": self.scans,
            "exports_applied": self.exports_applied,
            "tree_level_increases": sum(t.level_increases for t in self.tree.values()),
            "level_sizes": [self.level.count(i) for i in range(1, self.k + 1)],
        }
