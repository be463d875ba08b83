"""Exact recomputation oracles and the stretch verification harness.

Everything here is deliberately independent from the incremental machinery:
distances are recomputed from scratch so that the dynamic structures can be
judged against ground truth.  The sweep driver replays an update log into an
algorithm instance and a private graph copy in lockstep and checks every
pair at checkpoints.
"""

from __future__ import annotations

import heapq
import math
import os
import random
from dataclasses import dataclass, field

from .graph import (
    DELETE,
    INCREASE,
    DomainError,
    QueryCheckpoint,
    UpdateEvent,
    apply_update,
)

INF = math.inf

ORACLE_CAP_ENV = "DECAPSP_ORACLE_CAP"
_DEFAULT_CAP = 512

# guard against float noise in sums of rounded values; real violations are
# at least one rounding step, many orders of magnitude larger
FLOAT_GUARD = 1e-9


def _oracle_cap():
    raw = os.environ.get(ORACLE_CAP_ENV)
    if raw is None:
        return _DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"{ORACLE_CAP_ENV} must be an integer, got {raw!r}") from None


def _check_cap(n):
    cap = _oracle_cap()
    if n > cap:
        raise DomainError(
            f"exact recomputation capped at {cap} nodes (set {ORACLE_CAP_ENV} to raise); got n={n}"
        )


def dijkstra(adj, source, cap=INF):
    """dict node -> distance from source, restricted to distances <= cap."""
    dist = dict.fromkeys(adj, INF)
    dist[source] = 0
    heap = [(0, source)]
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


def exact_apsp(graph):
    """n x n matrix of exact distances (math.inf where disconnected)."""
    n = graph.n
    _check_cap(n)
    adj = graph.adj
    unit = all(w == 1 for _, _, w in graph.edges())
    out = []
    for s in range(n):
        if unit:
            dist = [INF] * n
            dist[s] = 0
            frontier = [s]
            d = 0
            while frontier:
                d += 1
                nxt = []
                for u in frontier:
                    for v in adj[u]:
                        if dist[v] == INF:
                            dist[v] = d
                            nxt.append(v)
                frontier = nxt
            out.append(dist)
        else:
            dd = dijkstra(adj, s)
            out.append([dd[v] for v in range(n)])
    return out


def bottleneck_weights(graph, dist=None):
    """n x n matrix of the largest edge weight over ALL shortest paths.

    Entry (u, v) is the maximum, over every shortest u-v path, of the heaviest
    edge on that path; 0 on the diagonal and for disconnected pairs.
    """
    n = graph.n
    _check_cap(n)
    adj = graph.adj
    if dist is None:
        dist = exact_apsp(graph)
    out = []
    for s in range(n):
        ds = dist[s]
        wmax = [0] * n
        for v in sorted(range(n), key=lambda x: (ds[x], x)):
            if v == s or ds[v] == INF:
                continue
            best = 0
            dv = ds[v]
            for x, w in adj[v].items():
                if ds[x] + w == dv:
                    cand = wmax[x] if wmax[x] > w else w
                    if cand > best:
                        best = cand
            wmax[v] = best
        out.append(wmax)
    return out


def static_two_apsp(graph, p, seed):
    """Static factor-2 estimates from sampled pivots and exact bunches.

    Every node joins the pivot set independently with probability p; each
    node routes through its nearest pivot or, when the two bunches touch an
    edge, through that edge with exact in-bunch distances.  Estimates d_hat
    satisfy d <= d_hat <= 2 d for connected pairs.
    """
    if not (0 <= p <= 1):
        raise DomainError(f"sampling probability must be in [0, 1], got {p!r}")
    n = graph.n
    _check_cap(n)
    dist = exact_apsp(graph)
    rng = random.Random(seed)
    pivots = [v for v in range(n) if rng.random() < p]

    pivot_of = [None] * n
    pivot_dist = [INF] * n
    for v in range(n):
        for s in pivots:
            d = dist[v][s]
            if d < pivot_dist[v]:
                pivot_dist[v] = d
                pivot_of[v] = s

    bunch = [set() for _ in range(n)]
    cluster = [set() for _ in range(n)]
    for v in range(n):
        pd = pivot_dist[v]
        for w in range(n):
            if dist[v][w] < pd:
                bunch[v].add(w)
                cluster[w].add(v)

    est = [[INF] * n for _ in range(n)]
    for u in range(n):
        est[u][u] = 0
        pu = pivot_of[u]
        if pu is None:
            continue
        du = pivot_dist[u]
        dp = dist[pu]
        row = est[u]
        for v in range(n):
            cand = du + dp[v]
            if cand < row[v]:
                row[v] = cand
                est[v][u] = cand
    for x, y, w in graph.edges():
        for u in cluster[x]:
            dux = dist[u][x]
            for v in cluster[y]:
                cand = dux + w + dist[y][v]
                if cand < est[u][v]:
                    est[u][v] = cand
                    est[v][u] = cand
        for u in cluster[y]:
            duy = dist[u][y]
            for v in cluster[x]:
                cand = duy + w + dist[x][v]
                if cand < est[u][v]:
                    est[u][v] = cand
                    est[v][u] = cand
    return est


class StaticTwoAPSP:
    """Replayable wrapper over static_two_apsp: recomputes estimates lazily
    after updates so it can serve as a baseline inside the sweep driver."""

    def __init__(self, graph, p=0.3, seed=0):
        self.graph = graph
        self.p = p
        self.seed = seed
        self._est = None

    def delete(self, u, v):
        apply_update(self.graph, UpdateEvent(DELETE, u, v))
        self._est = None

    def increase(self, u, v, delta):
        apply_update(self.graph, UpdateEvent(INCREASE, u, v, delta))
        self._est = None

    def query(self, u, v):
        if u == v:
            return 0
        if self._est is None:
            self._est = static_two_apsp(self.graph, self.p, self.seed)
        return self._est[u][v]


@dataclass(frozen=True)
class BoundSpec:
    """Target guarantee d <= d_hat <= alpha * d + beta (+ W_uv if asked).

    radius restricts the upper-bound check to pairs with d <= radius; the
    lower bound and the unreachable-pair check always apply.
    """

    alpha: float
    beta: float = 0.0
    per_pair_bottleneck: bool = False
    radius: float | None = None

    def upper(self, d, w_uv):
        bound = self.alpha * d + self.beta
        if self.per_pair_bottleneck:
            bound += w_uv
        return bound

    def to_dict(self):
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "per_pair_bottleneck": self.per_pair_bottleneck,
            "radius": self.radius,
        }


@dataclass
class CheckpointResult:
    version: int
    pairs_checked: int
    violations: list = field(default_factory=list)
    max_ratio: float = 0.0
    max_slack: float = -INF

    def to_dict(self):
        return {
            "version": self.version,
            "pairs_checked": self.pairs_checked,
            "violations": [list(v) for v in self.violations],
            "max_ratio": self.max_ratio,
            "max_slack": None if self.max_slack == -INF else self.max_slack,
        }


@dataclass
class StretchReport:
    bound: BoundSpec
    checkpoints: list = field(default_factory=list)

    @property
    def ok(self):
        return all(not c.violations for c in self.checkpoints)

    @property
    def pairs_checked(self):
        return sum(c.pairs_checked for c in self.checkpoints)

    @property
    def violations(self):
        return [v for c in self.checkpoints for v in c.violations]

    def to_dict(self):
        return {
            "schema": 1,
            "bound": self.bound.to_dict(),
            "ok": self.ok,
            "pairs_checked": self.pairs_checked,
            "checkpoints": [c.to_dict() for c in self.checkpoints],
        }


def _run_checkpoint(algo, graph, bound, fault):
    n = graph.n
    dist = exact_apsp(graph)
    wmat = bottleneck_weights(graph, dist) if bound.per_pair_bottleneck else None
    res = CheckpointResult(version=graph.version, pairs_checked=0)
    for u in range(n):
        du = dist[u]
        for v in range(u + 1, n):
            d = du[v]
            dhat = algo.query(u, v)
            if fault is not None:
                dhat = fault(graph.version, u, v, dhat)
            res.pairs_checked += 1
            if d == INF:
                if dhat != INF:
                    res.violations.append((graph.version, u, v, d, dhat, "finite estimate for disconnected pair"))
                continue
            if dhat < d - FLOAT_GUARD:
                res.violations.append((graph.version, u, v, d, dhat, "estimate below true distance"))
                continue
            if bound.radius is not None and d > bound.radius:
                continue
            w_uv = wmat[u][v] if wmat is not None else 0
            upper = bound.upper(d, w_uv)
            if dhat > upper + FLOAT_GUARD:
                res.violations.append((graph.version, u, v, d, dhat, f"estimate above bound {upper}"))
                continue
            if d > 0 and dhat != INF:
                ratio = dhat / d
                if ratio > res.max_ratio:
                    res.max_ratio = ratio
                slack = dhat - d
                if slack > res.max_slack:
                    res.max_slack = slack
    return res


def sweep(algo, graph, updates, bound, *, dense=False, fault=None, initial_check=True):
    """Replay updates into algo and a private exact copy, checking stretch.

    algo must expose delete(u, v), increase(u, v, delta) and query(u, v) and
    must have been built on an identical copy of `graph`; `graph` itself is
    mutated here and serves as the ground-truth twin.  Checks run at every
    QueryCheckpoint in the log, or after every update when dense=True.
    """
    report = StretchReport(bound=bound)
    if initial_check:
        report.checkpoints.append(_run_checkpoint(algo, graph, bound, fault))
    pending = False
    for ev in updates:
        if isinstance(ev, QueryCheckpoint):
            if not dense and pending:
                report.checkpoints.append(_run_checkpoint(algo, graph, bound, fault))
                pending = False
            continue
        if ev.kind == DELETE or ev.delta == INF:
            algo.delete(ev.u, ev.v)
        else:
            algo.increase(ev.u, ev.v, ev.delta)
        apply_update(graph, ev)
        pending = True
        if dense:
            report.checkpoints.append(_run_checkpoint(algo, graph, bound, fault))
            pending = False
    return report
