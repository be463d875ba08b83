"""Shared test utilities: tiny independent reference implementations.

These are deliberately naive (dict-based Dijkstra, matrix min-plus) so that
package code is always judged against something written separately.
"""

import heapq
import math
import random

from decapsp import DynamicGraph

INF = math.inf


def ref_dijkstra(adj, source):
    dist = {u: INF for u in adj}
    dist[source] = 0
    heap = [(0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if d > dist[u]:
            continue
        for v, w in adj[u].items():
            if d + w < dist[v]:
                dist[v] = d + w
                heapq.heappush(heap, (d + w, v))
    return dist


def ref_apsp(graph):
    return {s: ref_dijkstra(graph.adj, s) for s in graph.adj}


def minplus_product(a, b):
    n = len(a)
    out = [[INF] * n for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k in range(n):
            aik = ai[k]
            if aik == INF:
                continue
            bk = b[k]
            for j in range(n):
                cand = aik + bk[j]
                if cand < oi[j]:
                    oi[j] = cand
    return out


def minplus_hop_limited(graph, hops):
    """Shortest-path matrix restricted to paths of at most `hops` edges."""
    n = graph.n
    a = [[INF] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 0
    for u, v, w in graph.edges():
        a[u][v] = min(a[u][v], w)
        a[v][u] = min(a[v][u], w)
    out = a
    steps = 1
    while steps < hops:
        out = minplus_product(out, a)
        steps += 1
    return out


def rand_gnp(rng, n, density, max_weight=1):
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                edges.append((u, v, rng.randint(1, max_weight)))
    return DynamicGraph(n, edges)


def rand_connected(rng, n, extra_density=0.2, max_weight=1):
    """Random spanning tree plus extra edges; always connected at the start."""
    edges = []
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u = order[i]
        v = order[rng.randrange(i)]
        edges.append((min(u, v), max(u, v), rng.randint(1, max_weight)))
    present = {(u, v) for u, v, _ in edges}
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in present and rng.random() < extra_density:
                edges.append((u, v, rng.randint(1, max_weight)))
    return DynamicGraph(n, edges)


def deletion_order(rng, graph):
    edges = [(u, v) for u, v, _ in graph.edges()]
    rng.shuffle(edges)
    return edges
