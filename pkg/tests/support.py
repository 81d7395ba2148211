"""Shared fixtures: small named graphs and seeded random cases."""
from __future__ import annotations

import heapq
import random
from fractions import Fraction

from unbounded_hc.generators import gen_random_connected
from unbounded_hc.graph import Graph, path_graph


def random_connected_case(seed: int, n_lo: int, n_hi: int) -> Graph:
    """Connected graph with n and edge count both drawn uniformly."""
    rng = random.Random(seed)
    n = rng.randint(n_lo, n_hi)
    m = rng.randint(n - 1, n * (n - 1) // 2)
    return gen_random_connected(n, Fraction(2 * m, n), seed)


def bowtie_graph(closed: bool = False) -> Graph:
    # a..f are 0..5
    edges = [(0, 1), (1, 2), (2, 3), (2, 4), (3, 4), (2, 5)]
    if closed:
        edges.append((0, 5))
    return Graph.from_edges(6, edges)


BOWTIE_WALK = (0, 1, 2, 3, 4, 2, 5)


def three_chord_path_graph(extra_vertex: bool = False) -> Graph:
    """Path v0..v7 with chords v0-v2, v1-v7, v0-v4 (v4 is the unbounded one).

    With ``extra_vertex`` an unvisited vertex 8 hangs off v4, so rerouting has
    somewhere to go.
    """
    edges = list(path_graph(8).edges) + [(0, 2), (1, 7), (0, 4)]
    n = 8
    if extra_vertex:
        edges.append((4, 8))
        n = 9
    return Graph.from_edges(n, edges)


def chorded_path_graph() -> Graph:
    """Path v0..v7 with chords v1-v7 and v0-v2."""
    return Graph.from_edges(8, list(path_graph(8).edges) + [(1, 7), (0, 2)])


def dijkstra(state_count, sources, arcs):
    dist = [float("inf")] * state_count
    heap = []
    for s in sources:
        dist[s] = 0
        heap.append((0, s))
    heapq.heapify(heap)
    while heap:
        d, u = heapq.heappop(heap)
        if d > dist[u]:
            continue
        for v, w in arcs.get(u, ()):
            if d + w < dist[v]:
                dist[v] = d + w
                heapq.heappush(heap, (d + w, v))
    return dist


def random_01_digraph(rng: random.Random, size: int, density: float):
    arcs: dict[int, list[tuple[int, int]]] = {}
    for u in range(size):
        for v in range(size):
            if u != v and rng.random() < density:
                arcs.setdefault(u, []).append((v, rng.randint(0, 1)))
    return arcs


# Filled in by the acceptance tests and printed by conftest at session end.
ACCEPTANCE_LINES: dict[int, str] = {}
