"""Seeded graph generators."""
from __future__ import annotations

import heapq
import math
import random
from fractions import Fraction

from .graph import Graph


def _prufer_tree_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    if n <= 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, w))
    return edges


def gen_random_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree from a random Pruefer sequence."""
    if n < 1:
        raise ValueError("a tree needs at least one vertex")
    return Graph.from_edges(n, _prufer_tree_edges(n, random.Random(seed)))


def edge_budget(n: int, avg_degree) -> int:
    """round(n * avg / 2), halves rounded up."""
    total = Fraction(n) * Fraction(str(avg_degree)) / 2
    return math.floor(total + Fraction(1, 2))


def gen_random_connected(n: int, avg_degree, seed: int) -> Graph:
    """Random Pruefer spanning tree plus uniformly drawn extra edges.

    The result has exactly ``round(n * avg_degree / 2)`` edges.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    budget = edge_budget(n, avg_degree)
    capacity = n * (n - 1) // 2
    if budget < n - 1:
        raise ValueError(f"edge budget {budget} cannot connect {n} vertices (needs {n - 1})")
    if budget > capacity:
        raise ValueError(f"edge budget {budget} exceeds complete-graph capacity {capacity}")
    rng = random.Random(seed)
    edges = {(min(u, v), max(u, v)) for u, v in _prufer_tree_edges(n, rng)}
    extra = budget - len(edges)
    free = capacity - len(edges)
    if extra <= free // 2:
        while extra:
            u, v = rng.sample(range(n), 2)
            key = (min(u, v), max(u, v))
            if key not in edges:
                edges.add(key)
                extra -= 1
    else:
        pool = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
        edges.update(rng.sample(pool, extra))
    return Graph(n, tuple(sorted(edges)))


def gen_generalized_petersen(n: int, k: int) -> Graph:
    """G(n, k): rim u_i -> i, inner v_i -> n + i.

    Besides the usual ``2 <= 2k < n`` this accepts ``k = n/2`` for even
    ``n >= 8``; there each inner edge v_i v_{i+k} arises twice, so the graph
    has 5n/2 edges instead of 3n.
    """
    if not (2 <= 2 * k < n or (2 * k == n and n >= 8)):
        raise ValueError(f"G(n, k) needs 2 <= 2k < n (or k = n/2, n >= 8), got n={n}, k={k}")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return Graph.from_edges(2 * n, edges)
