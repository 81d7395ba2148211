"""Backtracking reference solver for tiny graphs, used to cross-check the DP."""
from __future__ import annotations

from itertools import combinations

from .errors import NotConnectedError
from .graph import Graph

ORACLE_CAP = 8


def _search(graph: Graph, allowed: frozenset[int], start: int, kind: str):
    n = graph.n
    adj = graph.adjacency
    limit = n * n
    full = (1 << n) - 1
    # Bounded vertices are in the mask iff already used, so the future of the
    # search depends only on (mask, endpoint). Keep the shallowest failed depth.
    failed: dict[tuple[int, int], int] = {}
    walk = [start]
    counts = [0] * n
    counts[start] = 1

    def done(mask, cur):
        if mask != full:
            return False
        if kind == "path" or n == 1:
            return True
        return cur != start and graph.has_edge(cur, start)

    def dfs(mask, cur):
        if done(mask, cur):
            return True
        depth = len(walk)
        if depth >= limit or failed.get((mask, cur), limit + 1) <= depth:
            return False
        for w in adj[cur]:
            if counts[w] and w not in allowed:
                continue
            counts[w] += 1
            walk.append(w)
            if dfs(mask | (1 << w), w):
                return True
            walk.pop()
            counts[w] -= 1
        failed[(mask, cur)] = depth
        return False

    if dfs(1 << start, start):
        return tuple(walk)
    return None


def exhaustive_oracle(graph: Graph, kind: str = "cycle") -> tuple[int, tuple[int, ...]]:
    """Minimum number of repeated vertices and a witness walk, by brute force."""
    n = graph.n
    if n > ORACLE_CAP:
        raise ValueError(f"oracle is limited to n <= {ORACLE_CAP}")
    if kind not in ("path", "cycle"):
        raise ValueError(f"unknown kind {kind!r}")
    if n == 0:
        raise ValueError("empty graph")
    if not graph.is_connected():
        raise NotConnectedError("graph is not connected")
    starts = [0] if kind == "cycle" else list(range(n))
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            allowed = frozenset(combo)
            for s in starts:
                walk = _search(graph, allowed, s, kind)
                if walk is not None:
                    return size, walk
    raise AssertionError("unreachable on a connected graph")
