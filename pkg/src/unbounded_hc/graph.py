"""Simple undirected graphs on vertices ``0..n-1``."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from .errors import NotConnectedError


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u > v:
                raise ValueError("edges must be stored as (min, max)")
            if (u, v) in seen:
                raise ValueError(f"parallel edge ({u}, {v})")
            seen.add((u, v))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph, normalising pair order and dropping duplicates."""
        norm = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            norm.add((u, v) if u < v else (v, u))
        return cls(n, tuple(sorted(norm)))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    @cached_property
    def matrix(self) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=bool)
        if self.edges:
            e = np.asarray(self.edges)
            m[e[:, 0], e[:, 1]] = True
            m[e[:, 1], e[:, 0]] = True
        m.setflags(write=False)
        return m

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if len(self.adjacency[v]) == 1]

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.component_of(0)) == self.n

    def component_of(self, start: int, removed: int | None = None) -> set[int]:
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in self.adjacency[v]:
                if w != removed and w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen

    def components_without(self, v: int) -> int:
        """Number of connected components once ``v`` is deleted."""
        remaining = set(range(self.n)) - {v}
        count = 0
        while remaining:
            comp = self.component_of(next(iter(remaining)), removed=v)
            remaining -= comp
            count += 1
        return count

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()


def cut_vertices(graph: Graph) -> frozenset[int]:
    """Articulation points via iterative DFS low-link."""
    n = graph.n
    if not graph.is_connected():
        raise NotConnectedError("cut vertices are only defined here for connected graphs")
    if n <= 2:
        return frozenset()
    adj = graph.adjacency
    disc = [-1] * n
    low = [0] * n
    cuts = set()
    timer = 0
    root = 0
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    # frames: (vertex, parent, next neighbour index)
    stack = [(root, -1, 0)]
    while stack:
        v, parent, idx = stack[-1]
        if idx < len(adj[v]):
            stack[-1] = (v, parent, idx + 1)
            w = adj[v][idx]
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, v, 0))
            elif w != parent:
                low[v] = min(low[v], disc[w])
        else:
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if parent == root:
                root_children += 1
            elif low[v] >= disc[parent]:
                cuts.add(parent)
    if root_children > 1:
        cuts.add(root)
    return frozenset(cuts)


def cut_vertices_by_removal(graph: Graph) -> frozenset[int]:
    """Quadratic reference: delete each vertex and recount components."""
    if not graph.is_connected():
        raise NotConnectedError("graph is not connected")
    return frozenset(v for v in range(graph.n) if graph.n > 1 and graph.components_without(v) > 1)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    """Centre 0 joined to ``leaves`` leaves."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
