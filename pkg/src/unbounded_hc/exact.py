"""Exact minimum via a bitmask DP over (visited set, endpoint).

Walks are anchored at vertex 0. ``reach[mask]`` holds, as a bitset, every
endpoint ``j`` for which some walk from 0 first-visits exactly ``mask`` and
ends at ``j`` while only repeating vertices of the allowed set. Only masks
containing vertex 0 are stored, indexed by ``mask >> 1``.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np
from numba import njit

from .errors import BudgetExceeded, NotConnectedError
from .graph import Graph, cut_vertices
from .walks import verify_walk

DEFAULT_CAP = 24

_START = -1
_BFS = 32


@njit(cache=True)
def _lowest_bit(x):
    i = 0
    while not (x >> i) & 1:
        i += 1
    return i


@njit(cache=True)
def _check(n, adj_bits, ub_bits, reach, pred, queue):
    full = (1 << n) - 1
    reach[0] = 1
    pred[0] = _START
    for mask in range(3, full + 1, 2):
        idx = mask >> 1
        r = 0
        for j in range(1, n):
            if (mask >> j) & 1:
                prev = reach[(mask ^ (1 << j)) >> 1] & adj_bits[j]
                if prev:
                    r |= 1 << j
                    pred[idx * n + j] = _lowest_bit(prev)
        if r == 0:
            reach[idx] = 0
            continue
        # Multisource BFS through already-visited unbounded vertices.
        allowed = mask & ub_bits
        head = 0
        tail = 0
        for j in range(n):
            if (r >> j) & 1:
                queue[tail] = j
                tail += 1
        while head < tail:
            u = queue[head]
            head += 1
            nxt = adj_bits[u] & allowed & ~r
            while nxt:
                w = _lowest_bit(nxt)
                nxt &= nxt - 1
                r |= 1 << w
                pred[idx * n + w] = u + _BFS
                queue[tail] = w
                tail += 1
        reach[idx] = r
    last = reach[full >> 1] & adj_bits[0]
    if last == 0:
        return -1
    return _lowest_bit(last)


class _Workspace:
    """DP tables reused across candidate sets for one graph."""

    def __init__(self, graph: Graph):
        n = graph.n
        self.n = n
        self.adj_bits = np.zeros(n, dtype=np.int64)
        for u, v in graph.edges:
            self.adj_bits[u] |= 1 << v
            self.adj_bits[v] |= 1 << u
        size = 1 << (n - 1)
        self.reach = np.zeros(size, dtype=np.int64)
        self.pred = np.zeros(size * n, dtype=np.int8)
        self.queue = np.zeros(n, dtype=np.int64)

    def run(self, ub_bits: int) -> tuple[int, ...] | None:
        n = self.n
        end = _check(n, self.adj_bits, np.int64(ub_bits), self.reach, self.pred, self.queue)
        if end < 0:
            return None
        mask, j = (1 << n) - 1, end
        rev = [j]
        while True:
            p = int(self.pred[(mask >> 1) * n + j])
            if p == _START:
                break
            if p >= _BFS:
                j = p - _BFS
            else:
                mask ^= 1 << j
                j = p
            rev.append(j)
        return tuple(reversed(rev))


def _check_size(graph: Graph, cap: int) -> None:
    if graph.n > cap:
        raise ValueError(f"exact solver is capped at n={cap}, got n={graph.n}")


def feasible_with_unbounded(graph: Graph, ub, cap: int = DEFAULT_CAP,
                            _ws: _Workspace | None = None) -> tuple[int, ...] | None:
    """A cycle walk repeating only members of ``ub``, or None if none exists."""
    _check_size(graph, cap)
    ub = frozenset(ub)
    if any(not 0 <= v < graph.n for v in ub):
        raise ValueError("unbounded vertex out of range")
    if graph.n == 0:
        raise ValueError("empty graph")
    if graph.n == 1:
        return (0,)
    if not graph.is_connected():
        return None
    ws = _ws or _Workspace(graph)
    bits = 0
    for v in ub:
        bits |= 1 << v
    return ws.run(bits)


@dataclass(frozen=True)
class ExactResult:
    m: int
    walk: tuple[int, ...]
    unbounded: frozenset[int]
    subsets_tried: int
    checks_run: int


def colex_rank(members) -> int:
    """0-based position of a set among equal-size masks in ascending order."""
    return sum(comb(b, i) for i, b in enumerate(sorted(members), start=1))


def solve_exact(graph: Graph, budget: float | None = None,
                cap: int = DEFAULT_CAP) -> ExactResult:
    """Smallest unbounded set (by size, then ascending mask) admitting a cycle.

    Candidates that miss a cut vertex or contain a leaf are skipped without
    running the DP: the former can never work, and any feasible set holding a
    leaf stays feasible with the leaf dropped, so it cannot be minimal.
    ``subsets_tried`` still counts in the unpruned order.
    """
    _check_size(graph, cap)
    n = graph.n
    if n == 0:
        raise ValueError("empty graph")
    if not graph.is_connected():
        raise NotConnectedError("graph is not connected")
    if n == 1:
        return ExactResult(0, (0,), frozenset(), 1, 0)
    deadline = None if budget is None else time.monotonic() + budget
    cuts = cut_vertices(graph)
    leaves = set(graph.leaves()) if n >= 3 else set()
    free = [v for v in range(n) if v not in cuts and v not in leaves]
    ws = _Workspace(graph)
    checks = 0
    for size in range(len(cuts), n + 1):
        extra = size - len(cuts)
        if extra > len(free):
            break
        candidates = sorted(
            (cuts | frozenset(c) for c in combinations(free, extra)),
            key=lambda s: sum(1 << v for v in s),
        )
        for ub in candidates:
            if deadline is not None and time.monotonic() > deadline:
                raise BudgetExceeded("time budget exhausted", size)
            checks += 1
            walk = feasible_with_unbounded(graph, ub, cap, _ws=ws)
            if walk is not None:
                report = verify_walk(graph, walk, "cycle", claimed=ub)
                assert report.valid, report
                tried = sum(comb(n, s) for s in range(size)) + colex_rank(ub) + 1
                return ExactResult(size, walk, ub, tried, checks)
    raise AssertionError("every vertex unbounded must be feasible on a connected graph")
