"""Greedy unbounded Hamiltonian cycle heuristic with 0-1 BFS rerouting.

The walk grows greedily from a maximum-degree vertex, always stepping to the
unvisited neighbour with the fewest unvisited neighbours of its own. When both
ends are stuck, a 0-1 BFS over endpoint states reroutes the tail using
rotations (free), revisits of already unbounded vertices (free) and revisits
that mark a new vertex unbounded (cost 1). Closing the final walk into a cycle
uses the same machinery, over endpoint pairs in full mode and over the tail
alone in fast mode.
"""
from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from typing import Literal

from .errors import NotConnectedError, SearchStuck
from .graph import Graph, cut_vertices
from .walks import verify_walk

CYCLE = "cycle"
NEXT = "next"
NONE = "none"


@dataclass(frozen=True)
class HeuristicConfig:
    cap_factor: int = 10
    state_factor: int = 50


@dataclass
class SearchState:
    graph: Graph
    path: list[int]
    ub: set[int]
    visited: list[bool]
    deg: list[int]
    counters: dict = field(default_factory=lambda: {
        "reroutes": 0, "states_expanded": 0, "rotations": 0, "extensions": 0,
    })

    @classmethod
    def empty(cls, graph: Graph) -> SearchState:
        return cls(graph, [], set(), [False] * graph.n,
                   [graph.degree(v) for v in range(graph.n)])

    def visit(self, v: int) -> None:
        """Append ``v`` as a first visit and update unvisited-neighbour counts."""
        self.path.append(v)
        if not self.visited[v]:
            self.visited[v] = True
            for w in self.graph.adjacency[v]:
                self.deg[w] -= 1

    @property
    def all_visited(self) -> bool:
        return all(self.visited)


@dataclass(frozen=True)
class SolveReport:
    walk: tuple[int, ...]
    unbounded: frozenset[int]
    mode: str
    reroutes: int
    states_expanded: int
    rotations: int
    extensions: int
    path_length: int
    wall_time: float

    @property
    def k(self) -> int:
        return len(self.unbounded)


def mark_cut_unbounded(state: SearchState) -> None:
    state.ub |= cut_vertices(state.graph)


def preemptive_cycle_check(graph: Graph, path, is_last: bool,
                           visited=None, deg=None) -> tuple[str, tuple[int, ...], int | None]:
    """Try to close ``path`` by one suffix reversal, then pick an extension.

    Returns ``(status, path, vertex)``. ``status`` is ``"none"`` when the ends
    cannot be made adjacent, and ``"cycle"`` when they are and either
    ``is_last`` is set or nothing unvisited hangs off the cycle. Otherwise it
    is ``"next"``: the cycle is reopened at the path vertex owning the
    cheapest unvisited neighbour, which is returned for the caller to append.
    """
    v = list(path)
    adj = graph.neighbor_sets
    s, e = v[0], v[-1]
    if e not in adj[s]:
        for i in range(1, len(v) - 1):
            if e in adj[v[i]] and v[i + 1] in adj[s]:
                v[i + 1:] = v[i + 1:][::-1]
                break
    e = v[-1]
    if s == e or e not in adj[s]:
        return NONE, tuple(v), None
    if is_last:
        return CYCLE, tuple(v), None
    best = None
    at = None
    for i, x in enumerate(v):
        for k in graph.adjacency[x]:
            if visited[k]:
                continue
            if best is None or deg[k] < deg[best] or (deg[k] == deg[best] and k < best):
                best, at = k, i
    if best is None:
        return CYCLE, tuple(v), None
    if at == 0:
        v = v[1:] + v[:1]
    else:
        v = v[:at][::-1] + v[at:][::-1]
    return NEXT, tuple(v), best


def _interior_moves(graph: Graph, cur: tuple[int, ...], ub, marks, head_free: bool):
    """Successor arrangements of ``cur`` as (new_path, cost, new_mark, is_rotation).

    New paths keep the moved endpoint last.
    """
    adj = graph.neighbor_sets
    f, last = cur[0], cur[-1]
    size = len(cur)
    for i in range(1, size - 1):
        nv = cur[i]
        free = nv in ub or nv in marks
        cost = 0 if free else 1
        mark = None if free else nv
        if head_free and nv in adj[f]:
            yield cur[::-1] + (nv,), cost, mark, False
        if nv in adj[last]:
            yield cur + (nv,), cost, mark, False
        if i >= 2 and cur[i - 1] in adj[last]:
            yield cur[:i] + cur[i:][::-1], 0, None, True
        if head_free and i < size - 2 and cur[i + 1] in adj[f]:
            # head rotation, then flip so the new endpoint is the tail
            yield cur[i + 1:][::-1] + cur[:i + 1], 0, None, True


def reroute(state: SearchState, is_last: bool, ceiling: int | None = None) -> int | None:
    """0-1 BFS over tail vertices; commits the winning arrangement into ``state``.

    Without ``is_last`` it stops at the first tail with unvisited neighbours
    (or an extension found by the cycle check) and returns that vertex. With
    ``is_last`` the head stays fixed and the search stops once the ends are
    adjacent.
    """
    graph = state.graph
    state.counters["reroutes"] += 1
    path = tuple(state.path)
    done = [False] * graph.n
    done[path[0]] = True
    best: dict[int, int] = {path[-1]: 0}
    entries: dict[int, tuple[int, tuple[int, ...], frozenset[int]]] = {
        path[-1]: (0, path, frozenset()),
    }
    queue: deque[int] = deque([path[-1]])
    while queue:
        v = queue.popleft()
        dist, cur, marks = entries[v]
        if not is_last and state.deg[v] > 0:
            _commit(state, cur, marks)
            return v
        if done[v]:
            continue
        done[v] = True
        state.counters["states_expanded"] += 1
        if ceiling is not None and state.counters["states_expanded"] > ceiling:
            raise SearchStuck("state ceiling reached while rerouting")
        status, closed, nxt = preemptive_cycle_check(
            graph, cur, is_last, state.visited, state.deg)
        if status == CYCLE or status == NEXT:
            _commit(state, closed, marks)
            return nxt
        for new, cost, mark, rot in _interior_moves(graph, cur, state.ub, marks, not is_last):
            key = new[-1]
            nd = dist + cost
            if done[key] or nd >= best.get(key, nd + 1):
                continue
            best[key] = nd
            entries[key] = (nd, new, marks | {mark} if mark is not None else marks)
            if rot:
                state.counters["rotations"] += 1
            if cost == 0:
                queue.appendleft(key)
            else:
                queue.append(key)
    raise SearchStuck("reroute exhausted its state space")


def path_to_cycle(state: SearchState, ceiling: int | None = None) -> tuple[int, ...]:
    """0-1 BFS over unordered endpoint pairs until the ends are adjacent."""
    graph = state.graph
    adj = graph.neighbor_sets
    path = tuple(state.path)

    def key_of(p):
        a, b = p[0], p[-1]
        return (a, b) if a <= b else (b, a)

    start = key_of(path)
    best = {start: 0}
    entries = {start: (0, path, frozenset())}
    done: set[tuple[int, int]] = set()
    queue: deque[tuple[int, int]] = deque([start])
    while queue:
        pk = queue.popleft()
        if pk in done:
            continue
        done.add(pk)
        dist, cur, marks = entries[pk]
        state.counters["states_expanded"] += 1
        if ceiling is not None and state.counters["states_expanded"] > ceiling:
            raise SearchStuck("state ceiling reached while closing the cycle")
        status, closed, _ = preemptive_cycle_check(graph, cur, True)
        if status == CYCLE:
            _commit(state, closed, marks)
            return closed
        f, last = cur[0], cur[-1]
        size = len(cur)
        moves = []
        for i in range(1, size - 1):
            nv = cur[i]
            free = nv in state.ub or nv in marks
            cost = 0 if free else 1
            if nv in adj[f]:
                moves.append(((nv,) + cur, cost, None if free else nv, False))
            if nv in adj[last]:
                moves.append((cur + (nv,), cost, None if free else nv, False))
            if i >= 2 and cur[i - 1] in adj[last]:
                moves.append((cur[:i] + cur[i:][::-1], 0, None, True))
            if i < size - 2 and cur[i + 1] in adj[f]:
                moves.append((cur[:i + 1][::-1] + cur[i + 1:], 0, None, True))
        for new, cost, mark, rot in moves:
            key = key_of(new)
            nd = dist + cost
            if key in done or nd >= best.get(key, nd + 1):
                continue
            best[key] = nd
            entries[key] = (nd, new, marks | {mark} if mark is not None else marks)
            if rot:
                state.counters["rotations"] += 1
            if cost == 0:
                queue.appendleft(key)
            else:
                queue.append(key)
    raise SearchStuck("path-to-cycle search exhausted its state space")


def _commit(state: SearchState, path, marks) -> None:
    state.path = list(path)
    state.ub |= marks


def _greedy_next(state: SearchState, v: int) -> int | None:
    best = None
    for w in state.graph.adjacency[v]:
        if not state.visited[w] and (best is None or state.deg[w] < state.deg[best]):
            best = w
    return best


def solve_heuristic(graph: Graph, mode: Literal["full", "fast"] = "full",
                    config: HeuristicConfig | None = None) -> SolveReport:
    if mode not in ("full", "fast"):
        raise ValueError(f"mode must be 'full' or 'fast', not {mode!r}")
    config = config or HeuristicConfig()
    t0 = time.perf_counter()
    n = graph.n
    if n == 0:
        raise ValueError("empty graph")
    if not graph.is_connected():
        raise NotConnectedError("graph is not connected")
    state = SearchState.empty(graph)
    if n <= 2:
        walk = tuple(range(n))
        return _report(graph, walk, frozenset(), mode, state, t0)
    cap = config.cap_factor * n
    ceiling = config.state_factor * n * n
    mark_cut_unbounded(state)
    start = min(range(n), key=lambda v: (-graph.degree(v), v))
    state.visit(start)
    while not state.all_visited:
        tail = state.path[-1]
        if state.deg[tail] > 0:
            state.visit(_greedy_next(state, tail))
        elif state.deg[state.path[0]] > 0:
            state.path.reverse()
        else:
            nxt = reroute(state, False, ceiling)
            if nxt is not None and nxt != state.path[-1]:
                state.counters["extensions"] += 1
                state.visit(nxt)
        if len(state.path) > cap:
            raise SearchStuck(f"walk length exceeded {cap}")
    if mode == "full":
        path_to_cycle(state, ceiling)
    else:
        reroute(state, True, ceiling)
    if len(state.path) > cap:
        raise SearchStuck(f"walk length exceeded {cap}")
    return _report(graph, tuple(state.path), frozenset(state.ub), mode, state, t0)


def _report(graph, walk, ub, mode, state, t0) -> SolveReport:
    check = verify_walk(graph, walk, "cycle", claimed=ub)
    if not check.valid:
        raise SearchStuck(f"heuristic produced an invalid walk ({check.failure})")
    c = state.counters
    return SolveReport(walk, ub, mode, c["reroutes"], c["states_expanded"],
                       c["rotations"], c["extensions"], len(walk),
                       time.perf_counter() - t0)
