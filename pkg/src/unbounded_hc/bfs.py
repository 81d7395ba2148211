from __future__ import annotations

from collections import deque
from typing import Callable, Iterable

INF = float("inf")


def zero_one_bfs(state_count: int, sources: Iterable[int],
                 expand: Callable[[int], Iterable[tuple[int, int]]]) -> list[float]:
    """Multisource shortest distances when every edge weighs 0 or 1.

    ``expand(s)`` yields ``(next_state, weight)``. Zero-weight successors go
    to the front of the deque, unit-weight ones to the back, so states leave
    the deque in non-decreasing distance order. Unreached states keep ``inf``.
    """
    dist: list[float] = [INF] * state_count
    done = [False] * state_count
    dq: deque[int] = deque()
    for s in sources:
        if dist[s] != 0:
            dist[s] = 0
            dq.append(s)
    while dq:
        u = dq.popleft()
        if done[u]:
            continue
        done[u] = True
        du = dist[u]
        for v, w in expand(u):
            if w not in (0, 1):
                raise ValueError(f"edge weight {w} is not 0 or 1")
            nd = du + w
            if nd < dist[v]:
                dist[v] = nd
                if w == 0:
                    dq.appendleft(v)
                else:
                    dq.append(v)
    return dist
