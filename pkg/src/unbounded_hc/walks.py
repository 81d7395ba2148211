"""Walk verification, normalisation and the rotation primitives."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Literal, Sequence

from .graph import Graph

Kind = Literal["path", "cycle"]
Walk = tuple[int, ...]

MISSING_VERTEX = "missing-vertex"
NON_EDGE_STEP = "non-edge-step"
ENDS_NOT_ADJACENT = "ends-not-adjacent"
CONSECUTIVE_REPEAT = "consecutive-repeat"
UNKNOWN_VERTEX = "unknown-vertex"
EMPTY_WALK = "empty-walk"
UNCLAIMED_REPEAT = "unclaimed-repeat"


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    kind: str
    k: int
    repeated: frozenset[int] = field(default_factory=frozenset)
    failure: str | None = None
    detail: str | None = None

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "kind": self.kind,
            "k": self.k,
            "repeated": sorted(self.repeated),
            "failure": self.failure,
            "detail": self.detail,
        }


def repeated_vertices(walk: Sequence[int]) -> frozenset[int]:
    return frozenset(v for v, c in Counter(walk).items() if c > 1)


def verify_walk(graph: Graph, walk: Sequence[int], kind: Kind = "cycle",
                claimed=None) -> VerificationReport:
    """Check ``walk`` as a k-unbounded Hamiltonian path or cycle.

    Never raises; failures come back in the report.
    """
    if kind not in ("path", "cycle"):
        raise ValueError(f"kind must be 'path' or 'cycle', not {kind!r}")
    walk = tuple(walk)
    repeated = repeated_vertices(walk)
    k = len(repeated)

    def fail(reason, detail=None):
        return VerificationReport(False, kind, k, repeated, reason, detail)

    if not walk:
        return fail(EMPTY_WALK)
    for i, v in enumerate(walk):
        if not 0 <= v < graph.n:
            return fail(UNKNOWN_VERTEX, f"position {i}: {v}")
    for i in range(len(walk) - 1):
        a, b = walk[i], walk[i + 1]
        if a == b:
            return fail(CONSECUTIVE_REPEAT, f"position {i}: {a}")
        if not graph.has_edge(a, b):
            return fail(NON_EDGE_STEP, f"position {i}: {a}-{b}")
    missing = set(range(graph.n)) - set(walk)
    if missing:
        return fail(MISSING_VERTEX, ",".join(map(str, sorted(missing))))
    if kind == "cycle" and len(walk) > 1:
        if walk[0] == walk[-1] or not graph.has_edge(walk[0], walk[-1]):
            return fail(ENDS_NOT_ADJACENT, f"{walk[0]}-{walk[-1]}")
    if kind == "cycle" and len(walk) == 1 and graph.n != 1:
        return fail(ENDS_NOT_ADJACENT)
    if claimed is not None and not repeated <= frozenset(claimed):
        extra = sorted(repeated - frozenset(claimed))
        return fail(UNCLAIMED_REPEAT, ",".join(map(str, extra)))
    return VerificationReport(True, kind, k, repeated)


def normalize_walk(graph: Graph, walk: Sequence[int], kind: Kind = "cycle") -> Walk:
    """Drop redundant excursions until none is left.

    An excursion is the stretch after one occurrence of ``x`` up to and
    including the next occurrence of ``x``; it is dropped when every vertex in
    it still occurs in the rest of the walk. At the fixpoint each vertex occurs
    at most ``n`` times, and the repeated set can only shrink.
    """
    report = verify_walk(graph, walk, kind)
    if not report.valid:
        raise ValueError(f"cannot normalise an invalid walk ({report.failure})")
    w = list(walk)
    changed = True
    while changed:
        changed = False
        counts = Counter(w)
        last_seen: dict[int, int] = {}
        for q, x in enumerate(w):
            p = last_seen.get(x)
            last_seen[x] = q
            if p is None:
                continue
            segment = w[p + 1:q + 1]
            inside = Counter(segment)
            if all(counts[v] > c for v, c in inside.items()):
                del w[p + 1:q + 1]
                changed = True
                break
    return tuple(w)


def rotate_tail(path: Sequence[int], i: int) -> Walk:
    """Posa rotation at the tail along the chord path[i-1]-path[-1].

    The tail becomes ``path[i]``; the caller guarantees the chord exists.
    """
    return tuple(path[:i]) + tuple(reversed(path[i:]))


def rotate_head(path: Sequence[int], i: int) -> Walk:
    """Mirror of :func:`rotate_tail`: chord path[i+1]-path[0], new head path[i]."""
    return tuple(reversed(path[:i + 1])) + tuple(path[i + 1:])


def open_cycle_at(path: Sequence[int], c: int) -> Walk:
    """Re-anchor a walk whose ends are adjacent so that ``path[c]`` is the tail."""
    path = tuple(path)
    if c == 0:
        return path[1:] + path[:1]
    return tuple(reversed(path[:c])) + tuple(reversed(path[c:]))
