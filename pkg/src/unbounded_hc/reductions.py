"""Gadget reductions to plain Hamiltonian cycle and to asymmetric TSP."""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass

from .graph import Graph
from .walks import verify_walk


def _collapse_cyclic(labels) -> tuple[int, ...]:
    out: list[int] = []
    for x in labels:
        if not out or out[-1] != x:
            out.append(x)
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return tuple(out)


# -- Hamiltonian cycle gadget ----------------------------------------------

@dataclass(frozen=True)
class HcpInstance:
    graph: Graph
    label: tuple[int, ...]
    unbounded: frozenset[int]
    members: tuple[tuple[int, ...], ...]

    def to_json(self) -> str:
        return json.dumps({
            "schema": 1,
            "kind": "hcp",
            "n": self.graph.n,
            "unbounded": sorted(self.unbounded),
            "label": list(self.label),
        })


def to_hcp_instance(graph: Graph, ub) -> HcpInstance:
    """Blow each unbounded vertex up into a cycle of length n.

    Every gadget vertex inherits all the original vertex's edges, so two
    adjacent unbounded vertices become a complete bipartite join.
    """
    n = graph.n
    ub = frozenset(ub)
    if any(not 0 <= v < n for v in ub):
        raise ValueError("unbounded vertex out of range")
    members: list[tuple[int, ...]] = []
    label: list[int] = []
    for v in range(n):
        size = n if v in ub else 1
        members.append(tuple(range(len(label), len(label) + size)))
        label.extend([v] * size)
    edges = []
    for v in ub:
        ring = members[v]
        if len(ring) == 2:
            edges.append((ring[0], ring[1]))
        elif len(ring) >= 3:
            edges.extend((ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring)))
    for u, v in graph.edges:
        edges.extend((a, b) for a in members[u] for b in members[v])
    return HcpInstance(Graph.from_edges(len(label), edges), tuple(label), ub, tuple(members))


def is_hamiltonian_cycle(graph: Graph, cycle) -> bool:
    cycle = tuple(cycle)
    if sorted(cycle) != list(range(graph.n)):
        return False
    if graph.n == 1:
        return True
    if graph.n == 2:
        return graph.has_edge(cycle[0], cycle[1])
    return all(graph.has_edge(cycle[i - 1], cycle[i]) for i in range(graph.n))


def hcp_cycle_to_walk(instance: HcpInstance, cycle) -> tuple[int, ...]:
    if not is_hamiltonian_cycle(instance.graph, cycle):
        raise ValueError("not a Hamiltonian cycle of the construction")
    return _collapse_cyclic(instance.label[x] for x in cycle)


def walk_to_hcp_cycle(instance: HcpInstance, walk) -> tuple[int, ...]:
    """Inverse mapping: the i-th visit of u uses the i-th ring vertex, and the
    unused ring remainder is spliced in after the last visit."""
    n = len(instance.members)
    counts = Counter(walk)
    if any(c > n for c in counts.values()):
        raise ValueError("walk must be normalised (at most n visits per vertex)")
    seen: Counter = Counter()
    out: list[int] = []
    for v in walk:
        ring = instance.members[v]
        if len(ring) == 1:
            if counts[v] > 1:
                raise ValueError(f"bounded vertex {v} repeats")
            out.append(ring[0])
            continue
        seen[v] += 1
        i = seen[v]
        out.append(ring[i - 1])
        if i == counts[v]:
            out.extend(ring[i:])
    # a gadget vertex absent from the walk entirely is caught here
    if not is_hamiltonian_cycle(instance.graph, out):
        raise ValueError("walk does not lift to a Hamiltonian cycle")
    return tuple(out)


def find_hamiltonian_cycle(graph: Graph) -> tuple[int, ...] | None:
    """Backtracking Hamiltonian cycle search from vertex 0 with a dead-state memo."""
    n = graph.n
    if n == 0:
        return None
    if n == 1:
        return (0,)
    if n == 2:
        return (0, 1) if graph.has_edge(0, 1) else None
    adj = graph.adjacency
    full = (1 << n) - 1
    dead: set[tuple[int, int]] = set()
    path = [0]

    def dfs(mask: int, cur: int) -> bool:
        if mask == full:
            return graph.has_edge(cur, 0)
        if (mask, cur) in dead:
            return False
        for w in adj[cur]:
            if not (mask >> w) & 1:
                path.append(w)
                if dfs(mask | (1 << w), w):
                    return True
                path.pop()
        dead.add((mask, cur))
        return False

    return tuple(path) if dfs(1, 0) else None


# -- asymmetric TSP gadget -------------------------------------------------

@dataclass(frozen=True)
class AtspInstance:
    n: int
    node_count: int
    arcs: dict
    node_map: tuple[dict, ...]

    def a(self, v: int, i: int) -> int:
        return self.node_map[v]["a"][i - 1]

    def b(self, v: int, i: int) -> int:
        return self.node_map[v]["b"][i - 1]

    def c(self, v: int, i: int) -> int:
        return self.node_map[v]["c"][i - 1]

    def owner(self, node: int) -> int:
        return node // (3 * self.n)

    def to_json(self) -> str:
        return json.dumps({
            "schema": 1,
            "kind": "atsp",
            "n": self.n,
            "nodes": self.node_count,
            "node_map": [dict(m) for m in self.node_map],
        })


def atsp_arc_count(n: int, m: int) -> int:
    """Closed form for the arcs :func:`to_atsp_instance` builds."""
    return 2 * m * (n + 1) ** 2 + 2 * n * (3 * n - 1)


def to_atsp_instance(graph: Graph) -> AtspInstance:
    """Each vertex becomes a 3 x n ladder (columns a, b, c).

    Ladder rungs and rails are arc pairs of weight 0 except ``a_1 -> b_1``,
    which costs 1. Crossing to a neighbour leaves from ``c_1..c_n`` or ``a_1``
    and lands on ``a_1..a_n`` or ``c_n``.
    """
    n = graph.n
    if n < 2:
        raise ValueError("the ATSP construction needs n >= 2")
    node_map = []
    for v in range(n):
        base = 3 * n * v
        node_map.append({
            "a": list(range(base, base + n)),
            "b": list(range(base + n, base + 2 * n)),
            "c": list(range(base + 2 * n, base + 3 * n)),
        })
    arcs: dict[tuple[int, int], int] = {}

    def both(x, y):
        arcs[(x, y)] = 0
        arcs[(y, x)] = 0

    for v in range(n):
        a, b, c = node_map[v]["a"], node_map[v]["b"], node_map[v]["c"]
        for i in range(n):
            both(a[i], b[i])
            both(b[i], c[i])
            if i >= 1:
                both(a[i], c[i - 1])
        arcs[(a[0], b[0])] = 1
    for u, v in graph.edges:
        for x, y in ((u, v), (v, u)):
            exits = node_map[x]["c"] + [node_map[x]["a"][0]]
            entries = node_map[y]["a"] + [node_map[y]["c"][-1]]
            for s in exits:
                for t in entries:
                    arcs[(s, t)] = 0
    return AtspInstance(n, 3 * n * n, arcs, tuple(node_map))


def emit_tsplib_atsp(instance: AtspInstance, name: str = "unbounded") -> str:
    """TSPLIB ATSP, explicit full matrix. Missing arcs and the diagonal get n + 1."""
    big = instance.n + 1
    size = instance.node_count
    lines = [
        f"NAME: {name}",
        "TYPE: ATSP",
        f"DIMENSION: {size}",
        "EDGE_WEIGHT_TYPE: EXPLICIT",
        "EDGE_WEIGHT_FORMAT: FULL_MATRIX",
        "EDGE_WEIGHT_SECTION",
    ]
    arcs = instance.arcs
    for i in range(size):
        lines.append(" ".join(str(arcs.get((i, j), big)) for j in range(size)))
    lines.append("EOF")
    return "\n".join(lines) + "\n"


def tour_weight(instance: AtspInstance, tour) -> int:
    """Weight of a closed tour; raises if it is not a Hamiltonian tour."""
    tour = tuple(tour)
    if sorted(tour) != list(range(instance.node_count)):
        raise ValueError("tour must visit every node exactly once")
    total = 0
    for i in range(len(tour)):
        arc = (tour[i - 1], tour[i])
        if arc not in instance.arcs:
            raise ValueError(f"tour uses missing arc {arc}")
        total += instance.arcs[arc]
    return total


def walk_to_atsp_tour(instance: AtspInstance, graph: Graph, walk) -> tuple[int, ...]:
    """Lift a cycle walk to a tour of weight equal to its repeat count.

    A single visit sweeps the ladder bottom-up from ``c_n`` to ``a_1``. Visit
    ``i`` of a repeated vertex takes row ``i`` (``a_i, b_i, c_i``) and the
    final visit finishes every remaining row down to ``c_n``.
    """
    n = instance.n
    report = verify_walk(graph, walk, "cycle")
    if not report.valid:
        raise ValueError(f"invalid cycle walk ({report.failure})")
    counts = Counter(walk)
    if max(counts.values()) > n:
        raise ValueError("walk must be normalised (at most n visits per vertex)")
    seen: Counter = Counter()
    tour: list[int] = []
    for v in walk:
        if counts[v] == 1:
            for i in range(n, 0, -1):
                tour += [instance.c(v, i), instance.b(v, i), instance.a(v, i)]
            continue
        seen[v] += 1
        i = seen[v]
        last = n if i == counts[v] else i
        for r in range(i, last + 1):
            tour += [instance.a(v, r), instance.b(v, r), instance.c(v, r)]
    tour_weight(instance, tour)
    return tuple(tour)


def atsp_tour_to_walk(instance: AtspInstance, tour) -> tuple[int, ...]:
    tour_weight(instance, tour)
    return _collapse_cyclic(instance.owner(x) for x in tour)


# -- generalized Petersen G(n, n/2) ----------------------------------------

def petersen_construction(n: int) -> tuple[tuple[int, ...], frozenset[int]]:
    """Few-repeat closed walk on G(n, n/2) for 4 | n, n >= 8.

    Rim vertex ``u_i`` is id ``i`` and inner vertex ``v_i`` is ``n + i``. The
    walk zigzags u_i, v_i, v_{i+h}, u_{i+h}, u_{i+h+1}, ... (h = n/2) until it
    stands on u_{h-1}, then closes back to u_0 over two or three repeats.
    """
    if n < 8 or n % 4:
        raise ValueError("petersen_construction needs n divisible by 4 and n >= 8")
    h = n // 2

    def u(i):
        return i % n

    def v(i):
        return n + i % n

    walk = [u(0)]
    i = 0
    while True:
        walk += [v(i), v(i + h), u(i + h), u(i + h + 1), v(i + h + 1), v(i + 1), u(i + 1)]
        if i + 1 == h - 1:
            break
        walk.append(u(i + 2))
        i += 2
    if n == 8:
        walk += [u(2), u(1)]
    else:
        walk += [v(h - 1), v(n - 1), u(n - 1)]
    counts = Counter(walk)
    return tuple(walk), frozenset(x for x, c in counts.items() if c > 1)
