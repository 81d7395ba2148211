"""Optimal unbounded cycles and paths on trees, in linear time."""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph


def _require_tree(tree: Graph) -> None:
    if not tree.is_tree():
        raise ValueError("input graph is not a tree")


def _euler_tour(tree: Graph, start: int, blocked=frozenset()) -> list[int]:
    """Closed DFS tour from ``start`` (children in ascending id), skipping ``blocked``."""
    adj = tree.adjacency
    tour = [start]
    stack = [(start, -1, iter(adj[start]))]
    while stack:
        v, parent, it = stack[-1]
        for w in it:
            if w != parent and w not in blocked:
                tour.append(w)
                stack.append((w, v, iter(adj[w])))
                break
        else:
            stack.pop()
            if stack:
                tour.append(stack[-1][0])
    return tour


def tree_cycle(tree: Graph) -> tuple[tuple[int, ...], frozenset[int]]:
    """Every non-leaf repeats; an Euler tour minus its final return does it."""
    _require_tree(tree)
    n = tree.n
    if n <= 2:
        return tuple(range(n)), frozenset()
    leaf = min(tree.leaves())
    walk = _euler_tour(tree, leaf)[:-1]
    unbounded = frozenset(v for v in range(n) if tree.degree(v) > 1)
    return tuple(walk), unbounded


@dataclass
class TreePathDp:
    dp: list[int]
    child: list[int | None]
    bounded: list[bool]
    apex: int
    branches: tuple[int | None, int | None]
    res: int
    root: int


def tree_path_dp(tree: Graph) -> TreePathDp:
    """Best simple path by count of degree <= 2 vertices, rooted at the
    smallest-id non-leaf. Requires n >= 3."""
    n = tree.n
    adj = tree.adjacency
    small = [len(adj[v]) <= 2 for v in range(n)]
    bounded = [len(adj[v]) <= 1 for v in range(n)]
    root = min(v for v in range(n) if len(adj[v]) > 1)
    dp = [0] * n
    child: list[int | None] = [None] * n
    res = 0
    apex = root
    branches: tuple[int | None, int | None] = (None, None)

    finish, parent = _postorder(adj, root)

    def val(x):
        return 0 if x is None else dp[x]

    for p in finish:
        best_f = best_s = None
        for k in adj[p]:
            if k == parent[p]:
                continue
            if val(k) > dp[p]:
                dp[p] = dp[k]
                child[p] = k
            if val(k) > val(best_f):
                best_s, best_f = best_f, k
            elif val(k) > val(best_s):
                best_s = k
        dp[p] += small[p]
        total = val(best_f) + val(best_s) + small[p]
        if total > res:
            res = total
            apex = p
            branches = (best_f, best_s)

    if small[apex]:
        bounded[apex] = True
    for x in branches:
        while x is not None:
            if small[x]:
                bounded[x] = True
            x = child[x]
    return TreePathDp(dp, child, bounded, apex, branches, res, root)


def _postorder(adj, root):
    """Children-first order (siblings ascending) and the parent array."""
    out = []
    parent = [-1] * len(adj)
    stack = [(root, iter(adj[root]))]
    while stack:
        v, it = stack[-1]
        for w in it:
            if w != parent[v]:
                parent[w] = v
                stack.append((w, iter(adj[w])))
                break
        else:
            stack.pop()
            out.append(v)
    return out, parent


def tree_path(tree: Graph) -> tuple[tuple[int, ...], frozenset[int]]:
    """Minimum-repeat open walk covering a tree.

    The walk runs between two leaves along the simple path with the most
    degree <= 2 vertices, detouring into every hanging subtree on the way.
    """
    _require_tree(tree)
    n = tree.n
    if n <= 2:
        return tuple(range(n)), frozenset()
    st = tree_path_dp(tree)
    # the optimum always bends at a vertex with two child branches
    assert st.branches[1] is not None
    sides = []
    for x in st.branches:
        chain = []
        while x is not None:
            chain.append(x)
            x = st.child[x]
        sides.append(chain)
    path = list(reversed(sides[0])) + [st.apex] + sides[1]
    on_path = frozenset(path)
    walk: list[int] = []
    for v in path:
        walk.append(v)
        for w in tree.adjacency[v]:
            if w not in on_path:
                walk.extend(_euler_tour(tree, w, blocked=on_path | {v}))
                walk.append(v)
    unbounded = frozenset(v for v in range(n) if not st.bounded[v])
    return tuple(walk), unbounded
