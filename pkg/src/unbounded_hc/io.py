"""Text formats: TSPLIB HCP, plain edge lists, walk files."""
from __future__ import annotations

from .errors import GraphFormatError
from .graph import Graph


def parse_tsplib_hcp(text: str) -> Graph:
    """Parse a TSPLIB ``TYPE: HCP`` file with an ``EDGE_LIST`` section.

    Vertex ids are 1-based in the file and 0-based in the result.
    Duplicate edge lines are collapsed.
    """
    header: dict[str, str] = {}
    edges: set[tuple[int, int]] = set()
    in_edges = False
    terminated = False
    dimension = None
    lines = text.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if line == "EOF":
            break
        if not in_edges:
            if line.startswith("EDGE_DATA_SECTION"):
                if "DIMENSION" not in header:
                    raise GraphFormatError("EDGE_DATA_SECTION before DIMENSION", lineno)
                if header.get("TYPE", "").upper() != "HCP":
                    raise GraphFormatError(f"unsupported TYPE {header.get('TYPE')!r}", lineno)
                fmt = header.get("EDGE_DATA_FORMAT", "EDGE_LIST").upper()
                if fmt != "EDGE_LIST":
                    raise GraphFormatError(f"unsupported EDGE_DATA_FORMAT {fmt!r}", lineno)
                try:
                    dimension = int(header["DIMENSION"])
                except ValueError:
                    raise GraphFormatError("DIMENSION is not an integer", lineno) from None
                if dimension < 1:
                    raise GraphFormatError("DIMENSION must be positive", lineno)
                in_edges = True
                continue
            if ":" not in line:
                raise GraphFormatError(f"malformed header line {line!r}", lineno)
            key, _, value = line.partition(":")
            header[key.strip().upper()] = value.strip()
            continue
        if terminated:
            raise GraphFormatError("data after -1 terminator", lineno)
        tokens = line.split()
        try:
            ids = [int(t) for t in tokens]
        except ValueError:
            raise GraphFormatError(f"non-integer token in {line!r}", lineno) from None
        if ids == [-1]:
            terminated = True
            continue
        if len(ids) != 2:
            raise GraphFormatError(f"expected two vertex ids, got {line!r}", lineno)
        u, v = ids
        if not (1 <= u <= dimension and 1 <= v <= dimension):
            raise GraphFormatError(f"vertex id out of range 1..{dimension}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop on vertex {u}", lineno)
        u, v = u - 1, v - 1
        edges.add((u, v) if u < v else (v, u))
    if dimension is None:
        raise GraphFormatError("missing EDGE_DATA_SECTION")
    return Graph(dimension, tuple(sorted(edges)))


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines of 0-based ``u v`` pairs."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise GraphFormatError("empty input")

    def ints(lineno, tokens, count):
        if len(tokens) != count:
            raise GraphFormatError(f"expected {count} integers", lineno)
        try:
            return [int(t) for t in tokens]
        except ValueError:
            raise GraphFormatError(f"non-integer token in {' '.join(tokens)!r}", lineno) from None

    lineno, tokens = rows[0]
    n, m = ints(lineno, tokens, 2)
    if n < 0 or m < 0:
        raise GraphFormatError("negative count", lineno)
    if len(rows) - 1 != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(rows) - 1}")
    seen = set()
    for lineno, tokens in rows[1:]:
        u, v = ints(lineno, tokens, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex id out of range 0..{n - 1}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop on vertex {u}", lineno)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key}", lineno)
        seen.add(key)
    return Graph(n, tuple(sorted(seen)))


def emit_edge_list(graph: Graph) -> str:
    lines = [f"{graph.n} {graph.m}"]
    lines += [f"{u} {v}" for u, v in graph.edges]
    return "\n".join(lines)


def read_graph(text: str, fmt: str = "auto") -> Graph:
    if fmt == "auto":
        fmt = "tsplib" if "EDGE_DATA_SECTION" in text else "edgelist"
    if fmt == "tsplib":
        return parse_tsplib_hcp(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def emit_walk(walk, unbounded=None) -> str:
    """One vertex per line; the unbounded set rides in a header comment."""
    lines = []
    if unbounded is not None:
        lines.append("# unbounded: " + ",".join(str(v) for v in sorted(unbounded)))
    lines += [str(v) for v in walk]
    return "\n".join(lines) + "\n"


def parse_walk(text: str) -> tuple[tuple[int, ...], frozenset[int] | None]:
    walk = []
    unbounded = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.lower().startswith("unbounded:"):
                unbounded = parse_id_list(body.split(":", 1)[1], lineno)
            continue
        try:
            walk.append(int(line))
        except ValueError:
            raise GraphFormatError(f"not a vertex id: {line!r}", lineno) from None
    if not walk:
        raise GraphFormatError("walk is empty")
    return tuple(walk), unbounded


def parse_id_list(text: str, lineno: int | None = None) -> frozenset[int]:
    text = text.strip()
    if not text:
        return frozenset()
    try:
        return frozenset(int(t) for t in text.split(","))
    except ValueError:
        raise GraphFormatError(f"bad vertex list {text!r}", lineno) from None
