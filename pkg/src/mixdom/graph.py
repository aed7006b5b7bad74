"""Undirected simple graphs with dense integer vertex ids."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised on invalid graph construction or malformed graph text."""


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``edges`` is sorted ascending and every adjacency list is sorted, so any
    iteration over a graph is deterministic.
    """

    n: int
    edges: tuple[Edge, ...]
    adj: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            return False
        return norm_edge(u, v) in self.edge_set

    @property
    def edge_set(self) -> frozenset[Edge]:
        # cached lazily; frozen dataclass so go through object.__setattr__
        try:
            return self.__dict__["_edge_set"]
        except KeyError:
            s = frozenset(self.edges)
            object.__setattr__(self, "_edge_set", s)
            return s

    @property
    def edge_index(self) -> dict[Edge, int]:
        try:
            return self.__dict__["_edge_index"]
        except KeyError:
            d = {e: k for k, e in enumerate(self.edges)}
            object.__setattr__(self, "_edge_index", d)
            return d

    def vertices(self) -> range:
        return range(self.n)


def build(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on vertices ``0..n-1``.

    Duplicate edges are dropped; self-loops and out-of-range endpoints raise
    :class:`GraphError`.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    es = set()
    for pair in edge_list:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        es.add(norm_edge(u, v))
    edges = tuple(sorted(es))
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    return Graph(n, edges, tuple(tuple(sorted(a)) for a in nbrs))


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``keep``.

    Returns the new graph and ``id_map`` where ``id_map[new_id]`` is the
    original vertex id. New ids follow ascending original order.
    """
    ks = sorted(set(keep))
    for v in ks:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph with n={g.n}")
    back = {v: i for i, v in enumerate(ks)}
    sub = [(back[u], back[v]) for u, v in g.edges if u in back and v in back]
    return build(len(ks), sub), ks


def isolated_vertices(g: Graph) -> set[int]:
    return {v for v in range(g.n) if not g.adj[v]}


def read_graph(text: str) -> Graph:
    """Parse the ``p n m`` / ``e u v`` text format (``c`` lines are comments)."""
    n = m = None
    pairs: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        parts = line.split()
        tag = parts[0]
        try:
            if tag == "p":
                if n is not None:
                    raise GraphError(f"line {lineno}: duplicate header")
                if len(parts) != 3:
                    raise GraphError(f"line {lineno}: header must be 'p <n> <m>'")
                n, m = int(parts[1]), int(parts[2])
                if n < 0 or m < 0:
                    raise GraphError(f"line {lineno}: negative size in header")
            elif tag == "e":
                if n is None:
                    raise GraphError(f"line {lineno}: edge before header")
                if len(parts) != 3:
                    raise GraphError(f"line {lineno}: edge must be 'e <u> <v>'")
                u, v = int(parts[1]), int(parts[2])
                if not (0 <= u < n and 0 <= v < n):
                    raise GraphError(f"line {lineno}: endpoint out of range [0, {n})")
                if u == v:
                    raise GraphError(f"line {lineno}: self-loop at vertex {u}")
                pairs.append((u, v))
            else:
                raise GraphError(f"line {lineno}: unknown line type {tag!r}")
        except ValueError as exc:
            if isinstance(exc, GraphError):
                raise
            raise GraphError(f"line {lineno}: {exc}") from None
    if n is None:
        raise GraphError("missing 'p <n> <m>' header")
    if len(pairs) != m:
        raise GraphError(f"header declares {m} edges but {len(pairs)} edge lines found")
    return build(n, pairs)


def write_graph(g: Graph, comments: Sequence[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p {g.n} {g.m}")
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# small named families, used by the generator and the tests

def path_graph(n: int) -> Graph:
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    return build(leaves + 1, [(0, j) for j in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return build(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build(10, outer + spokes + inner)
