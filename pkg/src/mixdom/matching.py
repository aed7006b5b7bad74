"""Maximal and maximum matchings plus the Koenig vertex cover.

All routines scan vertices and adjacency lists in ascending order, so the
returned matchings are deterministic for a given graph.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable

from .graph import Edge, Graph, norm_edge

Matching = frozenset  # frozenset[Edge]


class MatchingError(ValueError):
    pass


def is_matching(edges: Iterable[Edge]) -> bool:
    seen: set[int] = set()
    for u, v in edges:
        if u in seen or v in seen:
            return False
        seen.add(u)
        seen.add(v)
    return True


def matched_vertices(mm: Iterable[Edge]) -> set[int]:
    return {x for e in mm for x in e}


def greedy_maximal_matching(g: Graph) -> Matching:
    used = [False] * g.n
    out = []
    for u, v in g.edges:
        if not used[u] and not used[v]:
            used[u] = used[v] = True
            out.append((u, v))
    return frozenset(out)


def _check_bipartition(g: Graph, left: set[int], right: set[int]) -> None:
    if left & right:
        raise MatchingError("left and right sides overlap")
    for v in left | right:
        if not 0 <= v < g.n:
            raise MatchingError(f"vertex {v} not in graph")
    for u, v in g.edges:
        if not ((u in left and v in right) or (u in right and v in left)):
            raise MatchingError(f"edge {(u, v)} does not cross the bipartition")


def _hopcroft_karp(g: Graph, left: list[int]) -> dict[int, int]:
    """Core Hopcroft-Karp; returns the mate map for every matched vertex."""
    INF = float("inf")
    mate: dict[int, int] = {}
    dist: dict[int, float] = {}

    def bfs() -> bool:
        q = deque()
        for u in left:
            if u not in mate:
                dist[u] = 0
                q.append(u)
            else:
                dist[u] = INF
        found = False
        while q:
            u = q.popleft()
            for v in g.adj[u]:
                w = mate.get(v)
                if w is None:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    q.append(w)
        return found

    def dfs(root: int) -> bool:
        # iterative layered DFS; stack holds (left vertex, next neighbour index)
        stack = [[root, 0]]
        path: list[tuple[int, int]] = []
        while stack:
            top = stack[-1]
            u, i = top
            nb = g.adj[u]
            advanced = False
            while i < len(nb):
                v = nb[i]
                i += 1
                w = mate.get(v)
                if w is None:
                    path.append((u, v))
                    for a, b in path:
                        mate[a] = b
                        mate[b] = a
                    return True
                if dist[w] == dist[u] + 1:
                    top[1] = i
                    path.append((u, v))
                    stack.append([w, 0])
                    advanced = True
                    break
            if not advanced:
                dist[u] = INF
                stack.pop()
                if path:
                    path.pop()
        return False

    while bfs():
        for u in left:
            if u not in mate:
                dfs(u)
    return mate


def maximum_matching_bipartite(g: Graph, left: Iterable[int], right: Iterable[int]) -> Matching:
    """Maximum cardinality matching of a bipartite graph (Hopcroft-Karp)."""
    ls, rs = set(left), set(right)
    _check_bipartition(g, ls, rs)
    mate = _hopcroft_karp(g, sorted(ls))
    return frozenset(norm_edge(u, mate[u]) for u in ls if u in mate)


def koenig_min_vertex_cover(g: Graph, left: Iterable[int], right: Iterable[int], mm: Iterable[Edge]) -> set[int]:
    """Minimum vertex cover from a maximum matching of a bipartite graph.

    Z is everything reachable from unmatched left vertices along alternating
    paths; the cover is ``(L - Z) | (R & Z)``. Raises :class:`MatchingError`
    if the cover size differs from ``|mm|`` (i.e. ``mm`` was not maximum).
    """
    ls, rs = set(left), set(right)
    mm = list(mm)
    mate: dict[int, int] = {}
    for u, v in mm:
        mate[u] = v
        mate[v] = u
    seen = set()
    q = deque()
    for u in sorted(ls):
        if u not in mate:
            seen.add(u)
            q.append(u)
    while q:
        u = q.popleft()
        for v in g.adj[u]:
            if v in seen or mate.get(u) == v:
                continue
            seen.add(v)
            w = mate.get(v)
            if w is not None and w not in seen:
                seen.add(w)
                q.append(w)
    cover = (ls - seen) | (rs & seen)
    if len(cover) != len(mm):
        raise MatchingError(
            f"Koenig cover has {len(cover)} vertices but matching has {len(mm)} edges"
        )
    return cover


def _blossom_search(n: int, adj, match: list[int], root: int):
    """Grow an alternating tree from ``root``; contract blossoms via ``base``.

    Returns ``(end, parent)`` for an augmenting path ending at exposed vertex
    ``end``, or ``None``.
    """
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    q = [root]
    head = 0

    def lca(a: int, b: int) -> int:
        on_path = [False] * n
        while True:
            a = base[a]
            on_path[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if on_path[b]:
                return b
            b = parent[match[b]]

    def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while head < len(q):
        v = q[head]
        head += 1
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark(v, cur, to, blossom)
                mark(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            q.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return to, parent
                used[match[to]] = True
                q.append(match[to])
    return None


def maximum_matching_general(g: Graph) -> Matching:
    """Maximum cardinality matching via Edmonds' blossom algorithm.

    Starts from the greedy maximal matching and augments from each exposed
    root in ascending order.
    """
    n = g.n
    match = [-1] * n
    for u, v in g.edges:
        if match[u] == -1 and match[v] == -1:
            match[u], match[v] = v, u

    for root in range(n):
        if match[root] != -1 or not g.adj[root]:
            continue
        found = _blossom_search(n, g.adj, match, root)
        if found is None:
            continue
        v, parent = found
        while v != -1:
            pv = parent[v]
            nxt = match[pv]
            match[v] = pv
            match[pv] = v
            v = nxt
    return frozenset(norm_edge(v, match[v]) for v in range(n) if match[v] > v)
