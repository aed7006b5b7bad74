"""Seeded graph generators.

Randomness comes from numpy's PCG64 bit generator. G(n, p) draws exactly one
uniform double per vertex pair in canonical ``(u < v)`` order, so output is
reproducible across platforms for a fixed seed.
"""
from __future__ import annotations

import numpy as np

from .graph import (
    Graph,
    GraphError,
    build,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
)


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def gnp(n: int, p: float, rng: np.random.Generator) -> Graph:
    if n < 0:
        raise GraphError("n must be nonnegative")
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability {p} outside [0, 1]")
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v))
    return build(n, edges)


def random_tree(n: int, rng: np.random.Generator) -> Graph:
    """Uniform labelled tree from a random Pruefer sequence."""
    if n < 1:
        raise GraphError("a tree needs at least one vertex")
    if n == 1:
        return build(1, [])
    seq = [int(x) for x in rng.integers(0, n, size=n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [v for v in range(n) if degree[v] == 1]
    edges.append((u, v))
    return build(n, edges)


def generate(kind: str, n: int, p: float = 0.5, seed: int = 0) -> Graph:
    if kind == "gnp":
        return gnp(n, p, make_rng(seed))
    if kind == "tree":
        return random_tree(n, make_rng(seed))
    if kind == "path":
        return path_graph(n)
    if kind == "cycle":
        return cycle_graph(n)
    if kind == "star":
        return star_graph(n)
    if kind == "complete":
        return complete_graph(n)
    raise GraphError(f"unknown graph kind {kind!r}")
