"""Half-integral optimal solutions of the vertex cover LP relaxation.

The LP is solved combinatorially: a minimum vertex cover ``C`` of the
bipartite double cover (copies ``L_v``, ``R_v`` and edges ``L_u R_v``,
``L_v R_u`` for each edge ``uv``) gives ``x_v = |{L_v, R_v} & C| / 2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, build, induced_subgraph
from .matching import (
    koenig_min_vertex_cover,
    maximum_matching_bipartite,
)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class LpPartition:
    V1: frozenset[int]
    Vhalf: frozenset[int]
    V0: frozenset[int]


@dataclass(frozen=True)
class HalfIntegralSolution:
    values: tuple[Fraction, ...]
    objective: Fraction

    def partition(self) -> LpPartition:
        return LpPartition(
            frozenset(v for v, x in enumerate(self.values) if x == 1),
            frozenset(v for v, x in enumerate(self.values) if x == HALF),
            frozenset(v for v, x in enumerate(self.values) if x == 0),
        )

    def is_feasible(self, g: Graph) -> bool:
        return all(self.values[u] + self.values[v] >= 1 for u, v in g.edges)


def double_cover(g: Graph) -> Graph:
    """Bipartite double cover: left copy ``v``, right copy ``n + v``."""
    n = g.n
    es = []
    for u, v in g.edges:
        es.append((u, n + v))
        es.append((v, n + u))
    return build(2 * n, es)


def solve_lpvc_half_integral(g: Graph) -> tuple[HalfIntegralSolution, LpPartition]:
    n = g.n
    dc = double_cover(g)
    left, right = range(n), range(n, 2 * n)
    mm = maximum_matching_bipartite(dc, left, right)
    cover = koenig_min_vertex_cover(dc, left, right, mm)
    vals = tuple(Fraction((v in cover) + (n + v in cover), 2) for v in range(n))
    sol = HalfIntegralSolution(vals, Fraction(len(cover), 2))
    return sol, sol.partition()


def check_crown_properties(g: Graph, p: LpPartition) -> tuple[bool, str]:
    """Check that V0 only touches V1 and that V1 can be matched into V0.

    Returns ``(ok, message)``; on failure the message names the violated
    clause.
    """
    for v in p.V0:
        for u in g.adj[v]:
            if u not in p.V1:
                return False, f"V0 vertex {v} has neighbour {u} outside V1"
    crossing = [(u, v) for u, v in g.edges if (u in p.V0) != (v in p.V0)]
    # all crossing edges go V0-V1 after the first check
    sub = build(g.n, crossing)
    mm = maximum_matching_bipartite(sub, p.V0, p.V1)
    if len(mm) != len(p.V1):
        return False, f"V0-V1 matching has size {len(mm)}, expected |V1| = {len(p.V1)}"
    return True, "ok"


def lp_based_vertex_cover(g: Graph) -> set[int]:
    """``V1 | Vhalf`` of an optimal half-integral solution (2-approximate)."""
    _, p = solve_lpvc_half_integral(g)
    return set(p.V1 | p.Vhalf)


def half_subgraph(g: Graph, p: LpPartition) -> tuple[Graph, list[int]]:
    """``G[Vhalf]`` with its id map back to ``g``."""
    return induced_subgraph(g, p.Vhalf)

