"""Exact oracles, the two 2-approximations and the regime dispatcher."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from . import _kernels
from ._jit import MAX_JIT_BITS, USE_NUMBA, python_impl
from .domination import (
    MixedSet,
    Regime,
    WeightConfig,
    WeightedValue,
    frac_str,
    is_mixed_dominating_set,
    solution_to_json,
    weight,
)
from .graph import Graph, induced_subgraph, isolated_vertices
from .lpvc import lp_based_vertex_cover, solve_lpvc_half_integral
from .matching import matched_vertices, maximum_matching_general

DEFAULT_BUDGET = 20_000_000


class Method(str, enum.Enum):
    EXACT = "Exact"
    APPROX_EDGE_HEAVY = "ApproxEdgeHeavy"
    APPROX_ALG1 = "ApproxAlg1"
    HEURISTIC = "HeuristicNoGuarantee"


class RegimeError(ValueError):
    """An approximation was called outside the weight regime it is proved for."""


@dataclass(frozen=True)
class SolveResult:
    solution: MixedSet
    weight: WeightedValue
    method: Method
    guarantee: Optional[Fraction]
    nodes: int = field(default=0, compare=False)

    def to_json(self, w: WeightConfig) -> dict:
        g = None if self.guarantee is None else frac_str(self.guarantee)
        return solution_to_json(self.solution, w, method=self.method.value, guarantee=g)


class BudgetExceeded(RuntimeError):
    """Exact search hit its node budget. ``incumbent`` is the best valid
    solution seen (no optimality claim)."""

    def __init__(self, message: str, incumbent=None):
        super().__init__(message)
        self.incumbent = incumbent


def _result(d: MixedSet, w: WeightConfig, method: Method, guarantee, nodes: int = 0) -> SolveResult:
    return SolveResult(d, weight(d, w), method, None if guarantee is None else Fraction(guarantee), nodes)


def _use_jit(*sizes: int) -> bool:
    return USE_NUMBA and all(s <= MAX_JIT_BITS for s in sizes)


# --- vertex cover -----------------------------------------------------------

def _neighbour_masks(g: Graph) -> list[int]:
    out = []
    for v in range(g.n):
        mask = 0
        for u in g.adj[v]:
            mask |= 1 << u
        out.append(mask)
    return out


def exact_vertex_cover(g: Graph, budget: int = DEFAULT_BUDGET) -> set[int]:
    """Minimum vertex cover by branch and bound; raises :class:`BudgetExceeded`."""
    start = lp_based_vertex_cover(g)
    start_mask = sum(1 << v for v in start)
    vnb = _neighbour_masks(g)
    if _use_jit(g.n):
        status, _, mask, _ = _kernels.vc_branch_and_bound(
            g.n, np.array(vnb, dtype=np.int64), len(start), start_mask, budget)
    else:
        status, _, mask, _ = python_impl(_kernels.vc_branch_and_bound)(
            g.n, vnb, len(start), start_mask, budget)
    cover = {v for v in range(g.n) if (int(mask) >> v) & 1}
    if status != 0:
        raise BudgetExceeded(f"vertex cover search exceeded {budget} nodes", cover)
    return cover


# --- approximations ----------------------------------------------------------

def _require_no_isolated(g: Graph) -> None:
    iso = isolated_vertices(g)
    if iso:
        raise ValueError(f"graph has isolated vertices {sorted(iso)}; use solve()")


def approx_edge_heavy(
    g: Graph,
    w: WeightConfig,
    vertex_cover: Callable[[Graph], set[int]] = lp_based_vertex_cover,
    vc_ratio: Fraction = Fraction(2),
) -> SolveResult:
    """Vertex cover as a mixed dominating set, for ``w_e >= 2 w_v``.

    Any ``vc_ratio``-approximate cover is ``vc_ratio``-approximate here; the
    default cover is ``V1 | Vhalf`` of an optimal half-integral LP solution.
    """
    if w.regime is not Regime.EDGE_HEAVY:
        raise RegimeError(f"approx_edge_heavy needs w_e >= 2 w_v, got {w.w_v}, {w.w_e}")
    _require_no_isolated(g)
    return _result(MixedSet(vertex_cover(g)), w, Method.APPROX_EDGE_HEAVY, vc_ratio)


def alg1_solution(g: Graph) -> MixedSet:
    """V1 as vertices, a maximum matching of G[Vhalf] as edges, the unmatched
    rest of Vhalf as vertices."""
    _, p = solve_lpvc_half_integral(g)
    sub, back = induced_subgraph(g, p.Vhalf)
    mm = maximum_matching_general(sub)
    covered = {back[x] for x in matched_vertices(mm)}
    edges = [(back[a], back[b]) for a, b in mm]
    rest = [v for v in p.Vhalf if v not in covered]
    return MixedSet(list(p.V1) + rest, edges)


def approx_alg1(g: Graph, w: WeightConfig) -> SolveResult:
    if w.regime is not Regime.VERTEX_FAVORABLE_TIGHT:
        raise RegimeError(f"approx_alg1 needs w_v <= w_e < 2 w_v, got {w.w_v}, {w.w_e}")
    _require_no_isolated(g)
    return _result(alg1_solution(g), w, Method.APPROX_ALG1, 2)


# --- exact mixed domination --------------------------------------------------

def _initial_incumbent(g: Graph, w: WeightConfig) -> MixedSet:
    iso = isolated_vertices(g)
    sub, back = induced_subgraph(g, set(range(g.n)) - iso)
    cands = [MixedSet(lp_based_vertex_cover(sub)), alg1_solution(sub)]
    best = min(cands, key=lambda d: weight(d, w).value)
    return MixedSet(
        [back[v] for v in best.vertices] + sorted(iso),
        [(back[a], back[b]) for a, b in best.edges],
    )


def exact_wmd(g: Graph, w: WeightConfig, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Minimum weight mixed dominating set by branch and bound.

    Raises :class:`BudgetExceeded` (carrying the incumbent) if the node budget
    runs out; never returns a non-optimal answer labelled exact.
    """
    if w.w_v == 0:
        return _result(MixedSet(range(g.n)), w, Method.EXACT, 1)
    if w.w_e == 0:
        # every non-isolated vertex is an edge endpoint; isolated ones are forced
        return _result(MixedSet(isolated_vertices(g), g.edges), w, Method.EXACT, 1)

    inc = _initial_incumbent(g, w)
    wv, we, _ = w.scaled_ints()
    idx = g.edge_index
    inc_cost = wv * len(inc.vertices) + we * len(inc.edges)
    inc_v = sum(1 << v for v in inc.vertices)
    inc_e = sum(1 << idx[e] for e in inc.edges)

    eu = [u for u, _ in g.edges]
    ev = [v for _, v in g.edges]
    vnb = _neighbour_masks(g)
    vinc = [0] * g.n
    for k, (a, b) in enumerate(g.edges):
        vinc[a] |= 1 << k
        vinc[b] |= 1 << k

    if _use_jit(g.n, g.m):
        arr = lambda xs: np.array(xs, dtype=np.int64)  # noqa: E731
        out = _kernels.wmd_branch_and_bound(
            g.n, g.m, arr(eu), arr(ev), arr(vnb), arr(vinc), wv, we,
            inc_cost, inc_v, inc_e, budget)
    else:
        out = python_impl(_kernels.wmd_branch_and_bound)(
            g.n, g.m, eu, ev, vnb, vinc, wv, we, inc_cost, inc_v, inc_e, budget)
    status, _, vmask, emask, nodes = (int(x) for x in out)
    d = MixedSet(
        [v for v in range(g.n) if (vmask >> v) & 1],
        [g.edges[k] for k in range(g.m) if (emask >> k) & 1],
    )
    if status != 0:
        raise BudgetExceeded(
            f"mixed domination search exceeded {budget} nodes",
            _result(d, w, Method.HEURISTIC, None, nodes),
        )
    return _result(d, w, Method.EXACT, 1, nodes)


# --- dispatcher ----------------------------------------------------------------

def _heuristic(g: Graph, w: WeightConfig, budget: int, incumbent=None) -> SolveResult:
    cands = [MixedSet(lp_based_vertex_cover(g)), alg1_solution(g)]
    if incumbent is None:
        try:
            return exact_wmd(g, w, budget)
        except BudgetExceeded as exc:
            incumbent = exc.incumbent
    cands.append(incumbent.solution)
    best = min(cands, key=lambda d: weight(d, w).value)
    return _result(best, w, Method.HEURISTIC, None)


def _approx(g: Graph, w: WeightConfig, budget: int, incumbent=None) -> SolveResult:
    r = w.regime
    if r is Regime.EDGE_HEAVY:
        return approx_edge_heavy(g, w)
    if r is Regime.VERTEX_FAVORABLE_TIGHT:
        return approx_alg1(g, w)
    return _heuristic(g, w, budget, incumbent)


def _lift(res: SolveResult, back: list[int], iso: set[int], w: WeightConfig) -> SolveResult:
    d = MixedSet(
        [back[v] for v in res.solution.vertices] + sorted(iso),
        [(back[a], back[b]) for a, b in res.solution.edges],
    )
    return _result(d, w, res.method, res.guarantee, res.nodes)


def solve(g: Graph, w: WeightConfig, mode: str = "auto", budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Solve on ``g`` minus its isolated vertices, then add them back as vertex
    elements (they belong to every mixed dominating set).

    ``mode``: ``exact`` (raise :class:`BudgetExceeded` on budget exhaustion),
    ``approx`` (regime approximation; exact-or-heuristic when ``w_e < w_v``)
    or ``auto`` (exact within budget, else as ``approx``).
    """
    if mode not in ("exact", "approx", "auto"):
        raise ValueError(f"unknown mode {mode!r}")
    iso = isolated_vertices(g)
    sub, back = induced_subgraph(g, set(range(g.n)) - iso)
    if mode == "approx":
        inner = _approx(sub, w, budget)
    else:
        try:
            inner = exact_wmd(sub, w, budget)
        except BudgetExceeded as exc:
            if mode == "exact":
                exc.incumbent = _lift(exc.incumbent, back, iso, w)
                raise
            inner = _approx(sub, w, budget, exc.incumbent)
    res = _lift(inner, back, iso, w)
    ok, witness = is_mixed_dominating_set(g, res.solution)
    if not ok:  # pragma: no cover - would be a solver bug
        raise AssertionError(f"solver produced an invalid set; undominated {witness}")
    return res
