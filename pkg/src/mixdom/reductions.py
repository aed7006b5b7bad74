"""Hardness-reduction gadgets and their checkable optimum identities."""
from __future__ import annotations

import itertools
import json
import warnings
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .domination import (
    MixedSet,
    Regime,
    WeightConfig,
    closure_vertices,
    frac_str,
    is_mixed_dominating_set,
)
from .graph import Graph, build, isolated_vertices
from .solvers import DEFAULT_BUDGET, BudgetExceeded, RegimeError, exact_vertex_cover, exact_wmd


class ReductionError(ValueError):
    pass


# --- vertex cover -> tight vertex-favourable regime -------------------------

@dataclass(frozen=True)
class GiGadget:
    """Host graph copy, induced matching ``a_j b_j``, complete bipartite join
    between host vertices and the ``a_j``, and a star centred at ``c_0`` whose
    centre is joined to every other vertex.

    ``labels[v]`` is ``("V", x)`` for host vertex ``x``, ``("a", j)``,
    ``("b", j)`` (1-based ``j``) or ``("c", j)`` with ``c_0`` the centre.
    """

    graph: Graph
    labels: tuple[tuple[str, int], ...]
    i: int

    @property
    def host_n(self) -> int:
        return sum(1 for r, _ in self.labels if r == "V")

    def vertex(self, role: str, j: int) -> int:
        return self.labels.index((role, j))

    @property
    def center(self) -> int:
        return self.vertex("c", 0)


def build_gi(g: Graph, i: int) -> GiGadget:
    n = g.n
    if not 1 <= i <= n:
        raise ReductionError(f"i must lie in [1, {n}], got {i}")
    if isolated_vertices(g):
        raise ReductionError("host graph must not have isolated vertices")
    a = lambda j: n + j - 1  # noqa: E731
    b = lambda j: n + i + j - 1  # noqa: E731
    c0 = n + 2 * i
    total = c0 + 2 * n + 1
    edges = list(g.edges)
    edges += [(a(j), b(j)) for j in range(1, i + 1)]
    edges += [(v, a(j)) for v in range(n) for j in range(1, i + 1)]
    edges += [(c0, u) for u in range(total) if u != c0]
    labels = (
        [("V", x) for x in range(n)]
        + [("a", j) for j in range(1, i + 1)]
        + [("b", j) for j in range(1, i + 1)]
        + [("c", j) for j in range(0, 2 * n + 1)]
    )
    return GiGadget(build(total, edges), tuple(labels), i)


@dataclass(frozen=True)
class IdentityReport:
    checked: bool
    predicted: Optional[Fraction] = None
    observed: Optional[Fraction] = None
    detail: dict = None

    @property
    def holds(self) -> Optional[bool]:
        return None if not self.checked else self.predicted == self.observed


def gi_optimum_identity_check(g: Graph, w: WeightConfig, budget: int = DEFAULT_BUDGET) -> IdentityReport:
    """Build ``G_tau`` for the true vertex cover number ``tau`` of ``g`` and
    compare its exact optimum with ``w_v + tau * w_e``."""
    if w.regime is not Regime.VERTEX_FAVORABLE_TIGHT:
        raise RegimeError("the G_i identity is stated for w_v <= w_e < 2 w_v")
    try:
        tau = len(exact_vertex_cover(g, budget))
        gadget = build_gi(g, tau)
        opt = exact_wmd(gadget.graph, w, budget)
    except BudgetExceeded:
        return IdentityReport(False, detail={"reason": "budget exceeded"})
    return IdentityReport(
        True,
        w.w_v + tau * w.w_e,
        opt.weight.value,
        {"tau": tau, "n": gadget.graph.n, "m": gadget.graph.m, "solution": opt.solution},
    )


def vc_from_wmd(g: Graph, d: MixedSet) -> set[int]:
    ok, witness = is_mixed_dominating_set(g, d)
    if not ok:
        raise ReductionError(f"not a mixed dominating set; undominated {witness}")
    return closure_vertices(d)


# --- set cover -> edge-favourable regime --------------------------------------

@dataclass(frozen=True)
class SetCoverInstance:
    n_elements: int
    sets: tuple[frozenset[int], ...]

    def __init__(self, n_elements: int, sets: Iterable[Iterable[int]]):
        ss = tuple(frozenset(int(x) for x in s) for s in sets)
        universe = set(range(1, n_elements + 1))
        for k, s in enumerate(ss):
            if not s:
                raise ReductionError(f"subset {k} is empty")
            if not s <= universe:
                raise ReductionError(f"subset {k} has elements outside 1..{n_elements}")
        if set().union(*ss) != universe:
            raise ReductionError("subsets do not cover the universe")
        object.__setattr__(self, "n_elements", n_elements)
        object.__setattr__(self, "sets", ss)

    @property
    def m(self) -> int:
        return len(self.sets)


def compute_q(n: int, m: int) -> int:
    """``floor(m ln n)`` in 50-digit decimal arithmetic.

    Refuses values within 1e-9 of an integer, where the floor is not
    trustworthy; pass an explicit ``q`` to the gadget builder instead.
    """
    if n < 1:
        raise ReductionError("empty universe")
    with localcontext() as ctx:
        ctx.prec = 50
        x = Decimal(m) * Decimal(n).ln()
        q = int(x.to_integral_value(rounding="ROUND_FLOOR"))
        nearest = x.to_integral_value()
        if n > 1 and abs(x - nearest) < Decimal("1e-9"):
            raise ReductionError(f"m*ln(n) = {x} is too close to an integer; pass q explicitly")
    return q


@dataclass(frozen=True)
class SetCoverGadget:
    """Bipartite graph: set vertices ``0..m-1``, then ``q^2 + 1`` layers of
    element copies. Copy of element ``u`` (1-based) in layer ``l`` (1-based)
    has id ``m + (l - 1) * n + (u - 1)``."""

    graph: Graph
    labels: tuple[tuple, ...]
    q: int
    weights: WeightConfig
    instance: SetCoverInstance

    @property
    def set_vertices(self) -> range:
        return range(self.instance.m)


def build_setcover_gadget(sc: SetCoverInstance, q: Optional[int] = None) -> SetCoverGadget:
    n, m = sc.n_elements, sc.m
    if q is None:
        q = compute_q(n, m)
    if q < 1:
        raise ReductionError("instance too small for the reduction (q = floor(m ln n) = 0)")
    layers = q * q + 1
    labels = [("set", k) for k in range(m)]
    labels += [("elem", u, l) for l in range(1, layers + 1) for u in range(1, n + 1)]
    edges = [
        (k, m + (l - 1) * n + (u - 1))
        for k, s in enumerate(sc.sets)
        for u in sorted(s)
        for l in range(1, layers + 1)
    ]
    g = build(m + n * layers, edges)
    return SetCoverGadget(g, tuple(labels), q, WeightConfig(1, Fraction(1, q)), sc)


def sc_from_mds(gadget: SetCoverGadget, d: MixedSet) -> tuple[list[int], bool]:
    """Indices of subsets whose set vertex is a vertex element of ``d``, and
    whether they cover the universe (a warning is issued if not)."""
    ok, witness = is_mixed_dominating_set(gadget.graph, d)
    if not ok:
        raise ReductionError(f"not a mixed dominating set; undominated {witness}")
    chosen = sorted(v for v in d.vertices if v < gadget.instance.m)
    covered = set().union(*(gadget.instance.sets[k] for k in chosen)) if chosen else set()
    covers = covered == set(range(1, gadget.instance.n_elements + 1))
    if not covers:
        warnings.warn("extracted subsets do not cover the universe", stacklevel=2)
    return chosen, covers


def set_vertices_in_closure(gadget: SetCoverGadget, d: MixedSet) -> bool:
    """Every set vertex appears in ``V(d)``."""
    return set(gadget.set_vertices) <= closure_vertices(d)


def min_set_cover(sc: SetCoverInstance) -> list[int]:
    """Exhaustive minimum set cover (indices into ``sc.sets``)."""
    universe = set(range(1, sc.n_elements + 1))
    for size in range(1, sc.m + 1):
        for combo in itertools.combinations(range(sc.m), size):
            if set().union(*(sc.sets[k] for k in combo)) == universe:
                return list(combo)
    raise ReductionError("no cover exists")  # unreachable for valid instances


def eq1_identity_check(sc: SetCoverInstance, budget: int = DEFAULT_BUDGET, q: Optional[int] = None) -> IdentityReport:
    """Compare the gadget optimum with ``|S_sc| + (m - |S_sc|) / q``."""
    gadget = build_setcover_gadget(sc, q)
    k = len(min_set_cover(sc))
    predicted = k + Fraction(sc.m - k, gadget.q)
    try:
        opt = exact_wmd(gadget.graph, gadget.weights, budget)
    except BudgetExceeded:
        return IdentityReport(False, predicted, detail={"reason": "budget exceeded"})
    return IdentityReport(
        True,
        predicted,
        opt.weight.value,
        {"set_cover_size": k, "q": gadget.q, "solution": opt.solution,
         "set_vertices_in_closure": set_vertices_in_closure(gadget, opt.solution)},
    )


# --- text formats -------------------------------------------------------------

def read_setcover(text: str) -> SetCoverInstance:
    """``u <n> <m>`` header then ``m`` lines ``s <elem> ...`` (1-based)."""
    n = m = None
    sets: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        try:
            if parts[0] == "u":
                if n is not None or len(parts) != 3:
                    raise ReductionError(f"line {lineno}: bad header")
                n, m = int(parts[1]), int(parts[2])
            elif parts[0] == "s":
                if n is None:
                    raise ReductionError(f"line {lineno}: subset before header")
                sets.append([int(x) for x in parts[1:]])
            else:
                raise ReductionError(f"line {lineno}: unknown line type {parts[0]!r}")
        except ValueError as exc:
            if isinstance(exc, ReductionError):
                raise
            raise ReductionError(f"line {lineno}: {exc}") from None
    if n is None:
        raise ReductionError("missing 'u <n> <m>' header")
    if len(sets) != m:
        raise ReductionError(f"header declares {m} subsets but {len(sets)} found")
    return SetCoverInstance(n, sets)


def write_setcover(sc: SetCoverInstance) -> str:
    lines = [f"u {sc.n_elements} {sc.m}"]
    lines += ["s " + " ".join(str(x) for x in sorted(s)) for s in sc.sets]
    return "\n".join(lines) + "\n"


def gi_labels_json(gadget: GiGadget) -> str:
    return json.dumps({
        "kind": "gi",
        "i": gadget.i,
        "labels": [{"role": r, "index": j} for r, j in gadget.labels],
    }, indent=1)


def setcover_labels_json(gadget: SetCoverGadget) -> str:
    labels = []
    for lab in gadget.labels:
        if lab[0] == "set":
            labels.append({"role": "set", "index": lab[1]})
        else:
            labels.append({"role": "elem", "element": lab[1], "layer": lab[2]})
    return json.dumps({
        "kind": "setcover",
        "q": gadget.q,
        "wv": frac_str(gadget.weights.w_v),
        "we": frac_str(gadget.weights.w_e),
        "labels": labels,
    }, indent=1)
