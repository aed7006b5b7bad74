"""Mixed sets, the domination checker and exact weights."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .graph import Edge, Graph, norm_edge

Number = Union[int, str, Fraction]


class Regime(str, enum.Enum):
    EDGE_HEAVY = "EdgeHeavy"  # w_e >= 2 w_v
    VERTEX_FAVORABLE_TIGHT = "VertexFavorableTight"  # w_v <= w_e < 2 w_v
    EDGE_FAVORABLE = "EdgeFavorable"  # w_e < w_v


def to_fraction(x: Number) -> Fraction:
    """Exact conversion; decimal strings like ``"1.5"`` become ``3/2``.

    Floats are rejected since they usually carry binary rounding.
    """
    if isinstance(x, float):
        raise TypeError("weights must be exact (int, Fraction or string), not float")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse {x!r} as an exact rational") from exc


def frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class WeightConfig:
    w_v: Fraction
    w_e: Fraction

    def __init__(self, w_v: Number, w_e: Number):
        wv, we = to_fraction(w_v), to_fraction(w_e)
        if wv < 0 or we < 0:
            raise ValueError("weights must be nonnegative")
        object.__setattr__(self, "w_v", wv)
        object.__setattr__(self, "w_e", we)

    @property
    def regime(self) -> Regime:
        if self.w_e >= 2 * self.w_v:
            return Regime.EDGE_HEAVY
        if self.w_e >= self.w_v:
            return Regime.VERTEX_FAVORABLE_TIGHT
        return Regime.EDGE_FAVORABLE

    @property
    def vertex_favorable(self) -> bool:
        return self.w_v <= self.w_e

    def scaled_ints(self) -> tuple[int, int, int]:
        """``(W_v, W_e, L)`` with ``w_v = W_v / L`` and ``w_e = W_e / L``."""
        den = self.w_v.denominator * self.w_e.denominator
        return int(self.w_v * den), int(self.w_e * den), den


@dataclass(frozen=True)
class MixedSet:
    vertices: frozenset[int]
    edges: frozenset[Edge]

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Iterable[int]] = ()):
        object.__setattr__(self, "vertices", frozenset(int(v) for v in vertices))
        object.__setattr__(
            self, "edges", frozenset(norm_edge(*(int(x) for x in e)) for e in edges)
        )

    def __len__(self) -> int:
        return len(self.vertices) + len(self.edges)

    def sorted_vertices(self) -> list[int]:
        return sorted(self.vertices)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


@dataclass(frozen=True)
class WeightedValue:
    value: Fraction
    n_vertices: int
    n_edges: int


class ForeignElementError(ValueError):
    """A mixed set mentions a vertex or edge the graph does not have."""


def _check_membership(g: Graph, d: MixedSet) -> None:
    for v in d.vertices:
        if not 0 <= v < g.n:
            raise ForeignElementError(f"vertex {v} not in graph")
    for e in d.edges:
        if e not in g.edge_set:
            raise ForeignElementError(f"edge {e} not in graph")


def closure_vertices(d: MixedSet) -> set[int]:
    """``V(D)``: vertex elements plus endpoints of edge elements."""
    out = set(d.vertices)
    for u, v in d.edges:
        out.add(u)
        out.add(v)
    return out


def undominated(g: Graph, d: MixedSet) -> Optional[tuple[str, object]]:
    """First undominated element, as ``("edge", (u, v))`` or ``("vertex", v)``.

    Edges are scanned before vertices, both in ascending order. ``None`` means
    ``d`` dominates ``g``.
    """
    _check_membership(g, d)
    touched = closure_vertices(d)
    for e in g.edges:
        if e[0] not in touched and e[1] not in touched:
            return ("edge", e)
    for v in range(g.n):
        if v in touched:
            continue
        if not any(u in d.vertices for u in g.adj[v]):
            return ("vertex", v)
    return None


def is_mixed_dominating_set(g: Graph, d: MixedSet) -> tuple[bool, Optional[tuple[str, object]]]:
    """Return ``(valid, witness)``; witness is ``None`` when valid."""
    w = undominated(g, d)
    return w is None, w


def weight(d: MixedSet, w: WeightConfig) -> WeightedValue:
    nv, ne = len(d.vertices), len(d.edges)
    return WeightedValue(w.w_v * nv + w.w_e * ne, nv, ne)


def is_vertex_cover(g: Graph, c: Iterable[int]) -> bool:
    cs = set(c)
    return all(u in cs or v in cs for u, v in g.edges)


def solution_to_json(d: MixedSet, w: WeightConfig, **extra) -> dict:
    out = {
        "vertices": d.sorted_vertices(),
        "edges": [list(e) for e in d.sorted_edges()],
        "wv": frac_str(w.w_v),
        "we": frac_str(w.w_e),
        "weight": frac_str(weight(d, w).value),
    }
    out.update(extra)
    return out


def solution_from_json(obj: dict) -> MixedSet:
    try:
        vs = [int(v) for v in obj.get("vertices", [])]
        es = []
        for e in obj.get("edges", []):
            if len(e) != 2:
                raise ValueError(f"edge entry {e!r} is not a pair")
            es.append((int(e[0]), int(e[1])))
    except (TypeError, ValueError) as exc:
        raise ValueError(f"malformed solution JSON: {exc}") from None
    return MixedSet(vs, es)
