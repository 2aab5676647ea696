"""Generators for the extremal constructions, each paired with its claimed value.

Vertex layout is fixed: components appear in the order they are listed in
each docstring, a star contributes its centre before its leaves, and paths
are numbered along the path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Callable

from .bounds import bound_f_delta, bound_f_n, g_lower_even
from .graph import Graph, disjoint_union, path, star


def a(j: int) -> int:
    """a_j = C(j+1, 2) + 1: the smallest maximum degree forcing f = j."""
    return comb(j + 1, 2) + 1


def b(t: int) -> int:
    """Order of the caterpillar T_t: (t^3 + 6t^2 + 17t + 18) / 6."""
    return (t ** 3 + 6 * t ** 2 + 17 * t + 18) // 6


@dataclass(frozen=True)
class FamilySpec:
    """``relation`` says how ``claimed`` relates to the measured quantity:
    "f" and "fk" are exact values, "fk>=" a lower bound, "infeasible" means
    the graph is claimed not to be k-feasible (``claimed`` is then None)."""

    family: str
    params: dict = field(hash=False)
    relation: str
    claimed: int | None
    k: int = 2

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "params": dict(self.params),
            "relation": self.relation,
            "claimed": self.claimed,
            "k": self.k,
        }


class FamilyError(ValueError):
    pass


def star_union_delta(delta: int) -> tuple[Graph, FamilySpec]:
    """K_{1,a_1} u ... u K_{1,a_{t-1}} u K_{1,delta} with t = bound_f_delta(delta)."""
    if delta < 2:
        raise FamilyError(f"delta must be at least 2, got {delta}")
    t = bound_f_delta(delta)
    g = disjoint_union(*[star(a(j)) for j in range(1, t)], star(delta))
    return g, FamilySpec("stars-delta", {"delta": delta}, "f", t)


def _gn_core(n: int, t: int) -> Graph:
    # v_1..v_t are 0..t-1, u_1..u_{n-t} are t..n-1
    hub = t - 1
    edges = [(hub, x) for x in range(n) if x != hub]
    for q in range(1, t):
        edges.extend((q - 1, t + i) for i in range(a(q)))
    return Graph.from_edges(n, edges)


def extremal_gn(n: int) -> tuple[Graph, FamilySpec]:
    """G_n with f(G_n) = bound_f_n(n).

    v_t is joined to every other vertex and v_q (q < t) to u_1..u_{a_q}; at
    n = C(t+2, 2) + 2 the graph is G_{n-1} plus an isolated vertex.
    """
    if n < 4:
        raise FamilyError(f"n must be at least 4, got {n}")
    t = bound_f_n(n)
    if n == comb(t + 2, 2) + 2:
        g = disjoint_union(_gn_core(n - 1, t), Graph.empty(1))
    else:
        g = _gn_core(n, t)
    return g, FamilySpec("gn", {"n": n}, "f", t)


def caterpillar_T(t: int) -> tuple[Graph, FamilySpec]:
    """Caterpillar T_t on b_t vertices with f(T_t) = t + 1.

    Spine v_1..v_{2t+3} is 0..2t+2; v_{2j} (j = 1..t+1) carries a_j - 2 extra
    leaves, numbered after the spine in order of j.
    """
    if t < 0:
        raise FamilyError(f"t must be non-negative, got {t}")
    spine = 2 * t + 3
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for j in range(1, t + 2):
        for _ in range(a(j) - 2):
            edges.append((2 * j - 1, nxt))
            nxt += 1
    g = Graph.from_edges(nxt, edges)
    return g, FamilySpec("tree-t", {"t": t}, "f", t + 1)


def g1_extremal(k: int, m: int | None = None) -> tuple[Graph, FamilySpec]:
    """floor((k-1)/2) K_2 u m K_1 with f_k = floor((k-1)/2); m defaults to k."""
    if k < 3:
        raise FamilyError(f"k must be at least 3, got {k}")
    m = k if m is None else m
    if m < 0:
        raise FamilyError(f"m must be non-negative, got {m}")
    t = (k - 1) // 2
    g = disjoint_union(*[path(2)] * t, Graph.empty(m))
    return g, FamilySpec("g1-extremal", {"k": k, "m": m}, "fk", t, k)


def g2_extremal(k: int) -> tuple[Graph, FamilySpec]:
    """(k - 1) K_{1,2} with f_k = k - 1."""
    if k < 2:
        raise FamilyError(f"k must be at least 2, got {k}")
    g = disjoint_union(*[star(2)] * (k - 1))
    return g, FamilySpec("g2-extremal", {"k": k}, "fk", k - 1, k)


def prop44_family(delta: int, k: int) -> tuple[Graph, FamilySpec]:
    """(k - 1) K_{1,delta} u (k/2) K_{1,a_1} u ... u (k/2) K_{1,a_{t-1}}, even k.

    Claimed: f_k >= g(delta, 2) k/2 + k/2 - 1.
    """
    if k < 2 or k % 2:
        raise FamilyError(f"k must be even and at least 2, got {k}")
    if delta < 2:
        raise FamilyError(f"delta must be at least 2, got {delta}")
    t = bound_f_delta(delta)
    parts = [star(delta)] * (k - 1)
    for j in range(1, t):
        parts.extend([star(a(j))] * (k // 2))
    g = disjoint_union(*parts)
    return g, FamilySpec("prop44", {"delta": delta, "k": k}, "fk>=", g_lower_even(delta, k), k)


def h1_extremal(k: int) -> tuple[Graph, FamilySpec]:
    """floor(k/2) K_1 u floor((k-1)/2) K_2, not k-feasible."""
    if k < 2:
        raise FamilyError(f"k must be at least 2, got {k}")
    g = disjoint_union(Graph.empty(k // 2), *[path(2)] * ((k - 1) // 2))
    return g, FamilySpec("h1-extremal", {"k": k}, "infeasible", None, k)


def h2_extremal(k: int) -> tuple[Graph, FamilySpec]:
    """(k-1)/2 P_4 for odd k; (k-2)/2 P_4 u K_1 for even k.  Not k-feasible.

    Order 2k - 2 for odd k and 2k - 3 for even k.
    """
    if k < 2:
        raise FamilyError(f"k must be at least 2, got {k}")
    if k % 2:
        g = disjoint_union(*[path(4)] * ((k - 1) // 2))
    else:
        g = disjoint_union(*[path(4)] * ((k - 2) // 2), Graph.empty(1))
    return g, FamilySpec("h2-extremal", {"k": k}, "infeasible", None, k)


# name -> (generator, parameter names in call order)
FAMILIES: dict[str, tuple[Callable[..., tuple[Graph, FamilySpec]], tuple[str, ...]]] = {
    "stars-delta": (star_union_delta, ("delta",)),
    "gn": (extremal_gn, ("n",)),
    "tree-t": (caterpillar_T, ("t",)),
    "g1-extremal": (g1_extremal, ("k", "m")),
    "g2-extremal": (g2_extremal, ("k",)),
    "prop44": (prop44_family, ("delta", "k")),
    "h1-extremal": (h1_extremal, ("k",)),
    "h2-extremal": (h2_extremal, ("k",)),
}


def generate(name: str, **params) -> tuple[Graph, FamilySpec]:
    """Build a family instance by name; unknown names and missing parameters raise FamilyError."""
    if name not in FAMILIES:
        raise FamilyError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")
    fn, names = FAMILIES[name]
    args = []
    for p in names:
        val = params.get(p)
        if val is None:
            if name == "g1-extremal" and p == "m":
                continue
            raise FamilyError(f"family {name!r} needs --{p}")
        args.append(val)
    return fn(*args)
