"""Equating k maximum degrees in graphs of maximum degree at most 2 with at
most k - 1 deletions.

Components are sorted into isolated vertices and edges (A), copies of
K_{1,2} (B) and everything else (C).  The degree-2 vertices of C induce
paths and cycles F; a minimum dominating set of F knocks every remaining
vertex of C down to degree <= 1, after which the copies of K_{1,2} decide
whether to equate at degree 1 or at degree 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .certificate import Certificate, make_certificate
from .graph import Graph, components, induced_subgraph


class DegreeTooLargeError(ValueError):
    pass


@dataclass(frozen=True)
class LowDegDecomposition:
    A: tuple[tuple[int, ...], ...]         # isolated vertices and isolated edges
    B: tuple[tuple[int, int, int], ...]    # K_{1,2} copies as (centre, leaf, leaf)
    C: tuple[tuple[int, ...], ...]         # all other components
    n0: int
    n1: int
    n2: int
    F: tuple[int, ...]                     # degree-2 vertices of C
    D: tuple[int, ...]                     # minimum dominating set of G[F]

    @property
    def t(self) -> int:
        return len(self.B)


def _check_low(g: Graph) -> None:
    if g.max_degree() > 2:
        raise DegreeTooLargeError(f"maximum degree {g.max_degree()} exceeds 2")


def _walk(g: Graph, comp: set[int]) -> list[int]:
    """Order the vertices of a path or cycle component along the component."""
    ends = sorted(v for v in comp if g.degree(v) <= 1)
    start = ends[0] if ends else min(comp)
    order = [start]
    prev, cur = None, start
    while True:
        nxt = sorted(u for u in g.adj[cur] if u != prev)
        if not nxt or nxt[0] == start:
            break
        prev, cur = cur, nxt[0]
        order.append(cur)
    return order


def min_dominating_paths_cycles(f: Graph) -> tuple[int, ...]:
    """Minimum dominating set of a disjoint union of paths and cycles.

    Walks each component from its smallest endpoint (or smallest vertex, on a
    cycle) and takes every third vertex starting with the second; a path whose
    length is 1 mod 3 also takes its last vertex.  Size is sum of ceil(l / 3).
    """
    if f.max_degree() > 2:
        raise DegreeTooLargeError("components must be paths or cycles")
    chosen = []
    for comp in components(f):
        order = _walk(f, comp)
        size = len(order)
        is_cycle = size >= 3 and all(f.degree(v) == 2 for v in order)
        if is_cycle:
            chosen.extend(order[0::3])
        else:
            chosen.extend(order[min(i, size - 1)] for i in range(1, size + 2, 3) if i - 1 < size)
    return tuple(sorted(chosen))


def decompose_deg2(g: Graph) -> LowDegDecomposition:
    _check_low(g)
    degs = g.degrees()
    A, B, C = [], [], []
    for comp in components(g):
        verts = tuple(sorted(comp))
        edges = sum(degs[v] for v in verts) // 2
        if len(verts) <= 2:
            A.append(verts)
        elif len(verts) == 3 and edges == 2:
            centre = next(v for v in verts if degs[v] == 2)
            leaves = tuple(v for v in verts if v != centre)
            B.append((centre, leaves[0], leaves[1]))
        else:
            C.append(verts)
    F = tuple(sorted(v for comp in C for v in comp if degs[v] == 2))
    sub, old = induced_subgraph(g, F)
    D = tuple(sorted(old[v] for v in min_dominating_paths_cycles(sub)))
    return LowDegDecomposition(
        tuple(A), tuple(B), tuple(C),
        degs.count(0), degs.count(1), degs.count(2),
        F, D,
    )


def _edge_halves(g: Graph, gone: set[int]) -> list[int]:
    """One endpoint (the smaller id) of every edge of g - gone, which must have Delta <= 1."""
    out = []
    for v in range(g.n):
        if v in gone:
            continue
        live = [u for u in g.adj[v] if u not in gone]
        assert len(live) <= 1, "residual graph should have maximum degree <= 1"
        if live and v < live[0]:
            out.append(v)
    return out


def _count_degree(g: Graph, gone: set[int], d: int) -> int:
    return sum(1 for v in range(g.n) if v not in gone and len(g.adj[v] - gone) == d)


def equate_deg2_steps(g: Graph, k: int) -> tuple[list[int], str]:
    """Deletion list and the name of the branch that produced it."""
    _check_low(g)
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if g.n < k:
        return [], "small"
    delta = g.max_degree()
    degs = g.degrees()
    if delta <= 1:
        if delta == 0 or degs.count(1) >= k:
            return [], "already"
        return _edge_halves(g, set()), "matching"

    if degs.count(2) >= k:
        return [], "already"
    dec = decompose_deg2(g)
    t = dec.t
    leaves = [b[1] for b in dec.B]
    centres = [b[0] for b in dec.B]

    if t > (k - 1) // 2:
        return list(dec.F) + leaves, "many-k12"

    if not dec.F:
        gone = set(leaves)
        if _count_degree(g, gone, 1) >= k:
            return leaves, "no-f-degree-1"
        return leaves + _edge_halves(g, gone), "no-f-degree-0"

    gone = set(dec.D) | {v for b in dec.B for v in b}
    n1 = _count_degree(g, gone, 1)
    if t == 0:
        if n1 >= k:
            return list(dec.D), "dominate-degree-1"
        return list(dec.D) + _edge_halves(g, gone), "dominate-degree-0"
    if n1 >= k - 2 * t:
        return list(dec.D) + leaves, "dominate-k12-degree-1"
    return list(dec.D) + _edge_halves(g, gone) + centres, "dominate-k12-degree-0"


def equate_deg2(g: Graph, k: int) -> Certificate:
    """Certificate with at most k - 1 deletions for a graph with Delta <= 2."""
    deleted, _ = equate_deg2_steps(g, k)
    assert len(deleted) <= k - 1, "deletion budget exceeded"
    return make_certificate(g, deleted, k)
