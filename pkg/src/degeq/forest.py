"""Upper-bound procedures for f_k: the greedy (k - 1) * Delta strategy for any
graph, and the degree-interval procedure for forests that stays within
(2k - 1) * floor(n^(1/3)) deletions.

Interval membership is decided in integers by cubing: a vertex of degree d
lies in interval j < w iff j^3 n <= d^3 < (j+1)^3 n, in interval w iff
w^3 n <= d^3 < n^2, and in the top interval iff d^3 >= n^2, where
w = floor(n^(1/3)) and n is the order of the input forest.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Optional

from .certificate import Certificate, make_certificate
from .graph import Graph, induced_subgraph, is_forest

log = logging.getLogger(__name__)


class NotAForestError(ValueError):
    pass


def icbrt(x: int) -> int:
    """floor(x ** (1/3)) for x >= 0, exact."""
    if x < 0:
        raise ValueError("negative argument")
    r = int(round(x ** (1.0 / 3.0)))
    while r ** 3 > x:
        r -= 1
    while (r + 1) ** 3 <= x:
        r += 1
    return r


TOP = -1  # bucket index of the top interval [ceil(n^(2/3)), n)


def bucket_index(d: int, n: int, w: int) -> int:
    d3 = d ** 3
    if d3 >= n * n:
        return TOP
    return min(w, icbrt(d3 // n))


@dataclass(frozen=True)
class IntervalPartition:
    n: int
    w: int
    buckets: tuple[tuple[int, ...], ...]  # A_0 .. A_w
    top: tuple[int, ...]                  # A_L


def interval_partition(g: Graph, n: Optional[int] = None) -> IntervalPartition:
    """Bucket the vertices of ``g`` by degree; ``n`` fixes the interval
    boundaries and defaults to the order of ``g``."""
    n = g.n if n is None else n
    w = icbrt(n)
    buckets: list[list[int]] = [[] for _ in range(w + 1)]
    top = []
    for v in range(g.n):
        j = bucket_index(g.degree(v), n, w)
        (top if j == TOP else buckets[j]).append(v)
    return IntervalPartition(n, w, tuple(map(tuple, buckets)), tuple(top))


def _require_forest(g: Graph) -> None:
    if not is_forest(g):
        raise NotAForestError("input graph contains a cycle")


def conflict_set(g: Graph, A: Iterable[int]) -> tuple[int, ...]:
    """M(A): vertices outside A with at least two neighbours in A.

    In a forest |M(A)| < |A|, since A and k members of M(A) would span a
    bipartite subgraph with 2k vertices and at least 2k edges.
    """
    _require_forest(g)
    A = set(A)
    if len(A) < 2:
        raise ValueError("A must contain at least 2 vertices")
    return tuple(v for v in range(g.n) if v not in A and len(g.adj[v] & A) >= 2)


def greedy_fk(g: Graph, k: int) -> Certificate:
    """Delete every maximum-degree vertex while there are fewer than k of them.

    Each round removes at most k - 1 vertices and lowers the maximum degree,
    so at most (k - 1) * Delta(G) vertices go in total.
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    deg = g.degrees()
    alive = set(range(g.n))
    deleted: list[int] = []
    while len(alive) >= k:
        top = max(deg[v] for v in alive)
        at_top = [v for v in alive if deg[v] == top]
        if len(at_top) >= k:
            break
        for v in at_top:
            alive.discard(v)
            deleted.append(v)
        for v in at_top:
            for u in g.adj[v]:
                if u in alive:
                    deg[u] -= 1
    return make_certificate(g, deleted, k)


@dataclass(frozen=True)
class EqualizationPlan:
    """k vertices of one interval, brought down to the smallest of their
    degrees by removing private neighbours."""

    A: tuple[int, ...]               # v_1..v_k, degrees non-increasing
    degrees: tuple[int, ...]         # d_1..d_k
    M: tuple[int, ...]               # conflict set M(A)
    B: tuple[tuple[int, ...], ...]   # B(v_i): neighbours of v_i only, outside A and M
    t: tuple[int, ...]               # t_i = d_i - d_k

    def deletions(self) -> list[int]:
        return [u for b, ti in zip(self.B, self.t) for u in b[:ti]]


@dataclass(frozen=True)
class ForestRun:
    cert: Certificate
    case: str                        # "equalize" or "greedy"
    top_deleted: tuple[int, ...]
    bucket_deleted: tuple[tuple[int, tuple[int, ...]], ...]
    plan: Optional[EqualizationPlan] = None
    greedy_deleted: tuple[int, ...] = ()
    top_overflow: bool = False
    budget: int = 0


def run_forest_procedure(f: Graph, k: int) -> ForestRun:
    """The degree-interval procedure, with every stage recorded."""
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    _require_forest(f)
    n = f.n
    w = icbrt(n)
    if w < 2 * k - 1:
        raise ValueError(f"need floor(n^(1/3)) >= 2k - 1; n={n} gives {w} < {2 * k - 1}")

    deg = f.degrees()
    alive = set(range(n))

    def remove(vs: Iterable[int]) -> None:
        vs = list(vs)
        for v in vs:
            alive.discard(v)
        for v in vs:
            for u in f.adj[v]:
                if u in alive:
                    deg[u] -= 1

    top = tuple(v for v in range(n) if bucket_index(deg[v], n, w) == TOP)
    overflow = len(top) > w
    if overflow:
        # A forest can hold w + 1 vertices of degree >= n^(2/3) (e.g. n = 63),
        # one more than the interval budget assumes.
        log.warning("top interval holds %d > %d vertices (n=%d)", len(top), w, n)
    remove(top)

    bucket_deleted = []
    plan = None
    greedy_deleted: tuple[int, ...] = ()
    while True:
        index = {v: bucket_index(deg[v], n, w) for v in alive}
        j = max(index.values(), default=0)
        if j == 0:
            break
        members = sorted(v for v in alive if index[v] == j)
        if len(members) >= k:
            plan = _plan(f, alive, deg, members, k)
            break
        bucket_deleted.append((j, tuple(members)))
        remove(members)

    if plan is not None:
        extra = plan.deletions()
        case = "equalize"
    else:
        sub, old = induced_subgraph(f, alive)
        greedy_deleted = tuple(old[v] for v in greedy_fk(sub, k).deleted)
        extra = list(greedy_deleted)
        case = "greedy"

    deleted = list(top) + [v for _, vs in bucket_deleted for v in vs] + list(extra)
    cert = make_certificate(f, deleted, k)
    return ForestRun(
        cert, case, top, tuple(bucket_deleted), plan, greedy_deleted, overflow, (2 * k - 1) * w
    )


def _plan(f: Graph, alive: set[int], deg: list[int], members: list[int], k: int) -> EqualizationPlan:
    chosen = sorted(members, key=lambda v: (-deg[v], v))[:k]
    A = set(chosen)
    M = tuple(sorted(v for v in alive if v not in A and len(f.adj[v] & A) >= 2))
    assert len(M) < k, "conflict set too large for a forest"
    excluded = A | set(M)
    dk = deg[chosen[-1]]
    B = tuple(tuple(sorted(u for u in f.adj[v] if u in alive and u not in excluded)) for v in chosen)
    t = tuple(deg[v] - dk for v in chosen)
    assert all(len(b) >= ti for b, ti in zip(B, t)), "private neighbourhood smaller than the gap"
    return EqualizationPlan(tuple(chosen), tuple(deg[v] for v in chosen), M, B, t)


def forest_fk(f: Graph, k: int) -> Certificate:
    return run_forest_procedure(f, k).cert


def sparse_fk(g: Graph, k: int, beta: float = 0.0) -> Certificate:
    """Delete every vertex of degree >= n^((1 + beta) / 2), then run greedy_fk.

    If e(G) <= c n^(1 + beta) at most 2c n^alpha vertices go in the first
    step and the total stays within (k - 1 + 2c) n^alpha.
    """
    if not 0 <= beta < 1:
        raise ValueError(f"beta must lie in [0, 1), got {beta}")
    threshold = g.n ** ((1 + beta) / 2)
    heavy = [v for v in range(g.n) if g.degree(v) >= threshold]
    sub, old = induced_subgraph(g, [v for v in range(g.n) if g.degree(v) < threshold])
    rest = [old[v] for v in greedy_fk(sub, k).deleted]
    return make_certificate(g, heavy + rest, k)
