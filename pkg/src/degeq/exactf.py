"""Exact f(G) = f_2(G): fewest deletions leaving two vertices at the maximum degree.

f(G) = min_j (diff(G_j) + j), where G_0 = G and G_{j+1} is G_j minus its
(unique, whenever diff(G_j) > 0) maximum-degree vertex.  The scan stops at
the first j with diff(G_j) = 0 since every later term is at least j + 1.
Degrees live in buckets indexed by degree, so each step costs
O(deg(v) + n) and the whole run O(n^2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .certificate import Certificate, make_certificate, verify_certificate
from .graph import Graph, GraphError, induced_subgraph

__all__ = [
    "Certificate",
    "DeletionTrace",
    "ExactResult",
    "TraceStep",
    "diff_upper_bound",
    "exact_f",
    "verify_certificate",
]


@dataclass(frozen=True)
class TraceStep:
    j: int
    # v_{1,j}: removed to form G_{j+1}; None on the step where the scan stops
    deleted_vertex: Optional[int]
    d1: int
    d2: int
    diff: int


@dataclass(frozen=True)
class DeletionTrace:
    steps: tuple[TraceStep, ...]
    jstar: int
    value: int

    def to_dict(self) -> dict:
        return {
            "steps": [
                {"j": s.j, "deleted_vertex": s.deleted_vertex, "d1": s.d1, "d2": s.d2, "diff": s.diff}
                for s in self.steps
            ],
            "jstar": self.jstar,
            "value": self.value,
        }


class ExactResult(NamedTuple):
    value: int
    trace: DeletionTrace
    cert: Certificate


def diff_upper_bound(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Return (diff(G), S) where deleting S leaves two vertices at the new maximum.

    With v of degree d1 and u of degree d2, S is taken from N(v) minus N(u)
    and u, which always has at least d1 - d2 members.
    """
    if g.n < 2:
        raise GraphError("diff is defined for graphs with at least 2 vertices")
    degs = g.degrees()
    v = max(range(g.n), key=lambda x: (degs[x], -x))
    u = max((x for x in range(g.n) if x != v), key=lambda x: (degs[x], -x))
    diff = degs[v] - degs[u]
    if diff == 0:
        return 0, ()
    pool = sorted(g.adj[v] - g.adj[u] - {u})
    return diff, tuple(pool[:diff])


def exact_f(g: Graph) -> ExactResult:
    n = g.n
    if n <= 1:
        return ExactResult(0, DeletionTrace((), 0, 0), make_certificate(g, (), 2))

    deg = g.degrees()
    top = max(deg)
    buckets: list[set[int]] = [set() for _ in range(top + 1)]
    for v, d in enumerate(deg):
        buckets[d].add(v)
    alive = [True] * n

    steps = []
    for j in range(n - 1):
        while not buckets[top]:
            top -= 1
        d1 = top
        if len(buckets[d1]) >= 2:
            d2 = d1
        else:
            d2 = d1 - 1
            while not buckets[d2]:
                d2 -= 1
        diff = d1 - d2
        if diff == 0 or j == n - 2:
            steps.append(TraceStep(j, None, d1, d2, diff))
            break
        (v,) = buckets[d1]
        steps.append(TraceStep(j, v, d1, d2, diff))
        buckets[d1].discard(v)
        alive[v] = False
        for u in g.adj[v]:
            if alive[u]:
                buckets[deg[u]].discard(u)
                deg[u] -= 1
                buckets[deg[u]].add(u)

    jstar = min(range(len(steps)), key=lambda i: (steps[i].diff + i, i))
    value = steps[jstar].diff + jstar
    trace = DeletionTrace(tuple(steps), jstar, value)

    removed = [steps[i].deleted_vertex for i in range(jstar)]
    gone = set(removed)
    sub, old = induced_subgraph(g, [v for v in range(n) if v not in gone])
    _, witness = diff_upper_bound(sub)
    cert = make_certificate(g, removed + [old[w] for w in witness], 2)
    return ExactResult(value, trace, cert)
