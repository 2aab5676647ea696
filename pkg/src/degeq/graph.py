"""Simple undirected graphs on vertices 0..n-1 and the operations shared by
every other module: degree summaries, induced subgraphs, components and
seeded random generators.

Graphs are immutable.  Vertex deletion relabels the surviving vertices
densely in increasing order of their old ids, so the map back to the old
ids is always ``sorted(set(range(n)) - deleted)`` (see :func:`survivors`).
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional


class GraphError(ValueError):
    """Raised for structurally invalid graphs or out-of-range vertex ids."""


@dataclass(frozen=True)
class Graph:
    adj: tuple[frozenset[int], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> "Graph":
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(tuple(frozenset(s) for s in nbrs))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls.from_edges(n)

    @property
    def n(self) -> int:
        return len(self.adj)

    def __len__(self) -> int:
        return len(self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adj]

    def max_degree(self) -> int:
        """Maximum degree; 0 for the empty graph."""
        return max((len(s) for s in self.adj), default=0)

    def min_degree(self) -> int:
        return min((len(s) for s in self.adj), default=0)

    def num_edges(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def masks(self) -> list[int]:
        """Adjacency as one bitmask per vertex."""
        out = []
        for s in self.adj:
            m = 0
            for v in s:
                m |= 1 << v
            out.append(m)
        return out

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def check_graph(g: Graph) -> None:
    """Raise GraphError unless ``g`` satisfies the structural invariants."""
    n = g.n
    for v, nb in enumerate(g.adj):
        if v in nb:
            raise GraphError(f"self-loop at {v}")
        for u in nb:
            if not 0 <= u < n:
                raise GraphError(f"neighbour {u} of {v} out of range")
            if v not in g.adj[u]:
                raise GraphError(f"asymmetric edge {v}->{u}")


@dataclass(frozen=True)
class DegreeView:
    """Degree sequence summary.  ``d1``/``d2``/``diff`` are None when the
    graph has too few vertices for them to exist."""

    degrees: tuple[int, ...]
    sorted: tuple[int, ...]
    d1: Optional[int]
    d2: Optional[int]
    diff: Optional[int]


def degree_view(g: Graph) -> DegreeView:
    degs = tuple(g.degrees())
    srt = tuple(sorted(degs, reverse=True))
    d1 = srt[0] if len(srt) >= 1 else None
    d2 = srt[1] if len(srt) >= 2 else None
    diff = d1 - d2 if d2 is not None else None
    return DegreeView(degs, srt, d1, d2, diff)


def _check_ids(g: Graph, s: Iterable[int]) -> set[int]:
    s = set(s)
    bad = [v for v in s if not (isinstance(v, int) and 0 <= v < g.n)]
    if bad:
        raise GraphError(f"vertex ids out of range for n={g.n}: {sorted(bad)}")
    return s


def survivors(g: Graph, s: Iterable[int]) -> list[int]:
    """Old ids of the vertices kept by ``delete_vertices(g, s)``, indexed by new id."""
    s = _check_ids(g, s)
    return [v for v in range(g.n) if v not in s]


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced on ``keep``, relabelled densely; returns (graph, old ids)."""
    kept = sorted(_check_ids(g, keep))
    new_id = {v: i for i, v in enumerate(kept)}
    adj = tuple(frozenset(new_id[u] for u in g.adj[v] if u in new_id) for v in kept)
    return Graph(adj), kept


def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    """H = G - s with dense relabelling; use :func:`survivors` for the id map."""
    return induced_subgraph(g, survivors(g, s))[0]


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[frozenset[int]] = []
    for h in graphs:
        off = len(adj)
        adj.extend(frozenset(u + off for u in nb) for nb in h.adj)
    return Graph(tuple(adj))


def components(g: Graph) -> list[set[int]]:
    """Connected components, ordered by their smallest vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = {s}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.add(u)
                    queue.append(u)
        out.append(comp)
    return out


def is_forest(g: Graph) -> bool:
    return g.num_edges() == g.n - len(components(g))


# --- standard small graphs -------------------------------------------------

def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def double_star(a: int, b: int) -> Graph:
    """Adjacent centres 0 and 1 of degrees a and b; leaves follow."""
    if a < 1 or b < 1:
        raise GraphError("double star centres need degree >= 1")
    edges = [(0, 1)]
    nxt = 2
    for centre, deg in ((0, a), (1, b)):
        for _ in range(deg - 1):
            edges.append((centre, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


# --- seeded generators -------------------------------------------------------
#
# All generators draw from random.Random(seed) (MT19937 seeded from the
# integer), so a corpus is fixed by (generator, args, seed).

def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p).  Pairs are visited in lexicographic order; the gap to the next
    edge is drawn geometrically, floor(log(1 - r) / log(1 - p)), so the cost is
    O(n + m) and the output matches per-pair Bernoulli(p) trials in law."""
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability {p} outside [0, 1]")
    if p == 0.0 or n < 2:
        return Graph.empty(max(n, 0))
    total = n * (n - 1) // 2
    if p == 1.0:
        return complete(n)
    rng = random.Random(seed)
    lq = math.log1p(-p)
    if lq == 0.0:  # p below float resolution of 1 - p
        return Graph.empty(n)
    edges = []
    # (0, 0) stands for the position just before the first pair (0, 1)
    idx, u, v = -1, 0, 0
    while True:
        gap = math.log1p(-rng.random()) / lq
        if idx + gap + 1 >= total:
            break
        step = int(gap) + 1
        idx += step
        if idx >= total:
            break
        v += step
        while v >= n:
            u += 1
            v = v - n + u + 1
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def random_forest(n: int, seed: int, root_prob: float = 0.05) -> Graph:
    """Random forest grown by preferential attachment.

    Vertex i >= 1 starts a new tree with probability ``root_prob``; otherwise
    it attaches to an earlier vertex chosen with probability proportional to
    (degree + 1).  This yields heavy-tailed degrees, so hubs appear at all
    sizes.
    """
    rng = random.Random(seed)
    edges = []
    # each vertex appears once, plus once per incident edge
    pool: list[int] = [0] if n > 0 else []
    for i in range(1, n):
        if rng.random() >= root_prob:
            parent = pool[int(rng.random() * len(pool))]
            edges.append((parent, i))
            pool.append(parent)
            pool.append(i)
        pool.append(i)
    return Graph.from_edges(n, edges)


def random_bounded_degree(n: int, max_degree: int, p: float, seed: int) -> Graph:
    """Visit all pairs in a random order and add each with probability ``p``
    if both endpoints are still below ``max_degree``."""
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    deg = [0] * n
    edges = []
    for u, v in pairs:
        if deg[u] < max_degree and deg[v] < max_degree and rng.random() < p:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph.from_edges(n, edges)


def all_graphs(n: int) -> Iterable[Graph]:
    """Every labelled graph on n vertices; edge set i uses the bits of i over
    the lexicographic pair list."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])
